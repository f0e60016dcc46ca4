#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adjhopf {

// One verification row of the reference-values suite.  Each row pins exact
// expected values (dimensions, coefficient lists, boolean identities) and a
// wall-clock budget; `pass` requires both.
struct AcceptanceRow {
    int id = 0;
    std::string suite;
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
    double wall_ms = 0.0;
    double budget_ms = 0.0;
};

std::vector<std::string> acceptance_suites();

/// Runs the rows of one suite ("all" for everything).  Randomized rows use
/// the given seed, so identical invocations produce identical reports.
std::vector<AcceptanceRow> run_acceptance(const std::string& suite, uint64_t seed = 20110);

} // namespace adjhopf

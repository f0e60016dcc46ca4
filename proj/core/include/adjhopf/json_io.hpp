#pragma once

#include <json.hpp>

#include "adjhopf/cohomology.hpp"
#include "adjhopf/groupoid.hpp"

namespace adjhopf {

// JSON schemas are documented in docs/schemas/.  Scalars serialize as
// "num/den" strings over Q ("/1" omitted) and as bare integers over F_p;
// both round-trip bit-exactly.

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldSpec& f, const nlohmann::json& j);

nlohmann::json algebra_to_json(const HopfAlgebra& h);
HopfAlgebra algebra_from_json(const nlohmann::json& j);

nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

/// (row, col, scalar) triples plus shape, for --dump-matrix.
nlohmann::json matrix_to_json(const LinearMap& m);

nlohmann::json cochain_to_json(const HopfAlgebra& h, const Cochain& c);

/// Resolves "builtin:kg:<group>", "builtin:fun:<group>", "builtin:superline"
/// or a JSON file path.  <group> is "c<n>", "s<n>", "d<n>" or a file path.
HopfAlgebra load_algebra(const std::string& source, const FieldSpec& field);

/// Resolves "c<n>" / "s<n>" / "d<n>" or a JSON file path.
FiniteGroup load_group(const std::string& source);

} // namespace adjhopf

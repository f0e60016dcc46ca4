#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "adjhopf/acceptance.hpp"
#include "adjhopf/deformation.hpp"
#include "adjhopf/json_io.hpp"
#include "adjhopf/version.hpp"

namespace adjhopf::cli {

namespace {

using ordered_json = nlohmann::json;

// Common flags shared by the algebra-centric subcommands.
struct AlgebraArgs {
    std::string algebra;
    std::string field = "Q";
    std::string output = "json";
    bool dump_matrix = false;
};

void add_common(CLI::App* cmd, AlgebraArgs& a, bool with_dump = true) {
    cmd->add_option("--algebra", a.algebra,
                    "builtin:kg:<group> | builtin:fun:<group> | builtin:superline | JSON file")
        ->required();
    cmd->add_option("--field", a.field, "coefficient field, Q or Fp:<p> (default Q)");
    cmd->add_option("--output", a.output, "text | json (default json)")
        ->check(CLI::IsMember({"text", "json"}));
    if (with_dump) {
        cmd->add_flag("--dump-matrix", a.dump_matrix,
                      "include the relevant matrix as (row, col, scalar) triples");
    }
}

std::string combo_string(const std::vector<std::string>& labels, const SparseVec& v) {
    if (v.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [i, c] : v) {
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (cs != "1") out += cs + "*";
        out += labels[i];
        first = false;
    }
    return out;
}

// The row/column table layout used for ad and for 2-cochains.
void print_pair_table(std::ostream& os, const HopfAlgebra& h, const LinearMap& m,
                      const std::string& corner) {
    const uint32_t d = h.dim();
    const auto& labels = h.basis_labels();
    std::vector<std::vector<std::string>> cells(d + 1, std::vector<std::string>(d + 1));
    cells[0][0] = corner;
    for (uint32_t j = 0; j < d; ++j) cells[0][j + 1] = labels[j];
    for (uint32_t i = 0; i < d; ++i) {
        cells[i + 1][0] = labels[i];
        for (uint32_t j = 0; j < d; ++j) {
            cells[i + 1][j + 1] = combo_string(labels, m.matrix().col(i * d + j));
        }
    }
    std::vector<size_t> width(d + 1, 0);
    for (const auto& row : cells) {
        for (uint32_t j = 0; j <= d; ++j) width[j] = std::max(width[j], row[j].size());
    }
    for (uint32_t i = 0; i <= d; ++i) {
        for (uint32_t j = 0; j <= d; ++j) {
            os << std::left << std::setw(static_cast<int>(width[j]) + 2) << cells[i][j];
            if (j == 0) os << "| ";
        }
        os << "\n";
        if (i == 0) {
            for (uint32_t j = 0; j <= d; ++j) {
                os << std::string(width[j] + 2, '-') << (j == 0 ? "+-" : "");
            }
            os << "\n";
        }
    }
}

ordered_json poly_json(const Poly& p) {
    ordered_json out = ordered_json::array();
    for (const auto& c : p) out.push_back(scalar_to_json(c));
    return out;
}

struct CommandResult {
    ordered_json inputs;
    ordered_json result;
    std::string text; // human-readable rendering
};

void emit(std::ostream& out, const std::string& subcommand, const std::string& mode,
          const CommandResult& r, double wall_ms) {
    if (mode == "text") {
        out << r.text;
        return;
    }
    ordered_json envelope;
    envelope["subcommand"] = subcommand;
    envelope["inputs"] = r.inputs;
    envelope["version"] = kVersion;
    envelope["result"] = r.result;
    envelope["wall_ms"] = wall_ms;
    out << envelope.dump(2) << "\n";
}

CommandResult cmd_check(const AlgebraArgs& a) {
    CommandResult r;
    const FieldSpec f = FieldSpec::parse(a.field);
    HopfAlgebra h = load_algebra(a.algebra, f);
    r.inputs = {{"algebra", a.algebra}, {"field", f.to_string()}};
    const AxiomReport& rep = h.axiom_report();
    ordered_json axioms = ordered_json::array();
    std::ostringstream text;
    text << "algebra " << a.algebra << " over " << f.to_string() << " (dim " << h.dim() << ")\n";
    for (const auto& c : rep.checks) {
        axioms.push_back(ordered_json{
            {"axiom", c.axiom}, {"ok", c.ok}, {"witness", c.witness}});
        text << "  " << (c.ok ? "ok   " : "FAIL ") << c.axiom;
        if (!c.ok) text << "  at " << c.witness;
        text << "\n";
    }
    r.result = {{"dim", h.dim()}, {"hopf", rep.all_ok()}, {"axioms", axioms}};
    text << (rep.all_ok() ? "all axioms hold\n" : "not a Hopf algebra\n");
    r.text = text.str();
    return r;
}

CommandResult cmd_ad_table(const AlgebraArgs& a) {
    CommandResult r;
    const FieldSpec f = FieldSpec::parse(a.field);
    HopfAlgebra h = load_algebra(a.algebra, f);
    r.inputs = {{"algebra", a.algebra}, {"field", f.to_string()}};
    LinearMap ad = adjoint_map(h);
    ordered_json table;
    for (uint32_t i = 0; i < h.dim(); ++i) {
        for (uint32_t j = 0; j < h.dim(); ++j) {
            const SparseVec& col = ad.matrix().col(i * h.dim() + j);
            if (col.empty()) continue;
            table[h.basis_labels()[i] + "," + h.basis_labels()[j]] =
                combo_string(h.basis_labels(), col);
        }
    }
    r.result = {{"labels", h.basis_labels()}, {"ad", table}};
    if (a.dump_matrix) r.result["matrix"] = matrix_to_json(ad);
    std::ostringstream text;
    text << "ad(row (x) col) for " << a.algebra << " over " << f.to_string() << "\n\n";
    print_pair_table(text, h, ad, "ad");
    r.text = text.str();
    return r;
}

CommandResult cmd_ybe(const AlgebraArgs& a) {
    CommandResult r;
    const FieldSpec f = FieldSpec::parse(a.field);
    HopfAlgebra h = load_algebra(a.algebra, f);
    r.inputs = {{"algebra", a.algebra}, {"field", f.to_string()}};
    LinearMap rm = r_matrix(h);
    const bool ybe = check_ybe(rm);
    LinearMap rinv = r_matrix_inverse(h);
    const LinearMap id2 = LinearMap::identity(f, h.dim(), 2);
    const bool inverse_ok = compose(rinv, rm) == id2 && compose(rm, rinv) == id2;
    r.result = {{"ybe", ybe}, {"inverse_ok", inverse_ok}};
    if (a.dump_matrix) r.result["matrix"] = matrix_to_json(rm);
    std::ostringstream text;
    text << "R_ad for " << a.algebra << ": ybe=" << (ybe ? "true" : "false")
         << " inverse_ok=" << (inverse_ok ? "true" : "false") << "\n";
    r.text = text.str();
    return r;
}

CommandResult cmd_charpoly(const AlgebraArgs& a) {
    CommandResult r;
    const FieldSpec f = FieldSpec::parse(a.field);
    HopfAlgebra h = load_algebra(a.algebra, f);
    r.inputs = {{"algebra", a.algebra}, {"field", f.to_string()}};
    LinearMap rm = r_matrix(h);
    const Scalar d = det(rm);
    const Poly cp = char_poly(rm);
    const Poly mp = min_poly(rm);
    r.result = {{"det", scalar_to_json(d)},
                {"char_poly", poly_json(cp)},
                {"char_poly_factored", poly_factored_string(cp, "x")},
                {"min_poly", poly_json(mp)},
                {"min_poly_factored", poly_factored_string(mp, "x")}};
    if (a.dump_matrix) r.result["matrix"] = matrix_to_json(rm);
    std::ostringstream text;
    text << "R_ad of " << a.algebra << " over " << f.to_string() << "\n"
         << "  det        = " << d.to_string() << "\n"
         << "  char poly  = " << poly_factored_string(cp, "x") << "\n"
         << "             = " << poly_to_string(cp, "x") << "\n"
         << "  min poly   = " << poly_factored_string(mp, "x") << "\n"
         << "             = " << poly_to_string(mp, "x") << "\n";
    r.text = text.str();
    return r;
}

CommandResult cmd_cohomology(const AlgebraArgs& a, int degree, bool with_basis, bool force) {
    CommandResult r;
    const FieldSpec f = FieldSpec::parse(a.field);
    HopfAlgebra h = load_algebra(a.algebra, f);
    r.inputs = {{"algebra", a.algebra},
                {"field", f.to_string()},
                {"degree", degree},
                {"basis", with_basis}};
    CohomologyReport rep = cohomology(h, degree, {.with_basis = with_basis, .force = force});
    r.result = {{"degree", rep.degree},
                {"dimC", rep.dim_c},
                {"dimZ", rep.dim_z},
                {"dimB", rep.dim_b},
                {"dimH", rep.dim_h}};
    if (with_basis) {
        ordered_json basis = ordered_json::array();
        for (const auto& c : rep.basis) basis.push_back(cochain_to_json(h, c));
        r.result["basis"] = basis;
    }
    std::ostringstream text;
    text << "adjoint cohomology of " << a.algebra << " over " << f.to_string() << ", degree "
         << degree << "\n"
         << "  dim C = " << rep.dim_c << ", dim Z = " << rep.dim_z << ", dim B = " << rep.dim_b
         << ", dim H = " << rep.dim_h << "\n";
    if (with_basis && degree == 2) {
        int k = 0;
        for (const auto& c : rep.basis) {
            text << "\ncocycle " << ++k << ":\n";
            print_pair_table(text, h, c.blocks[0], "phi");
        }
    }
    r.text = text.str();
    return r;
}

CommandResult cmd_deform(const AlgebraArgs& a, int index, int combos, uint64_t seed) {
    CommandResult r;
    const FieldSpec f = FieldSpec::parse(a.field);
    HopfAlgebra h = load_algebra(a.algebra, f);
    r.inputs = {{"algebra", a.algebra},
                {"field", f.to_string()},
                {"cocycle_index", index},
                {"random_combos", combos}};
    CohomologyReport rep = cohomology(h, 2, {.with_basis = true});
    if (index < 0 || static_cast<uint32_t>(index) >= rep.dim_z) {
        fail("IndexOutOfRange", "cocycle index " + std::to_string(index) +
                                    " out of range (dim Z^2 = " + std::to_string(rep.dim_z) + ")");
    }
    const Cochain& phi = rep.basis[index];
    const bool ybe = check_deformed_ybe(h, phi);
    Residuals res = residuals(h, phi);
    auto entry_count = [](const LinearMap& m) { return m.matrix().nnz(); };
    r.result = {{"ybe", ybe},
                {"residual_norms",
                 ordered_json::array({entry_count(res.xi1), entry_count(res.xi2)})}};
    if (combos > 0) {
        std::mt19937_64 rng(seed);
        bool all = true;
        for (int t = 0; t < combos; ++t) {
            LinearMap m(f, h.dim(), 2, 1);
            bool nonzero = false;
            for (const auto& c : rep.basis) {
                long k = static_cast<long>(rng() % 7) - 3;
                nonzero = nonzero || k != 0;
                m = m + c.blocks[0].scaled(Scalar::of(f, k));
            }
            if (!nonzero && rep.dim_z > 0) m = rep.basis[0].blocks[0];
            all = all && check_deformed_ybe(h, Cochain{2, {m}});
        }
        r.result["random_combos"] = ordered_json{{"count", combos}, {"all_ybe", all}};
    }
    std::ostringstream text;
    text << "deformation of " << a.algebra << " by Z^2 basis cocycle " << index << ":\n"
         << "  deformed YBE: " << (ybe ? "true" : "false") << "\n"
         << "  residual nonzero entries: (" << entry_count(res.xi1) << ", "
         << entry_count(res.xi2) << ")\n";
    r.text = text.str();
    return r;
}

CommandResult cmd_groupoid(const std::string& group, const std::string& field, int degree,
                           bool with_basis) {
    CommandResult r;
    const FieldSpec f = FieldSpec::parse(field);
    FiniteGroup g = load_group(group);
    r.inputs = {{"group", group}, {"field", f.to_string()}, {"degree", degree}};
    FiniteGroupoid gpd = conjugate_groupoid(g);
    SubspaceBasis basis = groupoid_cocycle_space(gpd, degree, f);
    r.result = {{"dim", basis.dim()}};
    std::ostringstream text;
    text << "conjugate groupoid of " << group << ", degree-" << degree << " cocycles over "
         << f.to_string() << ": dim = " << basis.dim() << "\n";
    if (with_basis) {
        const auto gens = chain_generators(gpd, static_cast<uint32_t>(degree) - 1);
        ordered_json jb = ordered_json::array();
        for (const auto& v : basis.vectors) {
            ordered_json entry;
            for (const auto& [i, c] : v) {
                std::string key = gpd.objects()[gens[i][0]];
                for (size_t m = 1; m < gens[i].size(); ++m) {
                    key += ";" + gpd.morphism(gens[i][m]).label;
                }
                entry[key] = scalar_to_json(c);
            }
            jb.push_back(entry);
        }
        r.result["basis"] = jb;
    }
    r.text = text.str();
    return r;
}

CommandResult cmd_quandle(const std::string& group, const std::string& field, int degree) {
    CommandResult r;
    const FieldSpec f = FieldSpec::parse(field);
    FiniteGroup g = load_group(group);
    r.inputs = {{"group", group}, {"field", f.to_string()}, {"degree", degree}};
    if (degree != 2 && degree != 3) {
        fail("UnsupportedDegree", "quandle cocycles are produced for degrees 2 and 3");
    }
    FiniteGroupoid gpd = conjugate_groupoid(g);
    SubspaceBasis basis = groupoid_cocycle_space(gpd, degree, f);
    const uint32_t n = g.order();
    ordered_json cocycles = ordered_json::array();
    std::ostringstream text;
    text << (degree == 2 ? "rack 2-cocycles psi" : "rack 3-cocycles theta") << " from "
         << "conjugate-groupoid cocycles of " << group << " over " << f.to_string() << " ("
         << basis.dim() << " basis vectors)\n";
    for (const auto& v : basis.vectors) {
        const size_t len = degree == 2 ? size_t(n) * n : size_t(n) * n * n;
        std::vector<Scalar> dense(len, Scalar::zero(f));
        for (const auto& [i, c] : v) dense[i] = c;
        std::vector<Scalar> out =
            degree == 2 ? rack_2cocycle_from(g, dense) : rack_3cocycle_from(g, dense);
        ordered_json table;
        for (uint32_t i = 0; i < out.size(); ++i) {
            if (out[i].is_zero()) continue;
            std::string key;
            if (degree == 2) {
                key = g.label(i / n) + "," + g.label(i % n);
            } else {
                key = g.label(i / (n * n)) + "," + g.label((i / n) % n) + "," + g.label(i % n);
            }
            table[key] = scalar_to_json(out[i]);
            text << "  " << (degree == 2 ? "psi" : "theta") << "(" << key
                 << ") = " << out[i].to_string() << "\n";
        }
        cocycles.push_back(table);
        text << "  --\n";
    }
    r.result = {{"degree", degree}, {"count", basis.dim()}, {"cocycles", cocycles}};
    r.text = text.str();
    return r;
}

CommandResult cmd_accept(const std::string& suite, uint64_t seed, int* exit_code) {
    CommandResult r;
    r.inputs = {{"suite", suite}, {"seed", seed}};
    auto rows = run_acceptance(suite, seed);
    ordered_json jr = ordered_json::array();
    std::ostringstream text;
    int fails = 0;
    for (const auto& row : rows) {
        fails += row.pass ? 0 : 1;
        jr.push_back(ordered_json{{"id", row.id},
                                  {"suite", row.suite},
                                  {"name", row.name},
                                  {"expected", row.expected},
                                  {"computed", row.computed},
                                  {"pass", row.pass},
                                  {"wall_ms", row.wall_ms}});
        text << (row.pass ? "[PASS] " : "[FAIL] ") << row.id << ". " << row.name << "\n"
             << "       expected: " << row.expected << "\n"
             << "       computed: " << row.computed << "\n";
    }
    text << rows.size() - fails << "/" << rows.size() << " rows pass\n";
    r.result = {{"rows", jr}, {"total", rows.size()}, {"failed", fails}};
    r.text = text.str();
    *exit_code = fails == 0 ? 0 : 1;
    return r;
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact adjoint cohomology, Yang-Baxter and quandle-cocycle toolkit"};
    app.name("adjhopf");
    app.require_subcommand(1);

    AlgebraArgs check_a, ad_a, ybe_a, char_a, coh_a, def_a;
    int coh_degree = 2;
    bool coh_basis = false, coh_force = false;
    int def_index = 0, def_combos = 0;
    uint64_t def_seed = 20110, acc_seed = 20110;
    std::string gp_group, gp_field = "Q", gp_output = "json";
    int gp_degree = 2;
    bool gp_basis = false;
    std::string qg_group, qg_field = "Q", qg_output = "json";
    int qg_degree = 2;
    std::string acc_suite = "all", acc_output = "text";

    add_common(app.add_subcommand("check", "verify the Hopf axioms"), check_a, false);
    add_common(app.add_subcommand("ad-table", "print the adjoint map"), ad_a);
    add_common(app.add_subcommand("ybe", "verify R_ad against the YBE and its inverse"), ybe_a);
    add_common(app.add_subcommand("charpoly",
                                  "determinant, characteristic and minimal polynomial of R_ad"),
               char_a);

    auto* coh = app.add_subcommand("cohomology", "adjoint cohomology dimensions");
    add_common(coh, coh_a, false);
    coh->add_option("--degree", coh_degree, "degree 1, 2 or 3")->required();
    coh->add_flag("--basis", coh_basis, "include a cocycle basis");
    coh->add_flag("--force", coh_force, "override the degree-3 size policy");

    auto* def = app.add_subcommand("deform", "first-order deformation by a 2-cocycle");
    add_common(def, def_a, false);
    def->add_option("--cocycle-index", def_index, "index into the Z^2 basis")->required();
    def->add_option("--random-combos", def_combos, "also try n random cocycle combinations");
    def->add_option("--seed", def_seed, "seed for the random combinations");

    auto* gp = app.add_subcommand("groupoid", "conjugate-groupoid cocycle spaces");
    gp->add_option("--group", gp_group, "c<n> | s<n> | d<n> | JSON file")->required();
    gp->add_option("--field", gp_field, "coefficient field");
    gp->add_option("--degree", gp_degree, "degree 1, 2 or 3");
    gp->add_flag("--basis", gp_basis, "include the cocycle basis");
    gp->add_option("--output", gp_output, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto* qg = app.add_subcommand("quandle-from-groupoid",
                                  "rack/quandle cocycles from groupoid cocycles");
    qg->add_option("--group", qg_group, "c<n> | s<n> | d<n> | JSON file")->required();
    qg->add_option("--field", qg_field, "coefficient field");
    qg->add_option("--degree", qg_degree, "2 (psi) or 3 (theta)");
    qg->add_option("--output", qg_output, "text | json")->check(CLI::IsMember({"text", "json"}));

    auto* acc = app.add_subcommand("accept", "run the reference-values verification suite");
    std::vector<std::string> suite_names = acceptance_suites();
    suite_names.push_back("all");
    acc->add_option("suite", acc_suite, "all or one of the named suites")
        ->check(CLI::IsMember(suite_names));
    acc->add_option("--seed", acc_seed, "seed for randomized rows");
    acc->add_option("--output", acc_output, "text | json")
        ->check(CLI::IsMember({"text", "json"}));

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&t0] {
        return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };

    try {
        if (app.got_subcommand("check")) {
            emit(out, "check", check_a.output, cmd_check(check_a), elapsed());
        } else if (app.got_subcommand("ad-table")) {
            emit(out, "ad-table", ad_a.output, cmd_ad_table(ad_a), elapsed());
        } else if (app.got_subcommand("ybe")) {
            emit(out, "ybe", ybe_a.output, cmd_ybe(ybe_a), elapsed());
        } else if (app.got_subcommand("charpoly")) {
            emit(out, "charpoly", char_a.output, cmd_charpoly(char_a), elapsed());
        } else if (app.got_subcommand("cohomology")) {
            emit(out, "cohomology", coh_a.output,
                 cmd_cohomology(coh_a, coh_degree, coh_basis, coh_force), elapsed());
        } else if (app.got_subcommand("deform")) {
            emit(out, "deform", def_a.output, cmd_deform(def_a, def_index, def_combos, def_seed),
                 elapsed());
        } else if (app.got_subcommand("groupoid")) {
            emit(out, "groupoid", gp_output, cmd_groupoid(gp_group, gp_field, gp_degree, gp_basis),
                 elapsed());
        } else if (app.got_subcommand("quandle-from-groupoid")) {
            emit(out, "quandle-from-groupoid", qg_output,
                 cmd_quandle(qg_group, qg_field, qg_degree), elapsed());
        } else if (app.got_subcommand("accept")) {
            int code = 0;
            emit(out, "accept", acc_output, cmd_accept(acc_suite, acc_seed, &code), elapsed());
            return code;
        }
        return 0;
    } catch (const Error& e) {
        ordered_json j{{"error", {{"code", e.code()}, {"message", e.what()}}}};
        out << j.dump(2) << "\n";
        return 1;
    }
}

} // namespace adjhopf::cli

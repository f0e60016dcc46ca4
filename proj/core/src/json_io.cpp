#include "adjhopf/json_io.hpp"

#include <fstream>

namespace adjhopf {

using nlohmann::json;

json scalar_to_json(const Scalar& s) {
    if (s.field().is_prime_field()) return s.residue();
    return s.to_string();
}

Scalar scalar_from_json(const FieldSpec& f, const json& j) {
    if (j.is_number_integer()) return Scalar::of(f, j.get<long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    fail("ParseError", "scalar must be an integer or a \"num/den\" string");
}

namespace {

json vector_to_json(const FieldSpec& f, const SparseVec& v, uint32_t dim) {
    json out = json::array();
    for (uint32_t i = 0; i < dim; ++i) out.push_back(scalar_to_json(sv_get(v, i, f)));
    return out;
}

SparseVec vector_from_json(const FieldSpec& f, const json& j) {
    if (!j.is_array()) fail("ParseError", "expected a coefficient array");
    std::vector<std::pair<uint32_t, Scalar>> terms;
    for (uint32_t i = 0; i < j.size(); ++i) {
        Scalar s = scalar_from_json(f, j[i]);
        if (!s.is_zero()) terms.emplace_back(i, s);
    }
    return sv_compress(std::move(terms));
}

} // namespace

json algebra_to_json(const HopfAlgebra& h) {
    const FieldSpec f = h.field();
    const uint32_t d = h.dim();
    json out;
    out["field"] = f.to_string();
    out["dim"] = d;
    out["labels"] = h.basis_labels();

    json mu = json::array();
    for (uint32_t i = 0; i < d; ++i) {
        json row = json::array();
        for (uint32_t j = 0; j < d; ++j) {
            row.push_back(vector_to_json(f, h.mu().matrix().col(i * d + j), d));
        }
        mu.push_back(row);
    }
    out["mu"] = mu;

    json delta = json::array();
    for (uint32_t i = 0; i < d; ++i) {
        delta.push_back(vector_to_json(f, h.delta().matrix().col(i), d * d));
    }
    out["delta"] = delta;

    out["unit"] = vector_to_json(f, h.unit_vector(), d);

    json counit = json::array();
    for (uint32_t i = 0; i < d; ++i) counit.push_back(scalar_to_json(h.counit().entry(0, i)));
    out["counit"] = counit;

    json antipode = json::array();
    for (uint32_t i = 0; i < d; ++i) {
        antipode.push_back(vector_to_json(f, h.antipode().matrix().col(i), d));
    }
    out["antipode"] = antipode;
    return out;
}

HopfAlgebra algebra_from_json(const json& j) {
    if (!j.is_object()) fail("ParseError", "algebra JSON must be an object");
    for (const char* key : {"field", "dim", "labels", "mu", "delta", "unit", "counit", "antipode"}) {
        if (!j.contains(key)) fail("ParseError", std::string("algebra JSON missing '") + key + "'");
    }
    const FieldSpec f = FieldSpec::parse(j["field"].get<std::string>());
    const uint32_t d = j["dim"].get<uint32_t>();
    if (d == 0) fail("MalformedAlgebra", "dim must be positive");
    std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();

    if (!j["mu"].is_array() || j["mu"].size() != d) fail("ParseError", "mu must be a d x d table");
    LinearMap mu(f, d, 2, 1);
    for (uint32_t a = 0; a < d; ++a) {
        if (!j["mu"][a].is_array() || j["mu"][a].size() != d) {
            fail("ParseError", "mu must be a d x d table");
        }
        for (uint32_t b = 0; b < d; ++b) {
            mu.matrix().set_col(a * d + b, vector_from_json(f, j["mu"][a][b]));
        }
    }

    if (!j["delta"].is_array() || j["delta"].size() != d) {
        fail("ParseError", "delta must list d tensor coefficient vectors");
    }
    LinearMap delta(f, d, 1, 2);
    for (uint32_t i = 0; i < d; ++i) {
        SparseVec col = vector_from_json(f, j["delta"][i]);
        for (const auto& [k, v] : col) {
            if (k >= d * d) fail("ParseError", "delta coefficients exceed d^2");
        }
        delta.matrix().set_col(i, col);
    }

    SparseVec unit = vector_from_json(f, j["unit"]);

    LinearMap counit(f, d, 1, 0);
    if (!j["counit"].is_array() || j["counit"].size() != d) {
        fail("ParseError", "counit must be a length-d vector");
    }
    for (uint32_t i = 0; i < d; ++i) {
        counit.set_entry(0, i, scalar_from_json(f, j["counit"][i]));
    }

    if (!j["antipode"].is_array() || j["antipode"].size() != d) {
        fail("ParseError", "antipode must be a d x d matrix");
    }
    LinearMap antipode(f, d, 1, 1);
    for (uint32_t i = 0; i < d; ++i) {
        antipode.matrix().set_col(i, vector_from_json(f, j["antipode"][i]));
    }

    return HopfAlgebra(f, std::move(labels), std::move(mu), std::move(delta), std::move(unit),
                       std::move(counit), std::move(antipode));
}

json group_to_json(const FiniteGroup& g) {
    json out;
    out["order"] = g.order();
    out["labels"] = g.labels();
    out["table"] = g.table();
    return out;
}

FiniteGroup group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("order") || !j.contains("table")) {
        fail("ParseError", "group JSON needs 'order' and 'table'");
    }
    const uint32_t n = j["order"].get<uint32_t>();
    auto table = j["table"].get<std::vector<std::vector<uint32_t>>>();
    if (table.size() != n) fail("ParseError", "table size does not match order");
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = j["labels"].get<std::vector<std::string>>();
    } else {
        for (uint32_t i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    }
    return FiniteGroup(std::move(labels), std::move(table));
}

json matrix_to_json(const LinearMap& m) {
    json triples = json::array();
    for (uint32_t j = 0; j < m.in_dim(); ++j) {
        for (const auto& [i, v] : m.matrix().col(j)) {
            triples.push_back(json::array({i, j, scalar_to_json(v)}));
        }
    }
    return json{{"rows", m.out_dim()},
                {"cols", m.in_dim()},
                {"in_arity", m.in_arity()},
                {"out_arity", m.out_arity()},
                {"entries", triples}};
}

json cochain_to_json(const HopfAlgebra& h, const Cochain& c) {
    json blocks = json::array();
    for (const auto& b : c.blocks) blocks.push_back(matrix_to_json(b));
    (void)h;
    return json{{"degree", c.degree}, {"blocks", blocks}};
}

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("ParseError", "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        fail("ParseError", "invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

} // namespace

FiniteGroup load_group(const std::string& source) {
    if (!source.empty() && (source[0] == 'c' || source[0] == 's' || source[0] == 'd') &&
        source.find('.') == std::string::npos && source.find('/') == std::string::npos) {
        return FiniteGroup::from_spec(source);
    }
    return group_from_json(load_json_file(source));
}

HopfAlgebra load_algebra(const std::string& source, const FieldSpec& field) {
    const std::string prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) {
        const std::string rest = source.substr(prefix.size());
        if (rest == "superline") return superline(field);
        if (rest.rfind("kg:", 0) == 0) return group_algebra(load_group(rest.substr(3)), field);
        if (rest.rfind("fun:", 0) == 0) return function_algebra(load_group(rest.substr(4)), field);
        fail("ParseError", "unknown builtin '" + source + "'");
    }
    HopfAlgebra h = algebra_from_json(load_json_file(source));
    if (!(h.field() == field)) {
        fail("FieldMismatch", "algebra file is over " + h.field().to_string() +
                                  " but the requested field is " + field.to_string());
    }
    return h;
}

} // namespace adjhopf

#include "adjhopf/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace adjhopf {

Poly poly_trim(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int poly_deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), Scalar());
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.size() && i < b.size()) {
            out[i] = a[i] + b[i];
        } else if (i < a.size()) {
            out[i] = a[i];
        } else {
            out[i] = b[i];
        }
    }
    return poly_trim(out);
}

Poly poly_sub(const Poly& a, const Poly& b) {
    if (b.empty()) return a;
    return poly_add(a, poly_scale(b, -Scalar::one(b.front().field())));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, Scalar::zero(a.front().field()));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return poly_trim(out);
}

Poly poly_scale(const Poly& a, const Scalar& c) {
    if (c.is_zero()) return {};
    Poly out(a.size(), Scalar());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return poly_trim(out);
}

Poly poly_monic(const Poly& a) {
    if (a.empty()) return a;
    return poly_scale(a, a.back().inverse());
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
    if (den.empty()) fail("DivisionByZero", "polynomial division by zero");
    Poly rem = num;
    if (rem.size() < den.size()) return {{}, rem};
    Poly quot(rem.size() - den.size() + 1, Scalar::zero(den.front().field()));
    const Scalar lead_inv = den.back().inverse();
    for (size_t k = quot.size(); k-- > 0;) {
        if (rem.size() < den.size() + k) continue;
        Scalar c = rem[den.size() - 1 + k] * lead_inv;
        if (c.is_zero()) continue;
        quot[k] = c;
        for (size_t j = 0; j < den.size(); ++j) rem[j + k] -= c * den[j];
    }
    return {poly_trim(quot), poly_trim(rem)};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.empty()) {
        Poly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return poly_monic(x);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly g = poly_gcd(a, b);
    return poly_monic(poly_divmod(poly_mul(a, b), g).first);
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
    Scalar acc = Scalar::zero(x.field());
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

bool poly_eq(const Poly& a, const Poly& b) { return poly_trim(a) == poly_trim(b); }

std::string poly_to_string(const Poly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.size(); i-- > 0;) {
        const Scalar& c = p[i];
        if (c.is_zero()) continue;
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (neg) cs = cs.substr(1);
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Enumerates monic factor candidates of low degree for display purposes.
std::vector<Poly> factor_candidates(const Poly& p) {
    const FieldSpec f = p.front().field();
    const Scalar one = Scalar::one(f);
    std::vector<Poly> cands;
    if (f.is_prime_field()) {
        if (f.p <= 101) {
            for (unsigned long r = 0; r < f.p; ++r) {
                cands.push_back(poly_trim({-Scalar::of(f, long(r)), one}));
            }
        }
        if (f.p <= 11) {
            for (unsigned long b = 0; b < f.p; ++b) {
                for (unsigned long c = 0; c < f.p; ++c) {
                    cands.push_back(poly_trim({Scalar::of(f, long(c)), Scalar::of(f, long(b)), one}));
                }
            }
        }
        return cands;
    }
    // Rational roots of the integer-scaled polynomial: num | constant, den | leading.
    mpz_class scale(1);
    for (const auto& c : p) scale = lcm(scale, c.rational_value().get_den());
    mpz_class c0 = mpq_class(p.front().rational_value() * scale).get_num();
    mpz_class cn = mpq_class(p.back().rational_value() * scale).get_num();
    auto divisors = [](mpz_class v) {
        std::vector<mpz_class> out;
        v = abs(v);
        if (v == 0 || v > 1000000) return out;
        for (mpz_class d = 1; d * d <= v; ++d) {
            if (v % d == 0) {
                out.push_back(d);
                out.push_back(v / d);
            }
        }
        return out;
    };
    if (c0 == 0) cands.push_back({Scalar::zero(f), one});
    for (const auto& n : divisors(c0)) {
        for (const auto& d : divisors(cn)) {
            for (int s : {1, -1}) {
                mpq_class root(n * s, d);
                root.canonicalize();
                cands.push_back({-Scalar::rational(root), one});
            }
        }
    }
    for (long b = -3; b <= 3; ++b) {
        for (long c = -3; c <= 3; ++c) {
            cands.push_back(poly_trim({Scalar::of(f, c), Scalar::of(f, b), one}));
        }
    }
    return cands;
}

} // namespace

std::string poly_factored_string(const Poly& p, const std::string& var) {
    if (poly_deg(p) < 1) return poly_to_string(p, var);
    Poly rest = poly_monic(p);
    const Scalar lead = p.back();

    std::vector<std::pair<Poly, int>> factors;
    for (const Poly& cand : factor_candidates(p)) {
        if (poly_deg(cand) < 1) continue;
        int mult = 0;
        while (poly_deg(rest) >= poly_deg(cand)) {
            auto [q, r] = poly_divmod(rest, cand);
            if (!r.empty()) break;
            rest = q;
            ++mult;
        }
        if (mult > 0) factors.emplace_back(cand, mult);
    }
    std::sort(factors.begin(), factors.end(), [&](const auto& a, const auto& b) {
        if (poly_deg(a.first) != poly_deg(b.first)) return poly_deg(a.first) < poly_deg(b.first);
        return poly_to_string(a.first, var) < poly_to_string(b.first, var);
    });

    std::ostringstream os;
    if (!lead.is_one()) os << lead.to_string() << " ";
    bool first = true;
    for (const auto& [fac, mult] : factors) {
        if (!first) os << " ";
        os << "(" << poly_to_string(fac, var) << ")";
        if (mult > 1) os << "^" << mult;
        first = false;
    }
    if (poly_deg(rest) > 0) {
        if (!first) os << " ";
        os << "(" << poly_to_string(rest, var) << ")";
        first = false;
    }
    if (first) return poly_to_string(p, var);
    return os.str();
}

} // namespace adjhopf

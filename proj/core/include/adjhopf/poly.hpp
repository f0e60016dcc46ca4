#pragma once

#include <string>
#include <vector>

#include "adjhopf/scalar.hpp"

namespace adjhopf {

// Dense polynomial with exact coefficients, ascending order (coeff of x^0
// first), no trailing zeros.  The zero polynomial is the empty vector.
using Poly = std::vector<Scalar>;

Poly poly_trim(Poly p);
int poly_deg(const Poly& p); // -1 for the zero polynomial
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const Scalar& c);
Poly poly_monic(const Poly& a);
/// Quotient and remainder; coefficients live in a field.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);
Poly poly_gcd(const Poly& a, const Poly& b); // monic
Poly poly_lcm(const Poly& a, const Poly& b); // monic
Scalar poly_eval(const Poly& p, const Scalar& x);
bool poly_eq(const Poly& a, const Poly& b);

std::string poly_to_string(const Poly& p, const std::string& var = "x");

/// Display-level factorization: extracts linear factors (rational-root search
/// over Q, residue scan over small F_p) and monic quadratics with small
/// integer coefficients; anything left is printed expanded.  Used only for
/// human-readable output; exact results are the coefficient lists.
std::string poly_factored_string(const Poly& p, const std::string& var = "x");

} // namespace adjhopf

#pragma once

#include "adjhopf/group.hpp"
#include "adjhopf/hopf.hpp"

namespace adjhopf {

/// Group algebra kG: group-like delta(x) = x (x) x, antipode S(x) = x^-1.
HopfAlgebra group_algebra(const FiniteGroup& g, const FieldSpec& field);

/// Function algebra k^G on basis d_g: pointwise product, unit = sum of all
/// d_g, delta(d_h) = sum over uv = h of d_u (x) d_v, S(d_g) = d_(g^-1).
HopfAlgebra function_algebra(const FiniteGroup& g, const FieldSpec& field);

/// The 4-dimensional algebra on {1, g, x, gx} with x^2 = 0, g^2 = 1,
/// xg = -gx, delta(x) = x (x) 1 + g (x) x, S(x) = -gx, S(g) = g
/// (error CharTwoUnsupported in characteristic 2).
HopfAlgebra superline(const FieldSpec& field);

} // namespace adjhopf

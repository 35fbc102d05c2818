#pragma once

#include "chiy/character.hpp"
#include "chiy/field.hpp"
#include "chiy/specialization.hpp"

namespace chiy {

/// Exact value e_b/e_a * t1^i1 * t2^i2 of a weight.
Rational weight_value(const Weight& w, const Specialization& spec);

/// prod_w theta(value(w))^mult(w) with theta(x) = (1 - y/x)/(1 - 1/x) = (x - y)/(x - 1).
/// Throws TrivialWeight on the weight 1 and DegenerateSpecialization if some
/// weight evaluates to 1.
template <CoefficientField C>
C theta_eval(const Character& c, const Specialization& spec);

/// Same product after the ordered limit e_r -> 0, ..., e_1 -> 0:
/// a weight e_b/e_a t^m contributes 1 if a < b, y if a > b, and theta(t^m)
/// for pure t-monomials.
template <CoefficientField C>
C theta_limit_factor(const Character& c, const Specialization& spec);

}  // namespace chiy

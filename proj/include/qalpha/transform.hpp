#pragma once

#include "qalpha/poly.hpp"

namespace qalpha {

/// f^(Q,alpha)(x) = x^n f(x + alpha/x) = sum_u c_u (x^2 + alpha)^u x^(n-u),
/// always of degree 2n.
Polynomial q_alpha_transform(const Polynomial& f, const FieldElement& alpha);

/// The classical Q-transform, i.e. the (Q,1)-transform.
Polynomial q_transform(const Polynomial& f);

/// For a monic, self-reciprocal, irreducible f: Tr(a1) == 1, a1 being the
/// coefficient of x^(n-1). Violated hypotheses raise NonMonic,
/// NotSelfReciprocal or Reducible rather than returning false.
bool meyn_condition(const Polynomial& f);

/// For irreducible F = sum c_u x^u and delta != 0:
/// Tr(c1 * delta / c0) == 1 and Tr(c_{n-1} / delta) == 1.
bool kyuregyan_condition(const Polynomial& F, const FieldElement& delta);

}  // namespace qalpha

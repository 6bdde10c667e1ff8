#include "qalpha/transform.hpp"

#include "qalpha/factorize.hpp"

namespace qalpha {

Polynomial q_alpha_transform(const Polynomial& f, const FieldElement& alpha) {
  require_same_field(f.spec(), alpha.spec());
  if (alpha.is_zero()) throw Error(ErrorCode::InvalidParameter, "(Q,alpha)-transform needs alpha != 0");
  if (f.degree() < 1) throw Error(ErrorCode::InvalidInput, "(Q,alpha)-transform of a constant polynomial");

  const FieldSpec& spec = f.spec();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::vector<Bits> alpha_pow(n + 1);
  alpha_pow[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) alpha_pow[i] = spec.mul(alpha_pow[i - 1], alpha.bits());

  // (x^2 + alpha)^u = sum over k with C(u,k) odd, i.e. k a bit-submask of u
  // (Lucas), of alpha^(u-k) x^(2k). Times x^(n-u) it lands on x^(n-u+2k).
  std::vector<Bits> out(2 * n + 1, 0);
  const auto& c = f.raw();
  for (std::size_t u = 0; u <= n; ++u) {
    if (!c[u]) continue;
    for (std::size_t k = u;; k = (k - 1) & u) {
      out[n - u + 2 * k] ^= spec.mul(c[u], alpha_pow[u - k]);
      if (k == 0) break;
    }
  }
  return Polynomial(spec, std::move(out));
}

Polynomial q_transform(const Polynomial& f) { return q_alpha_transform(f, f.spec().one()); }

bool meyn_condition(const Polynomial& f) {
  if (f.degree() < 1) throw Error(ErrorCode::InvalidInput, "meyn_condition needs a non-constant polynomial");
  if (!f.is_monic()) throw Error(ErrorCode::NonMonic, f.to_string() + " is not monic");
  if (!is_self_reciprocal(f)) throw Error(ErrorCode::NotSelfReciprocal, f.to_string() + " is not self-reciprocal");
  if (!is_irreducible(f)) throw Error(ErrorCode::Reducible, f.to_string() + " is reducible");
  return trace(f.coeff(static_cast<std::size_t>(f.degree() - 1))) == 1;
}

bool kyuregyan_condition(const Polynomial& F, const FieldElement& delta) {
  require_same_field(F.spec(), delta.spec());
  if (delta.is_zero()) throw Error(ErrorCode::InvalidParameter, "kyuregyan_condition needs delta != 0");
  if (F.degree() < 1) throw Error(ErrorCode::InvalidInput, "kyuregyan_condition needs a non-constant polynomial");
  if (!is_irreducible(F)) throw Error(ErrorCode::Reducible, F.to_string() + " is reducible");
  const auto n = static_cast<std::size_t>(F.degree());
  const FieldElement c0 = F.coeff(0);
  if (c0.is_zero()) throw Error(ErrorCode::InvalidInput, F.to_string() + " has zero constant term");
  return trace(F.coeff(1) * delta / c0) == 1 && trace(F.coeff(n - 1) / delta) == 1;
}

}  // namespace qalpha

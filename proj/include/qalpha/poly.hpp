#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qalpha/field.hpp"

namespace qalpha {

/// Non-negative exponent of arbitrary size, stored as little-endian 64-bit
/// limbs. Only what square-and-multiply needs: bit length and bit access.
class Exponent {
 public:
  Exponent() = default;
  Exponent(std::uint64_t v);  // NOLINT(implicit)
  static Exponent pow2(std::size_t k);
  static Exponent from_hex(std::string_view hex);

  std::size_t bit_length() const noexcept;
  bool bit(std::size_t i) const noexcept;
  bool is_zero() const noexcept { return bit_length() == 0; }

 private:
  std::vector<std::uint64_t> limbs_;
};

/// Dense univariate polynomial over GF(2^s); coefficient u is the
/// coefficient of x^u. The representation is always trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  explicit Polynomial(FieldSpec spec);
  Polynomial(FieldSpec spec, std::vector<Bits> coeffs);  // ascending order
  Polynomial(FieldSpec spec, std::span<const FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  static Polynomial x(const FieldSpec& spec);
  static Polynomial monomial(const FieldElement& c, std::size_t degree);
  /// Lift of a GF(2) polynomial packed in a word (bit i = x^i).
  static Polynomial from_gf2(const FieldSpec& spec, Bits packed);

  const FieldSpec& spec() const noexcept { return spec_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  const std::vector<Bits>& raw() const noexcept { return c_; }
  Bits raw(std::size_t u) const noexcept { return u < c_.size() ? c_[u] : 0; }
  FieldElement coeff(std::size_t u) const { return FieldElement(spec_, raw(u)); }
  FieldElement leading() const;

  Polynomial monic() const;
  Polynomial square() const;
  Polynomial derivative() const;
  Polynomial scaled(const FieldElement& c) const;

  /// Canonical form, e.g. "poly[s=3]{1,6,1,4,5}" (degree-descending hex).
  std::string to_string() const;
  /// Human-readable "x^4 + g^4*x^3 + ..." form. Output only.
  std::string pretty() const;
  /// Parses the canonical form against `spec`; s must match. The bare
  /// coefficient list "1,6,1,4,5" is accepted as well.
  static Polynomial parse(const FieldSpec& spec, std::string_view text);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.c_ == b.c_ && a.spec_ == b.spec_;
  }
  /// Canonical order: by degree, then coefficients compared from the leading
  /// one down as unsigned integers.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) noexcept;

 private:
  void trim() noexcept;
  FieldSpec spec_;
  std::vector<Bits> c_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b);
Polynomial rem(const Polynomial& a, const Polynomial& m);
/// Monic gcd; gcd(0, 0) is 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
FieldElement eval(const Polynomial& f, const FieldElement& x);
Bits eval_raw(const Polynomial& f, Bits x);
Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m);
Polynomial powmod(const Polynomial& base, const Exponent& e, const Polynomial& m);
/// x^(2^k) mod m by k modular squarings.
Polynomial frobenius_power(const Polynomial& a, std::size_t k, const Polynomial& m);
Polynomial reciprocal(const Polynomial& f);
bool is_self_reciprocal(const Polynomial& f);

}  // namespace qalpha

#pragma once

// Arithmetic in GF(2^s) realized as GF(2)[x]/(m(x)).
//
// Elements are bit-vectors packed into a 64-bit word, bit i holding the
// coefficient of x^i of the reduced residue. The modulus is stored the same
// way with its leading bit s set, so 1 <= s <= 63.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qalpha/error.hpp"

namespace qalpha {

using Bits = std::uint64_t;

inline constexpr unsigned kMaxFieldDegree = 63;
// Exponent/log tables (and therefore dlog and generator discovery) exist
// only up to this degree.
inline constexpr unsigned kTableDegreeCap = 20;

/// Polynomials over GF(2) packed into one machine word (bit i = x^i).
namespace gf2x {

int degree(Bits a) noexcept;  // -1 for the zero polynomial
Bits mod(Bits a, Bits m);
Bits mulmod(Bits a, Bits b, Bits m);
Bits gcd(Bits a, Bits b) noexcept;
/// Smallest-degree (then smallest-value) nontrivial factor found by trial
/// division, or nullopt when `m` is irreducible. Intended for deg m <= 32.
std::optional<Bits> smallest_factor(Bits m);
/// Rabin's criterion over GF(2).
bool is_irreducible(Bits m);
std::string to_string(Bits a);  // "x^3 + x + 1"

}  // namespace gf2x

class FieldElement;

/// The ambient field GF(2^s). A cheap, immutable handle; copies share the
/// precomputed tables. Equality is structural (degree and modulus).
class FieldSpec {
 public:
  /// Default field of degree s, using the Conway table.
  static FieldSpec conway(unsigned s);
  /// Validates that `modulus` has degree s and is irreducible over GF(2).
  static FieldSpec with_modulus(unsigned s, Bits modulus);
  /// Accepts "s=6,mod=0x5b", "s=6,mod=conway" and the shorthand "s=6".
  static FieldSpec parse(std::string_view text);

  unsigned degree() const noexcept;
  Bits modulus() const noexcept;
  /// 2^s; for s = 63 this is 2^63 and still fits.
  std::uint64_t size() const noexcept;
  bool uses_conway_modulus() const noexcept;
  bool has_generator() const noexcept;
  bool has_tables() const noexcept;

  std::optional<FieldElement> generator() const;
  FieldElement element(Bits bits) const;
  FieldElement zero() const;
  FieldElement one() const;
  /// The residue class of x, i.e. the canonical root of the modulus.
  FieldElement root() const;

  /// Canonical text form "s=<s>,mod=0x<hex>".
  std::string to_string() const;

  // Word-level kernels. Inputs must already be reduced (< 2^s); these are
  // what the polynomial and dynamics code call in their inner loops.
  Bits mul(Bits a, Bits b) const noexcept;
  Bits square(Bits a) const noexcept;
  Bits pow(Bits a, std::uint64_t e) const noexcept;
  Bits inv(Bits a) const;
  Bits sqrt(Bits a) const noexcept;
  unsigned trace(Bits a) const noexcept;
  std::uint64_t dlog(Bits a) const;
  Bits exp(std::uint64_t e) const;

  bool same_as(const FieldSpec& other) const noexcept;
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept;

 private:
  struct Impl;
  explicit FieldSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Shift-and-add carry-less product reduced modulo `modulus` of degree s.
/// Independent of the table path; exposed so both can be cross-checked.
Bits clmul_reduce(Bits a, Bits b, Bits modulus, unsigned s) noexcept;

class FieldElement {
 public:
  FieldElement(FieldSpec spec, Bits bits);

  const FieldSpec& spec() const noexcept { return spec_; }
  Bits bits() const noexcept { return bits_; }
  bool is_zero() const noexcept { return bits_ == 0; }
  bool is_one() const noexcept { return bits_ == 1; }

  FieldElement inverse() const;
  FieldElement square() const;
  FieldElement pow(std::uint64_t e) const;

  /// Lowercase hex of the bit-vector ("5" for a^2 + 1).
  std::string to_string() const;
  /// "g^k" when the field has a generator, "0" for zero, hex otherwise.
  std::string to_exponent_string() const;
  /// Accepts hex (with or without 0x) and "g^k".
  static FieldElement parse(const FieldSpec& spec, std::string_view text);

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.bits_ == b.bits_ && a.spec_ == b.spec_;
  }

 private:
  FieldSpec spec_;
  Bits bits_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
FieldElement sqrt(const FieldElement& a);
unsigned trace(const FieldElement& a);
std::uint64_t dlog(const FieldElement& a);

/// Throws SpecMismatch unless both specs are structurally equal.
void require_same_field(const FieldSpec& a, const FieldSpec& b);

/// A point of the projective line P^1(GF(2^s)): a field element or infinity.
class ProjectivePoint {
 public:
  static ProjectivePoint infinity() { return ProjectivePoint(); }
  ProjectivePoint(FieldElement value) : value_(std::move(value)) {}  // NOLINT(implicit)

  bool is_infinity() const noexcept { return !value_.has_value(); }
  const FieldElement& value() const;
  std::string to_string() const;  // "inf" or hex

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) noexcept {
    return a.value_ == b.value_;
  }

 private:
  ProjectivePoint() = default;
  std::optional<FieldElement> value_;
};

/// theta_alpha: 0 and infinity go to infinity, x goes to x + alpha/x.
ProjectivePoint theta(const ProjectivePoint& p, const FieldElement& alpha);
/// psi_gamma: infinity is fixed, x goes to gamma*x.
ProjectivePoint psi(const ProjectivePoint& p, const FieldElement& gamma);

/// 2-adic valuation of a positive integer.
unsigned nu2(std::uint64_t m);

}  // namespace qalpha

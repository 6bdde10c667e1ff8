#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qalpha/poly.hpp"

namespace qalpha {

/// Either the input itself (irreducible) or its two equal-degree monic
/// irreducible factors, g1 < g2 in canonical order.
class SplitResult {
 public:
  static SplitResult irreducible(Polynomial f);
  static SplitResult split(Polynomial a, Polynomial b);

  bool is_split() const noexcept { return g2_.has_value(); }
  /// The input polynomial when irreducible, otherwise g1.
  const Polynomial& g1() const noexcept { return g1_; }
  const Polynomial& g2() const;
  /// Random trace-map draws spent before the split (0 when irreducible).
  unsigned attempts() const noexcept { return attempts_; }

 private:
  SplitResult(Polynomial g1, std::optional<Polynomial> g2, unsigned attempts)
      : g1_(std::move(g1)), g2_(std::move(g2)), attempts_(attempts) {}
  friend SplitResult split_q_image(const Polynomial&, int, std::uint64_t);

  Polynomial g1_;
  std::optional<Polynomial> g2_;
  unsigned attempts_ = 0;
};

using Factorization = std::vector<std::pair<Polynomial, unsigned>>;

/// Rabin's test: x^(q^n) = x mod f and gcd(x^(q^(n/p)) - x, f) = 1 for every
/// prime p dividing n = deg f, where q = 2^s.
bool is_irreducible(const Polynomial& f);

/// True when f has a repeated irreducible factor (gcd(f, f') != 1).
bool has_repeated_factor(const Polynomial& f);

/// Splits a degree-2n (Q,alpha)-image. Uses the absolute trace map
/// h -> sum_{i < s*n} h^(2^i) mod F on random h drawn from a counter-based
/// generator keyed by (seed, attempt), and stops at the first nontrivial gcd.
SplitResult split_q_image(const Polynomial& F, int n, std::uint64_t seed = 0);

/// Largest s * deg f the brute-force oracle will accept.
inline constexpr int kOracleScaleCap = 24;

/// Monic irreducibles of exactly degree d in canonical order, found by
/// sieving every monic candidate with the irreducibles of degree <= d/2.
std::vector<Polynomial> monic_irreducibles(const FieldSpec& spec, int d);

/// All monic polynomials of exactly degree d in canonical order.
std::vector<Polynomial> monic_polynomials(const FieldSpec& spec, int d);

/// Complete factorization of monic(f) by exhaustive trial division; factors
/// are sorted in canonical order.
Factorization oracle_factor(const Polynomial& f);

/// counter-based 64-bit draw, a pure function of (seed, stream, index)
std::uint64_t counter_random(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept;

}  // namespace qalpha

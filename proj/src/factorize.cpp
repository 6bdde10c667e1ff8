#include "qalpha/factorize.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace qalpha {

SplitResult SplitResult::irreducible(Polynomial f) { return SplitResult(std::move(f), std::nullopt, 0); }

SplitResult SplitResult::split(Polynomial a, Polynomial b) {
  if (b < a) std::swap(a, b);
  return SplitResult(std::move(a), std::move(b), 0);
}

const Polynomial& SplitResult::g2() const {
  if (!g2_) throw Error(ErrorCode::InvalidInput, "irreducible result has no second factor");
  return *g2_;
}

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t counter_random(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) throw Error(ErrorCode::InvalidInput, "irreducibility of a constant polynomial");
  const int n = f.degree();
  if (n == 1) return true;
  const std::size_t s = f.spec().degree();
  const Polynomial x = rem(Polynomial::x(f.spec()), f);

  std::set<int> needed;
  for (int p : prime_divisors(n)) needed.insert(n / p);

  // x^(q^k) for k = 1..n, one Frobenius (s squarings) per step.
  Polynomial r = x;
  for (int k = 1; k <= n; ++k) {
    r = frobenius_power(r, s, f);
    if (needed.count(k) && gcd(r + x, f).degree() != 0) return false;
  }
  return r == x;
}

bool has_repeated_factor(const Polynomial& f) {
  if (f.degree() < 1) return false;
  return gcd(f, f.derivative()).degree() > 0;
}

SplitResult split_q_image(const Polynomial& F, int n, std::uint64_t seed) {
  if (n < 1 || F.degree() != 2 * n) {
    throw Error(ErrorCode::DegreeMismatch,
                "split_q_image expects degree " + std::to_string(2 * n) + ", got " + std::to_string(F.degree()));
  }
  if (!F.is_monic()) throw Error(ErrorCode::NonMonic, "split_q_image expects a monic polynomial");
  if (is_irreducible(F)) return SplitResult::irreducible(F);
  if (has_repeated_factor(F)) {
    throw Error(ErrorCode::InternalContract, F.to_string() + " has a repeated factor; not a product of two distinct irreducibles");
  }

  const FieldSpec& spec = F.spec();
  const std::size_t s = spec.degree();
  const Bits mask = spec.size() - 1;
  const unsigned cap = 64u * static_cast<unsigned>(s) * static_cast<unsigned>(n);
  for (unsigned attempt = 0; attempt < cap; ++attempt) {
    std::vector<Bits> h(2 * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = counter_random(seed, attempt, i) & mask;
    Polynomial term(spec, std::move(h));
    if (term.degree() < 1) continue;
    // Absolute trace of h in GF(2^(s n)) read through each residue field.
    Polynomial trace = term;
    for (std::size_t i = 1; i < s * static_cast<std::size_t>(n); ++i) {
      term = rem(term.square(), F);
      trace = trace + term;
    }
    Polynomial g = gcd(trace, F);
    if (g.degree() < 1 || g.degree() >= F.degree()) continue;
    auto [cofactor, r] = divrem(F, g);
    if (!r.is_zero() || g.degree() != n || cofactor.degree() != n || !is_irreducible(g) || !is_irreducible(cofactor)) {
      throw Error(ErrorCode::InternalContract,
                  F.to_string() + " is not a product of two degree-" + std::to_string(n) + " irreducibles");
    }
    SplitResult out = SplitResult::split(std::move(g), cofactor.monic());
    out.attempts_ = attempt + 1;
    return out;
  }
  throw Error(ErrorCode::InternalContract,
              "no split of " + F.to_string() + " after " + std::to_string(cap) + " attempts");
}

std::vector<Polynomial> monic_polynomials(const FieldSpec& spec, int d) {
  if (d < 0) return {};
  if (static_cast<long>(spec.degree()) * d > kOracleScaleCap) {
    throw Error(ErrorCode::UnsupportedScale, "enumeration of degree " + std::to_string(d) + " over " + spec.to_string() +
                                                 " exceeds the oracle cap");
  }
  const std::uint64_t q = spec.size();
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) count *= q;
  std::vector<Polynomial> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<Bits> c(static_cast<std::size_t>(d) + 1);
    std::uint64_t v = k;
    for (int i = 0; i < d; ++i) {
      c[i] = v % q;
      v /= q;
    }
    c[d] = 1;
    out.emplace_back(spec, std::move(c));
  }
  return out;
}

std::vector<Polynomial> monic_irreducibles(const FieldSpec& spec, int d) {
  // Sieve results are cached per (field, degree); fields used here are tiny.
  static std::mutex mu;
  static std::map<std::tuple<unsigned, Bits, int>, std::vector<Polynomial>> cache;
  const auto key = std::make_tuple(spec.degree(), spec.modulus(), d);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::vector<Polynomial> small;
  for (int e = 1; 2 * e <= d; ++e) {
    auto part = monic_irreducibles(spec, e);
    small.insert(small.end(), part.begin(), part.end());
  }
  std::vector<Polynomial> out;
  for (auto& cand : monic_polynomials(spec, d)) {
    bool divisible = std::any_of(small.begin(), small.end(), [&](const Polynomial& p) { return rem(cand, p).is_zero(); });
    if (!divisible) out.push_back(std::move(cand));
  }
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(out)).first->second;
}

Factorization oracle_factor(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "cannot factor the zero polynomial");
  if (static_cast<long>(f.spec().degree()) * f.degree() > kOracleScaleCap) {
    throw Error(ErrorCode::UnsupportedScale, "oracle_factor: s*deg = " +
                                                 std::to_string(f.spec().degree() * f.degree()) + " exceeds " +
                                                 std::to_string(kOracleScaleCap));
  }
  Polynomial g = f.monic();
  Factorization out;
  for (int d = 1; 2 * d <= g.degree(); ++d) {
    for (const auto& p : monic_irreducibles(f.spec(), d)) {
      unsigned mult = 0;
      while (g.degree() >= d) {
        auto [q, r] = divrem(g, p);
        if (!r.is_zero()) break;
        g = std::move(q);
        ++mult;
      }
      if (mult) out.emplace_back(p, mult);
    }
  }
  if (g.degree() >= 1) out.emplace_back(g, 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace qalpha

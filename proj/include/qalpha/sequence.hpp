#pragma once

// Sequences f_0, f_1, ... of irreducible monic polynomials where f_i is a
// monic irreducible factor of f_{i-1}^(Q,alpha). With n = deg f_0 there is
// a step t <= l_s + l_n + 3 with deg f_t = 2n and deg f_{t+1} = 4n, and from
// then on every transform is irreducible. Before t the degree may sit at n
// or 2n for a few steps.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qalpha/poly.hpp"

namespace qalpha {

struct HistoryEntry {
  std::size_t index = 0;
  int degree = 0;
  /// Dropped (nullopt) once the run exceeds its coefficient budget.
  std::optional<Polynomial> poly;
  std::uint64_t hash = 0;
  /// f_{index-1}^(Q,alpha) split and this entry is one of its factors.
  bool split = false;
  /// 1 or 2: which canonical factor was kept (0 when no split).
  int chosen_factor = 0;
};

struct SplitRecord {
  std::size_t index = 0;  // history index of the chosen factor
  Polynomial g1;
  Polynomial g2;
};

struct SequenceRun {
  SequenceRun(FieldSpec field, FieldElement a, Polynomial f0)
      : spec(std::move(field)), alpha(std::move(a)), seed_poly(f0), last(std::move(f0)) {}

  FieldSpec spec;
  FieldElement alpha;
  Polynomial seed_poly;
  unsigned l_s = 0;
  unsigned l_n = 0;
  unsigned stagnation_bound = 3;
  std::vector<HistoryEntry> history;
  Polynomial last;
  bool backtracked = false;
  std::optional<std::pair<Polynomial, Polynomial>> first_split;
  /// The index t: deg f_t = 2n and deg f_{t+1} = 4n.
  std::optional<std::size_t> doubling_step;
  /// Every split met on the branch that was kept.
  std::vector<SplitRecord> splits;
  std::size_t coefficient_budget = std::size_t{1} << 24;
  std::size_t coefficients_stored = 0;

  int seed_degree() const { return seed_poly.degree(); }
};

/// Fresh run holding only f_0. Validates the seed (monic, irreducible,
/// degree >= 1) and alpha != 0.
SequenceRun start_run(const FieldSpec& spec, const FieldElement& alpha, const Polynomial& f0,
                      std::size_t coefficient_budget = std::size_t{1} << 24);

/// Appends f_{i+1}: the transform itself when irreducible, otherwise the
/// canonically smaller factor.
void step(SequenceRun& run, std::uint64_t seed = 0);

/// Steps until the last degree reaches `target_degree`, backtracking once
/// to the other factor of the first split if f_{l_s+l_n+4} still has degree
/// below 4n (which only happens when f_1 has periodic roots).
SequenceRun generate(const FieldSpec& spec, const FieldElement& alpha, const Polynomial& f0, int target_degree,
                     std::uint64_t seed = 0, std::size_t coefficient_budget = std::size_t{1} << 24);

struct VerifyCheck {
  VerifyCheck() = default;
  explicit VerifyCheck(std::string check) : name(std::move(check)) {}

  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool passed() const;
  const VerifyCheck* find(const std::string& name) const;
};

/// Re-derives every claim of a finished run from its history.
VerifyReport verify_run(const SequenceRun& run);

/// JSON run record with stable key order.
std::string run_record_json(const SequenceRun& run, const VerifyReport& report, std::uint64_t seed, int target_degree,
                            int indent = 2);

std::uint64_t polynomial_hash(const Polynomial& f) noexcept;

}  // namespace qalpha

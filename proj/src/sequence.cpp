#include "qalpha/sequence.hpp"

#include <sstream>

#include <json.hpp>

#include "qalpha/dynamics.hpp"
#include "qalpha/factorize.hpp"
#include "qalpha/transform.hpp"

namespace qalpha {

std::uint64_t polynomial_hash(const Polynomial& f) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Bits c : f.raw()) {
    for (int i = 0; i < 8; ++i) {
      h ^= (c >> (8 * i)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

namespace {

void append(SequenceRun& run, Polynomial f, bool split, int chosen) {
  HistoryEntry e;
  e.index = run.history.size();
  e.degree = f.degree();
  e.hash = polynomial_hash(f);
  e.split = split;
  e.chosen_factor = chosen;
  const auto size = static_cast<std::size_t>(f.degree() + 1);
  if (run.coefficients_stored + size <= run.coefficient_budget) {
    run.coefficients_stored += size;
    e.poly = f;
  }
  // t is the degree-2n entry whose successor reaches degree 4n.
  if (!run.doubling_step && f.degree() >= 4 * run.seed_degree()) run.doubling_step = e.index - 1;
  run.history.push_back(std::move(e));
  run.last = std::move(f);
}

}  // namespace

SequenceRun start_run(const FieldSpec& spec, const FieldElement& alpha, const Polynomial& f0,
                      std::size_t coefficient_budget) {
  require_same_field(spec, alpha.spec());
  require_same_field(spec, f0.spec());
  if (alpha.is_zero()) throw Error(ErrorCode::InvalidParameter, "sequence needs alpha != 0");
  if (f0.degree() < 1) throw Error(ErrorCode::InvalidSeed, "seed must have degree >= 1");
  if (!f0.is_monic()) throw Error(ErrorCode::InvalidSeed, "seed " + f0.to_string() + " is not monic");
  if (!is_irreducible(f0)) throw Error(ErrorCode::InvalidSeed, "seed " + f0.to_string() + " is reducible");

  SequenceRun run(spec, alpha, f0);
  run.l_s = nu2(spec.degree());
  run.l_n = nu2(static_cast<std::uint64_t>(f0.degree()));
  run.stagnation_bound = run.l_s + run.l_n + 3;
  run.coefficient_budget = coefficient_budget;
  append(run, f0, false, 0);
  return run;
}

void step(SequenceRun& run, std::uint64_t seed) {
  const Polynomial& last = run.last;
  Polynomial F = q_alpha_transform(last, run.alpha);
  if (run.history.size() == 1 && has_repeated_factor(F)) {
    // Only the seed x (root 0, in the fiber of infinity) gets here.
    throw Error(ErrorCode::InvalidSeed, "transform of seed " + last.to_string() + " = " + F.to_string() +
                                            " has a repeated factor");
  }
  SplitResult res = split_q_image(F, last.degree(), seed);
  if (!res.is_split()) {
    append(run, std::move(F), false, 0);
    return;
  }
  const std::size_t index = run.history.size();
  if (index == 1) run.first_split.emplace(res.g1(), res.g2());
  run.splits.push_back({index, res.g1(), res.g2()});
  append(run, res.g1(), true, 1);
}

SequenceRun generate(const FieldSpec& spec, const FieldElement& alpha, const Polynomial& f0, int target_degree,
                     std::uint64_t seed, std::size_t coefficient_budget) {
  if (target_degree < f0.degree()) {
    throw Error(ErrorCode::InvalidParameter, "target degree " + std::to_string(target_degree) +
                                                 " is below the seed degree " + std::to_string(f0.degree()));
  }
  SequenceRun run = start_run(spec, alpha, f0, coefficient_budget);
  const int n = f0.degree();
  while (run.last.degree() < target_degree) {
    const int before = run.last.degree();
    step(run, seed);
    const std::size_t i = run.history.size() - 1;

    if (run.doubling_step && i > *run.doubling_step + 1 && run.last.degree() != 2 * before) {
      throw Error(ErrorCode::TheoremViolation, "degree failed to double at step " + std::to_string(i) +
                                                   " after t = " + std::to_string(*run.doubling_step));
    }
    // Without periodic roots in f_1, t <= bound, so f_{bound+1} already has
    // degree 4n. Missing that means f_1 was the periodic factor.
    if (!run.doubling_step && i == run.stagnation_bound + 1) {
      if (run.backtracked || !run.first_split) {
        throw Error(ErrorCode::TheoremViolation, "degree " + std::to_string(4 * n) + " not reached within " +
                                                     std::to_string(run.stagnation_bound) + " steps from seed " +
                                                     f0.to_string());
      }
      // Restart from the other factor of the first split.
      Polynomial other = run.first_split->second;
      auto first_split = run.first_split;
      run.history.resize(1);
      run.coefficients_stored = run.history[0].poly ? static_cast<std::size_t>(n + 1) : 0;
      run.splits.assign(1, SplitRecord{1, first_split->first, first_split->second});
      run.last = f0;
      run.backtracked = true;
      append(run, std::move(other), true, 2);
      run.first_split = std::move(first_split);
    }
  }
  // A run that stops at degree 2n learns t by checking the next transform.
  if (!run.doubling_step && run.last.degree() == 2 * n &&
      is_irreducible(q_alpha_transform(run.last, run.alpha))) {
    run.doubling_step = run.history.size() - 1;
  }
  return run;
}

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const VerifyCheck* VerifyReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerifyReport verify_run(const SequenceRun& run) {
  VerifyReport report;
  const int n = run.seed_degree();
  const long s = run.spec.degree();

  {
    VerifyCheck c("irreducible");
    std::size_t rabin = 0, oracle = 0, dropped = 0;
    for (const auto& e : run.history) {
      if (!e.poly) {
        ++dropped;
        continue;
      }
      const Polynomial& f = *e.poly;
      bool ok = f.is_monic() && f.degree() >= 1 && is_irreducible(f);
      ++rabin;
      if (ok && s * f.degree() <= kOracleScaleCap) {
        auto factors = oracle_factor(f);
        ok = factors.size() == 1 && factors[0].second == 1;
        ++oracle;
      }
      if (!ok) {
        c.passed = false;
        c.detail += "f_" + std::to_string(e.index) + " is not monic irreducible; ";
      }
    }
    if (c.passed) {
      c.detail = std::to_string(rabin) + " Rabin, " + std::to_string(oracle) + " oracle";
      if (dropped) c.detail += ", " + std::to_string(dropped) + " not retained";
    }
    report.checks.push_back(std::move(c));
  }

  std::optional<std::size_t> t;
  {
    VerifyCheck c("degree-pattern");
    if (run.history.empty() || run.history[0].degree != n) {
      c.passed = false;
      c.detail = "history does not start at the seed degree";
    }
    for (std::size_t i = 0; c.passed && i < run.history.size(); ++i) {
      const auto& e = run.history[i];
      if (e.poly && e.poly->degree() != e.degree) {
        c.passed = false;
        c.detail = "entry " + std::to_string(i) + " records degree " + std::to_string(e.degree) + " for a degree-" +
                   std::to_string(e.poly->degree()) + " polynomial";
        break;
      }
      if (i == 0) continue;
      const int prev = run.history[i - 1].degree;
      if (t && e.degree != 2 * prev) {
        c.passed = false;
        c.detail = "degree did not double at index " + std::to_string(i);
      } else if (!t && e.degree != prev && e.degree != 2 * prev) {
        c.passed = false;
        c.detail = "degree " + std::to_string(e.degree) + " at index " + std::to_string(i) + " after " +
                   std::to_string(prev);
      }
      if (!t && e.degree >= 4 * n) t = i - 1;
    }
    if (c.passed) {
      for (const auto& e : run.history) c.detail += (c.detail.empty() ? "" : ",") + std::to_string(e.degree);
    }
    report.checks.push_back(std::move(c));
  }

  {
    VerifyCheck c("doubling-bound");
    const std::size_t bound = run.stagnation_bound;
    if (!t && run.doubling_step && *run.doubling_step + 1 == run.history.size()) {
      // The run stopped at t: f_{t+1} is the (irreducible) next transform.
      const auto& tail = run.history.back();
      if (tail.degree == 2 * n && tail.poly && is_irreducible(q_alpha_transform(*tail.poly, run.alpha))) {
        t = run.doubling_step;
      }
    }
    if (t) {
      c.passed = *t >= 1 && *t <= bound && run.history[*t].degree == 2 * n && run.doubling_step == t;
      c.detail = "t = " + std::to_string(*t) + ", bound " + std::to_string(bound);
      if (run.doubling_step != t) c.detail += ", run recorded a different t";
    } else {
      c.passed = run.history.size() <= bound + 1;
      c.detail = c.passed ? "no doubling reached yet" : "no doubling within " + std::to_string(bound) + " steps";
    }
    report.checks.push_back(std::move(c));
  }

  {
    VerifyCheck c("backtrack");
    if (run.backtracked) {
      c.passed = run.first_split && run.history.size() > 1 && run.history[1].poly &&
                 *run.history[1].poly == run.first_split->second;
      c.detail = c.passed ? "restarted from g2" : "backtracked run does not continue from g2";
    } else {
      c.detail = "not triggered";
    }
    report.checks.push_back(std::move(c));
  }

  {
    VerifyCheck c("f1-not-periodic");
    if (run.history.size() < 2 || !run.history[1].poly) {
      c.skipped = true;
      c.detail = "no f_1";
    } else if (s * run.history[1].degree > static_cast<long>(kPeriodicRootScaleCap)) {
      c.skipped = true;
      c.detail = "s*deg f_1 beyond the root-enumeration cap";
    } else {
      c.passed = !has_periodic_roots(*run.history[1].poly, run.alpha);
      c.detail = c.passed ? "roots of f_1 are not periodic" : "f_1 has periodic roots";
    }
    report.checks.push_back(std::move(c));
  }

  {
    VerifyCheck c("split-has-aperiodic-factor");
    std::size_t checked = 0, both = 0;
    for (const auto& sp : run.splits) {
      if (s * sp.g1.degree() > static_cast<long>(kPeriodicRootScaleCap)) continue;
      bool p1 = has_periodic_roots(sp.g1, run.alpha), p2 = has_periodic_roots(sp.g2, run.alpha);
      ++checked;
      if (!p1 && !p2) ++both;
      if (p1 && p2) {
        c.passed = false;
        c.detail += "both factors periodic at index " + std::to_string(sp.index) + "; ";
      }
    }
    if (checked == 0) {
      c.skipped = true;
      c.detail = run.splits.empty() ? "no splits" : "splits beyond the root-enumeration cap";
    } else if (c.passed) {
      c.detail = std::to_string(checked) + " splits checked, " + std::to_string(both) + " with both factors aperiodic";
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

std::string run_record_json(const SequenceRun& run, const VerifyReport& report, std::uint64_t seed, int target_degree,
                            int indent) {
  using nlohmann::ordered_json;
  ordered_json out;
  out["field"] = run.spec.to_string();
  out["alpha"] = run.alpha.to_string();
  out["seed_poly"] = run.seed_poly.to_string();
  out["seed"] = seed;
  out["target_degree"] = target_degree;
  out["l_s"] = run.l_s;
  out["l_n"] = run.l_n;
  out["bound"] = run.stagnation_bound;
  out["steps"] = ordered_json::array();
  for (const auto& e : run.history) {
    ordered_json step;
    step["index"] = e.index;
    step["degree"] = e.degree;
    if (e.poly) {
      step["poly"] = e.poly->to_string();
    } else {
      std::ostringstream os;
      os << std::hex << e.hash;
      step["poly"] = nullptr;
      step["hash"] = os.str();
    }
    step["split"] = e.split;
    if (e.split) step["chosen_factor"] = e.chosen_factor == 2 ? "g2" : "g1";
    out["steps"].push_back(std::move(step));
  }
  out["t"] = run.doubling_step ? ordered_json(*run.doubling_step) : ordered_json(nullptr);
  out["backtracked"] = run.backtracked;
  if (run.first_split) {
    out["first_split"] = {run.first_split->first.to_string(), run.first_split->second.to_string()};
  } else {
    out["first_split"] = nullptr;
  }
  ordered_json ver;
  ver["passed"] = report.passed();
  ver["checks"] = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json item;
    item["name"] = c.name;
    item["passed"] = c.passed;
    item["skipped"] = c.skipped;
    item["detail"] = c.detail;
    ver["checks"].push_back(std::move(item));
  }
  out["verification"] = std::move(ver);
  return out.dump(indent);
}

}  // namespace qalpha

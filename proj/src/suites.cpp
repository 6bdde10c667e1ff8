#include "qalpha/suites.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "qalpha/dynamics.hpp"
#include "qalpha/factorize.hpp"
#include "qalpha/sequence.hpp"
#include "qalpha/transform.hpp"

namespace qalpha {

void SuiteResult::fail(std::string what) {
  ++failed;
  if (failures.size() < 20) failures.push_back(std::move(what));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"meyn", "kyuregyan", "structure", "oracle", "sequence", "paper-examples"};
  return names;
}

std::vector<FieldElement> sample_alphas(const FieldSpec& spec, unsigned count, std::uint64_t seed) {
  const std::uint64_t nonzero = spec.size() - 1;
  std::vector<FieldElement> out;
  if (nonzero <= count) {
    for (Bits b = 1; b <= nonzero; ++b) out.push_back(spec.element(b));
    return out;
  }
  std::set<Bits> picked;
  for (std::uint64_t i = 0; picked.size() < count; ++i) {
    Bits b = counter_random(seed, 0xa1fa0000 + spec.degree(), i) % nonzero + 1;
    if (picked.insert(b).second) out.push_back(spec.element(b));
  }
  return out;
}

namespace {

class Timer {
 public:
  explicit Timer(SuiteResult& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  SuiteResult& r_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<Polynomial> irreducibles_up_to(const FieldSpec& spec, int max_degree) {
  std::vector<Polynomial> out;
  for (int d = 1; d <= max_degree; ++d) {
    auto part = monic_irreducibles(spec, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace

SuiteResult suite_meyn(int max_degree) {
  SuiteResult r("meyn");
  Timer timer(r);
  const FieldSpec f2 = FieldSpec::conway(1);
  for (int n = 1; n <= max_degree; ++n) {
    for (Bits low = 0; low < (Bits{1} << n); ++low) {
      Polynomial f = Polynomial::from_gf2(f2, (Bits{1} << n) | low);
      if (!is_self_reciprocal(f) || !is_irreducible(f) || !meyn_condition(f)) continue;
      ++r.checked;
      Polynomial fq = q_transform(f);
      if (!is_irreducible(fq)) r.fail(f.to_string() + ": Q-transform reducible");
      else if (!is_self_reciprocal(fq)) r.fail(f.to_string() + ": Q-transform not self-reciprocal");
      else if (!meyn_condition(fq)) r.fail(f.to_string() + ": Q-transform loses the trace condition");
    }
  }
  r.notes.push_back("self-reciprocal irreducibles over GF(2) with Tr(a1)=1, degree <= " + std::to_string(max_degree));
  return r;
}

SuiteResult suite_kyuregyan(int max_degree, int steps) {
  SuiteResult r("kyuregyan");
  Timer timer(r);
  for (unsigned s : {1u, 2u}) {
    const FieldSpec spec = FieldSpec::conway(s);
    for (const auto& F : irreducibles_up_to(spec, max_degree)) {
      if (F.raw(0) == 0) continue;  // x itself: c0 = 0
      for (Bits d = 1; d < spec.size(); ++d) {
        const FieldElement delta = spec.element(d);
        if (!kyuregyan_condition(F, delta)) continue;
        ++r.checked;
        const FieldElement alpha = delta.square();
        Polynomial Fk = F;
        for (int k = 1; k <= steps; ++k) {
          const int want = F.degree() << (k - 1);
          if (Fk.degree() != want || !is_irreducible(Fk)) {
            r.fail(F.to_string() + " delta=" + delta.to_string() + ": F_" + std::to_string(k) + " fails");
            break;
          }
          if (k < steps) Fk = q_alpha_transform(Fk, alpha);
        }
      }
    }
  }
  r.notes.push_back("monic irreducibles over GF(2), GF(4) of degree <= " + std::to_string(max_degree));
  return r;
}

SuiteResult suite_structure(unsigned max_s, unsigned alphas_per_field, std::uint64_t seed) {
  SuiteResult r("structure");
  Timer timer(r);
  for (unsigned s = 1; s <= max_s; ++s) {
    const FieldSpec spec = FieldSpec::conway(s);
    const DynamicsGraph base = build_graph(spec, spec.one());
    const auto base_sigs = base.signature_multiset();
    for (const auto& alpha : sample_alphas(spec, alphas_per_field, seed)) {
      ++r.checked;
      const DynamicsGraph g = build_graph(spec, alpha);
      const std::string where = "s=" + std::to_string(s) + " alpha=" + alpha.to_string();
      for (const auto& issue : check_structure(g)) r.fail(where + ": " + issue);
      if (g.signature_multiset() != base_sigs) r.fail(where + ": signature multiset differs from Gr(1)");
      if (auto bad = conjugation_mismatches(base, g)) {
        r.fail(where + ": " + std::to_string(bad) + " edges not transported by psi_sqrt(alpha)");
      }
      for (const auto& c : g.components()) {
        if (c.contains_infinity) {
          r.notes.push_back(where + ": infinity component depth " + std::to_string(c.tree_depth));
        }
      }
    }
  }
  return r;
}

SuiteResult suite_oracle() {
  SuiteResult r("oracle");
  Timer timer(r);
  const std::pair<unsigned, int> ranges[] = {{1, 6}, {2, 3}, {3, 3}};
  for (auto [s, max_degree] : ranges) {
    const FieldSpec spec = FieldSpec::conway(s);
    for (int d = 1; d <= max_degree; ++d) {
      for (const auto& f : monic_polynomials(spec, d)) {
        ++r.checked;
        auto factors = oracle_factor(f);
        bool brute = factors.size() == 1 && factors[0].second == 1;
        Polynomial product = Polynomial::constant(spec.one());
        for (const auto& [p, m] : factors) {
          for (unsigned i = 0; i < m; ++i) product = product * p;
        }
        if (product != f) r.fail(f.to_string() + ": oracle factors do not multiply back");
        if (brute != is_irreducible(f)) r.fail(f.to_string() + ": Rabin and trial division disagree");
      }
    }
  }
  return r;
}

SuiteResult suite_sequence(unsigned alphas_per_field, std::uint64_t seed) {
  SuiteResult r("sequence");
  Timer timer(r);
  const std::pair<unsigned, int> ranges[] = {{1, 6}, {2, 4}, {3, 4}};
  std::uint64_t backtracks = 0;
  for (auto [s, max_degree] : ranges) {
    const FieldSpec spec = FieldSpec::conway(s);
    const auto alphas = sample_alphas(spec, alphas_per_field, seed);
    for (const auto& f0 : irreducibles_up_to(spec, max_degree)) {
      const int n = f0.degree();
      for (const auto& alpha : alphas) {
        const std::string where = f0.to_string() + " alpha=" + alpha.to_string();
        ++r.checked;
        try {
          SequenceRun run = generate(spec, alpha, f0, 16 * n, seed);
          if (run.backtracked) ++backtracks;
          if (!run.doubling_step || *run.doubling_step > run.stagnation_bound) {
            r.fail(where + ": doubling step missing or beyond the bound");
            continue;
          }
          const std::size_t t = *run.doubling_step;
          if (run.history.size() < t + 4) {
            r.fail(where + ": fewer than 3 steps after t");
            continue;
          }
          for (std::size_t j = 0; j <= 3; ++j) {
            if (run.history[t + j].degree != (2 * n) << j) r.fail(where + ": degree at t+" + std::to_string(j));
          }
          for (const auto& sp : run.splits) {
            const Polynomial& before = sp.index == 1 ? run.seed_poly : *run.history[sp.index - 1].poly;
            if (sp.g1 * sp.g2 != q_alpha_transform(before, alpha)) r.fail(where + ": split does not multiply back");
          }
          if (!verify_run(run).passed()) r.fail(where + ": verify_run reports a failure");
        } catch (const Error& e) {
          if (e.code() == ErrorCode::InvalidSeed && n == 1 && f0.raw(0) == 0) {
            --r.checked;  // the seed x: its transform x^2 + alpha is a square
            continue;
          }
          r.fail(where + ": " + e.what());
        }
      }
    }
  }
  r.notes.push_back(std::to_string(backtracks) + " runs backtracked");
  return r;
}

SuiteResult suite_paper_examples() {
  SuiteResult r("paper-examples");
  Timer timer(r);

  // GF(8) sequence example.
  {
    const FieldSpec f8 = FieldSpec::with_modulus(3, 0xb);
    const FieldElement a = f8.root();
    const Polynomial f0 = Polynomial::parse(f8, "poly[s=3]{1,0,0,1,3}");
    const Polynomial f1 = Polynomial::parse(f8, "poly[s=3]{1,6,1,4,5}");
    r.checked += 4;
    const Polynomial F = q_alpha_transform(f0, a);
    if (is_irreducible(F)) r.fail("f0^(Q,a) should be reducible");
    SplitResult split = split_q_image(F, 4);
    if (!split.is_split() || (split.g1() != f1 && split.g2() != f1)) r.fail("f0^(Q,a) factors do not contain f1");
    if (split.is_split() && split.g1() * split.g2() != F) r.fail("factors of f0^(Q,a) do not multiply back");
    const Polynomial f2 = q_alpha_transform(f1, a);
    if (f2.degree() != 8 || !is_irreducible(f2)) r.fail("f1^(Q,a) is not irreducible of degree 8");
    const Polynomial f3 = q_alpha_transform(f2, a);
    if (f3.degree() != 16 || !is_irreducible(f3)) r.fail("f2^(Q,a) is not irreducible of degree 16");
  }

  // Gr_6(alpha) for the Conway root.
  {
    const FieldSpec f64 = FieldSpec::conway(6);
    const DynamicsGraph g = build_graph(f64, f64.root());
    r.checked += 3;
    std::vector<ComponentSignature> want = {
        {3, 3, 24, false}, {9, 1, 18, false}, {9, 1, 18, false}, {1, 3, 5, true}};
    std::sort(want.begin(), want.end());
    if (g.signature_multiset() != want) r.fail("Gr_6 component signatures differ");
    auto v = [&](std::uint64_t e) { return g.index(ProjectivePoint(f64.element(f64.exp(e)))); };
    const auto zero = g.index(ProjectivePoint(f64.zero()));
    if (g.successor(v(5)) != v(23) || g.successor(v(32)) != zero || g.successor(zero) != g.infinity() ||
        g.successor(g.infinity()) != g.infinity()) {
      r.fail("Gr_6 edges 5->23, 32->zero, zero->inf, inf->inf");
    }
    auto pre = g.predecessors(v(32));
    std::sort(pre.begin(), pre.end());
    std::vector<std::uint64_t> want_pre = {v(11), v(53)};
    std::sort(want_pre.begin(), want_pre.end());
    if (pre != want_pre) r.fail("Gr_6 preimages of 32 are not {11, 53}");
  }
  return r;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed) {
  if (name == "meyn") return suite_meyn();
  if (name == "kyuregyan") return suite_kyuregyan();
  if (name == "structure") return suite_structure(8, 10, seed);
  if (name == "oracle") return suite_oracle();
  if (name == "sequence") return suite_sequence(5, seed);
  if (name == "paper-examples") return suite_paper_examples();
  throw Error(ErrorCode::InvalidInput, "unknown suite '" + std::string(name) + "'");
}

}  // namespace qalpha

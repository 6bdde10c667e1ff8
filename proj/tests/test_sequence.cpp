#include <doctest.h>

#include <json.hpp>

#include "qalpha/factorize.hpp"
#include "qalpha/sequence.hpp"
#include "qalpha/transform.hpp"

using namespace qalpha;

namespace {

FieldSpec f8() { return FieldSpec::with_modulus(3, 0xb); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalContract;
}

std::vector<int> degrees(const SequenceRun& run) {
  std::vector<int> out;
  for (const auto& e : run.history) out.push_back(e.degree);
  return out;
}

}  // namespace

TEST_SUITE("sequence") {

TEST_CASE("the GF(8) run") {
  const FieldSpec spec = f8();
  const FieldElement a = spec.root();
  const Polynomial f0 = Polynomial::parse(spec, "poly[s=3]{1,0,0,1,3}");
  const Polynomial f1 = Polynomial::parse(spec, "poly[s=3]{1,6,1,4,5}");
  const SequenceRun run = generate(spec, a, f0, 16);
  CHECK(degrees(run) == std::vector<int>{4, 4, 8, 16});
  CHECK(run.l_s == 0);
  CHECK(run.l_n == 2);
  CHECK(run.stagnation_bound == 5);
  REQUIRE(run.doubling_step);
  CHECK(*run.doubling_step == 2);
  CHECK(*run.history[1].poly == f1);
  CHECK(run.history[1].split);
  CHECK_FALSE(run.backtracked);
  REQUIRE(run.first_split);
  CHECK(run.first_split->first * run.first_split->second == q_alpha_transform(f0, a));
  CHECK(*run.history[2].poly == q_alpha_transform(f1, a));
  CHECK(is_irreducible(*run.history[3].poly));
  CHECK(verify_run(run).passed());
}

TEST_CASE("single steps") {
  const FieldSpec spec = f8();
  const FieldElement a = spec.root();
  SequenceRun run = start_run(spec, a, Polynomial::parse(spec, "poly[s=3]{1,6,1,4,5}"));
  step(run);
  CHECK(run.last.degree() == 8);
  CHECK(is_irreducible(run.last));
  step(run);
  CHECK(run.last.degree() == 16);
  CHECK(is_irreducible(run.last));
}

TEST_CASE("Meyn seeds never split") {
  const FieldSpec f2 = FieldSpec::conway(1);
  const SequenceRun run = generate(f2, f2.one(), Polynomial::from_gf2(f2, 0b111), 8);
  CHECK(degrees(run) == std::vector<int>{2, 4, 8});
  CHECK(run.splits.empty());
  CHECK(verify_run(run).passed());

  const SequenceRun one = generate(f2, f2.one(), Polynomial::from_gf2(f2, 0b111), 4);
  CHECK(degrees(one) == std::vector<int>{2, 4});
  REQUIRE(one.doubling_step);
  CHECK(*one.doubling_step == 1);
  CHECK(verify_run(one).passed());
}

TEST_CASE("degree may pause at 2n before doubling for good") {
  // x^3 + x + 1 over GF(2), alpha = 1: the degree-6 transform splits again.
  const FieldSpec f2 = FieldSpec::conway(1);
  const SequenceRun run = generate(f2, f2.one(), Polynomial::from_gf2(f2, 0b1011), 24);
  CHECK(degrees(run) == std::vector<int>{3, 6, 6, 12, 24});
  REQUIRE(run.doubling_step);
  CHECK(*run.doubling_step == 2);
  CHECK(verify_run(run).passed());
}

TEST_CASE("backtracking to the other factor") {
  // x + 1 over GF(8), alpha = 0x6: the smaller factor of the first split is
  // periodic, so the run restarts from the larger one.
  const FieldSpec spec = FieldSpec::conway(3);
  const FieldElement alpha = spec.element(6);
  const Polynomial f0 = Polynomial::parse(spec, "poly[s=3]{1,1}");
  const SequenceRun run = generate(spec, alpha, f0, 16);
  CHECK(run.backtracked);
  REQUIRE(run.first_split);
  CHECK(*run.history[1].poly == run.first_split->second);
  CHECK(run.history[1].chosen_factor == 2);
  REQUIRE(run.doubling_step);
  CHECK(*run.doubling_step <= run.stagnation_bound);
  const VerifyReport report = verify_run(run);
  CHECK(report.passed());
  CHECK(report.find("backtrack")->detail == "restarted from g2");
}

TEST_CASE("tampered history fails the bound check") {
  const FieldSpec spec = f8();
  SequenceRun run = generate(spec, spec.root(), Polynomial::parse(spec, "poly[s=3]{1,0,0,1,3}"), 16);
  const std::vector<int> fake = {4, 4, 4, 4, 4, 4, 8};
  run.history.resize(fake.size());
  for (std::size_t i = 0; i < fake.size(); ++i) {
    run.history[i].index = i;
    run.history[i].degree = fake[i];
    if (i > 0) run.history[i].poly.reset();
  }
  run.doubling_step.reset();
  const VerifyReport report = verify_run(run);
  CHECK_FALSE(report.passed());
  const VerifyCheck* bound = report.find("doubling-bound");
  REQUIRE(bound);
  CHECK_FALSE(bound->passed);
}

TEST_CASE("invalid seeds") {
  const FieldSpec spec = f8();
  const FieldElement a = spec.root();
  CHECK(code_of([&] { generate(spec, a, Polynomial::parse(spec, "poly[s=3]{1,0,1}"), 8); }) ==
        ErrorCode::InvalidSeed);
  CHECK(code_of([&] { generate(spec, a, Polynomial::parse(spec, "poly[s=3]{3,0,0,1,3}"), 8); }) ==
        ErrorCode::InvalidSeed);
  CHECK(code_of([&] { generate(spec, a, Polynomial::x(spec), 4); }) == ErrorCode::InvalidSeed);
  CHECK(code_of([&] { generate(spec, spec.zero(), Polynomial::parse(spec, "poly[s=3]{1,1}"), 4); }) ==
        ErrorCode::InvalidParameter);
  CHECK(code_of([&] { generate(spec, a, Polynomial::parse(spec, "poly[s=3]{1,0,0,1,3}"), 2); }) ==
        ErrorCode::InvalidParameter);
}

TEST_CASE("runs are deterministic") {
  const FieldSpec spec = FieldSpec::conway(2);
  for (const auto& f0 : monic_irreducibles(spec, 3)) {
    for (Bits a = 1; a < 4; ++a) {
      const SequenceRun x = generate(spec, spec.element(a), f0, 24, 5);
      const SequenceRun y = generate(spec, spec.element(a), f0, 24, 5);
      const SequenceRun z = generate(spec, spec.element(a), f0, 24, 77);
      CHECK(run_record_json(x, verify_run(x), 5, 24) == run_record_json(y, verify_run(y), 5, 24));
      CHECK(degrees(x) == degrees(z));
      CHECK(x.last == z.last);
    }
  }
}

TEST_CASE("storage budget keeps hashes") {
  const FieldSpec spec = f8();
  const SequenceRun run = generate(spec, spec.root(), Polynomial::parse(spec, "poly[s=3]{1,0,0,1,3}"), 64, 0, 20);
  REQUIRE(run.history.size() == 6);
  CHECK(run.history[1].poly);
  CHECK_FALSE(run.history.back().poly);
  CHECK(run.history.back().hash == polynomial_hash(run.last));
  const VerifyReport report = verify_run(run);
  CHECK(report.passed());
  const auto j = nlohmann::json::parse(run_record_json(run, report, 0, 64));
  CHECK(j["steps"][5]["poly"].is_null());
  CHECK(j["steps"][5]["hash"].is_string());
}

TEST_CASE("run record layout") {
  const FieldSpec spec = f8();
  const SequenceRun run = generate(spec, spec.root(), Polynomial::parse(spec, "poly[s=3]{1,0,0,1,3}"), 16);
  const auto j = nlohmann::ordered_json::parse(run_record_json(run, verify_run(run), 0, 16));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"field", "alpha", "seed_poly", "seed", "target_degree", "l_s", "l_n", "bound",
                                         "steps", "t", "backtracked", "first_split", "verification"});
  CHECK(j["t"] == 2);
  CHECK(j["steps"][1]["poly"] == "poly[s=3]{1,6,1,4,5}");
  CHECK(j["steps"][1]["chosen_factor"] == "g1");
  CHECK(j["verification"]["passed"] == true);
}

}  // TEST_SUITE

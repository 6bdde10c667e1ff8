#include <doctest.h>

#include <algorithm>
#include <random>

#include <json.hpp>

#include "qalpha/dynamics.hpp"
#include "qalpha/factorize.hpp"
#include "qalpha/suites.hpp"
#include "qalpha/transform.hpp"

using namespace qalpha;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalContract;
}

// Minimal polynomial over GF(2) of an element of GF(2^s), from its
// Frobenius orbit.
Polynomial minimal_polynomial_gf2(const FieldElement& a) {
  const FieldSpec& spec = a.spec();
  std::vector<Bits> coeffs = {1};
  FieldElement c = a;
  do {
    std::vector<Bits> next(coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] ^= coeffs[i];
      next[i] ^= spec.mul(coeffs[i], c.bits());
    }
    coeffs = std::move(next);
    c = c.square();
  } while (c != a);
  for (Bits b : coeffs) REQUIRE(b <= 1);
  return Polynomial(FieldSpec::conway(1), coeffs);
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("the graph over GF(2)") {
  const FieldSpec f2 = FieldSpec::conway(1);
  const DynamicsGraph g = build_graph(f2, f2.one());
  CHECK(g.vertex_count() == 3);
  CHECK(g.successor(1) == 0);
  CHECK(g.successor(0) == g.infinity());
  CHECK(g.successor(g.infinity()) == g.infinity());
  REQUIRE(g.components().size() == 1);
  const ComponentSignature& c = g.components()[0];
  CHECK(c.cycle_length == 1);
  CHECK(c.contains_infinity);
  CHECK(c.tree_depth == 2);
  CHECK(c.vertex_count == 3);

  const std::string dot = export_dot(g);
  CHECK(dot.starts_with("digraph theta {"));
  CHECK(dot.find("inf -> inf;") != std::string::npos);
  CHECK(std::count(dot.begin(), dot.end(), '>') == 3);
}

TEST_CASE("the Conway graph of GF(64)") {
  const FieldSpec f64 = FieldSpec::conway(6);
  const FieldElement a = f64.root();
  const DynamicsGraph g = build_graph(f64, a);
  auto v = [&](unsigned e) { return g.index(ProjectivePoint(a.pow(e))); };
  CHECK(g.successor(v(5)) == v(23));
  CHECK(is_periodic(ProjectivePoint(a.pow(23)), g));
  CHECK_FALSE(is_periodic(ProjectivePoint(a.pow(5)), g));
  CHECK(is_periodic(ProjectivePoint::infinity(), g));
  CHECK_FALSE(is_periodic(ProjectivePoint(f64.zero()), g));

  std::vector<ComponentSignature> want = {{3, 3, 24, false}, {9, 1, 18, false}, {9, 1, 18, false}, {1, 3, 5, true}};
  std::sort(want.begin(), want.end());
  CHECK(g.signature_multiset() == want);

  auto pre = g.predecessors(v(32));
  std::sort(pre.begin(), pre.end());
  std::vector<DynamicsGraph::Vertex> want_pre = {v(11), v(53)};
  std::sort(want_pre.begin(), want_pre.end());
  CHECK(pre == want_pre);

  CHECK(export_dot(g).find("  5 -> 23;") != std::string::npos);
  const auto j = nlohmann::json::parse(export_json(g));
  CHECK(j["s"] == 6);
  REQUIRE(j["components"].size() == 4);
  CHECK(j["components"][0]["cycle"] == 9);
  CHECK(j["components"][3]["infinity"] == true);
  CHECK(check_structure(g).empty());
}

TEST_CASE("zero is never periodic and infinity always is") {
  for (unsigned s = 1; s <= 6; ++s) {
    const FieldSpec spec = FieldSpec::conway(s);
    for (Bits a = 1; a < spec.size(); ++a) {
      const DynamicsGraph g = build_graph(spec, spec.element(a));
      CHECK_FALSE(g.on_cycle(0));
      CHECK(g.on_cycle(g.infinity()));
      CHECK(g.predecessors(g.infinity()) == std::vector<DynamicsGraph::Vertex>{0, g.infinity()});
    }
  }
}

TEST_CASE("structure and conjugation") {
  for (unsigned s = 1; s <= 8; ++s) {
    const FieldSpec spec = FieldSpec::conway(s);
    const DynamicsGraph base = build_graph(spec, spec.one());
    for (const auto& alpha : sample_alphas(spec, 10, 3)) {
      const DynamicsGraph g = build_graph(spec, alpha);
      CHECK(check_structure(g).empty());
      CHECK(g.signature_multiset() == base.signature_multiset());
      CHECK(conjugation_mismatches(base, g) == 0);
      std::uint64_t total = 0;
      for (const auto& c : g.components()) {
        total += c.vertex_count;
        CHECK(c.min_tree_depth == c.tree_depth);
        if (!c.contains_infinity) CHECK((c.tree_depth == 1 || c.tree_depth == nu2(s) + 2));
      }
      CHECK(total == spec.size() + 1);
    }
  }
}

TEST_CASE("periodic roots") {
  const FieldSpec f8 = FieldSpec::with_modulus(3, 0xb);
  const FieldElement a = f8.root();
  const Polynomial g1 = Polynomial::parse(f8, "poly[s=3]{1,6,1,4,5}");
  const Polynomial g2 = Polynomial::parse(f8, "poly[s=3]{1,6,3,2,7}");
  CHECK_FALSE((has_periodic_roots(g1, a) && has_periodic_roots(g2, a)));
  // An irreducible transform has leaves of the smaller graph as roots' images.
  const FieldSpec f4 = FieldSpec::conway(2);
  for (const auto& f : monic_irreducibles(f4, 2)) {
    for (Bits b = 1; b < 4; ++b) {
      const Polynomial F = q_alpha_transform(f, f4.element(b));
      if (is_irreducible(F)) CHECK_FALSE(has_periodic_roots(F, f4.element(b)));
    }
  }

  const FieldSpec f16 = FieldSpec::conway(4);
  const DynamicsGraph gr4 = build_graph(f16, f16.one());
  std::size_t tested = 0;
  for (DynamicsGraph::Vertex v = 1; v < gr4.infinity(); ++v) {
    if (!gr4.on_cycle(v)) continue;
    const Polynomial m = minimal_polynomial_gf2(f16.element(v));
    CHECK_MESSAGE(has_periodic_roots(m, FieldSpec::conway(1).one()), m.to_string());
    ++tested;
  }
  CHECK(tested > 0);
}

TEST_CASE("periodicity agrees with the graph for linear factors") {
  const FieldSpec f32 = FieldSpec::conway(5);
  const FieldElement alpha = f32.element(7);
  const DynamicsGraph g = build_graph(f32, alpha);
  for (Bits b = 0; b < 32; ++b) {
    const Polynomial f(f32, {b, 1});
    CHECK(has_periodic_roots(f, alpha) == g.on_cycle(b));
  }
}

TEST_CASE("graph errors and caps") {
  const FieldSpec f8 = FieldSpec::conway(3);
  CHECK(code_of([&] { build_graph(f8, f8.zero()); }) == ErrorCode::InvalidParameter);
  const FieldSpec big = FieldSpec::with_modulus(21, (Bits{1} << 21) | (1 << 2) | 1);
  CHECK(code_of([&] { build_graph(big, big.one()); }) == ErrorCode::UnsupportedScale);
  const Polynomial wide = Polynomial::parse(f8, "poly[s=3]{1,0,0,0,0,0,1}");
  CHECK(code_of([&] { has_periodic_roots(wide, f8.one()); }) == ErrorCode::UnsupportedScale);
  const Polynomial reducible = Polynomial::parse(f8, "poly[s=3]{1,0,1}");
  CHECK(code_of([&] { has_periodic_roots(reducible, f8.one()); }) == ErrorCode::Reducible);
}

TEST_CASE("vertex labels") {
  const FieldSpec f8 = FieldSpec::conway(3);
  const DynamicsGraph g = build_graph(f8, f8.root());
  CHECK(g.label(0) == "zero");
  CHECK(g.label(g.infinity()) == "inf");
  CHECK(g.label(1) == "0");
  CHECK(g.label(f8.root().bits()) == "1");
}

}  // TEST_SUITE

#include <doctest.h>

#include <random>

#include "qalpha/poly.hpp"
#include "qalpha/transform.hpp"

using namespace qalpha;

namespace {

FieldSpec f2() { return FieldSpec::conway(1); }
FieldSpec f8() { return FieldSpec::with_modulus(3, 0xb); }

Polynomial random_poly(const FieldSpec& spec, std::mt19937_64& rng, int degree) {
  std::vector<Bits> c(static_cast<std::size_t>(degree + 1));
  for (auto& v : c) v = rng() & (spec.size() - 1);
  c.back() = 1 + rng() % (spec.size() - 1);
  return Polynomial(spec, std::move(c));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalContract;
}

}  // namespace

TEST_SUITE("poly") {

TEST_CASE("gcd") {
  const FieldSpec spec = f8();
  const Polynomial f = Polynomial::parse(spec, "poly[s=3]{3,1,1}");
  CHECK(gcd(f, Polynomial(spec)) == f.monic());
  const Polynomial x2p1 = Polynomial::from_gf2(f2(), 0b101), xp1 = Polynomial::from_gf2(f2(), 0b11);
  CHECK(x2p1 == xp1 * xp1);
  CHECK(gcd(x2p1, xp1) == xp1);
}

TEST_CASE("divrem") {
  const FieldSpec spec = f8();
  const Polynomial F = Polynomial::parse(spec, "poly[s=3]{1,0,0,1,3,2,0,0,6}");
  const Polynomial f1 = Polynomial::parse(spec, "poly[s=3]{1,6,1,4,5}");
  auto [q, r] = divrem(F, f1);
  CHECK(r.is_zero());
  CHECK(q * f1 == F);
  CHECK(code_of([&] { divrem(F, Polynomial(spec)); }) == ErrorCode::DivisionByZero);
  CHECK(code_of([&] { divrem(F, Polynomial::x(f2())); }) == ErrorCode::SpecMismatch);
}

TEST_CASE("divrem round trip") {
  for (unsigned s : {1u, 2u, 3u, 5u}) {
    const FieldSpec spec = FieldSpec::conway(s);
    std::mt19937_64 rng(s);
    for (int i = 0; i < 200; ++i) {
      const Polynomial a = random_poly(spec, rng, static_cast<int>(rng() % 12));
      const Polynomial b = random_poly(spec, rng, 1 + static_cast<int>(rng() % 6));
      auto [q, r] = divrem(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
}

TEST_CASE("evaluation") {
  const FieldSpec spec = f8();
  const Polynomial f = Polynomial::parse(spec, "poly[s=3]{1,0,0,1,3}");
  CHECK(eval(f, spec.zero()) == spec.element(3));
  CHECK(eval(Polynomial::from_gf2(spec, 0xb), spec.root()).is_zero());
  const Polynomial c = Polynomial::constant(spec.element(5));
  for (Bits b = 0; b < 8; ++b) CHECK(eval(c, spec.element(b)).bits() == 5);
}

TEST_CASE("powmod") {
  const FieldSpec spec = f8();
  const Polynomial m = Polynomial::parse(spec, "poly[s=3]{1,0,0,1,3}");
  const Polynomial x = Polynomial::x(spec);
  CHECK(powmod(x, Exponent(1), m) == rem(x, m));
  CHECK(powmod(x, Exponent::pow2(12), m) == x);
  const Polynomial q = Polynomial::from_gf2(f2(), 0b111);
  CHECK(powmod(Polynomial::x(f2()), Exponent(4), q) == Polynomial::x(f2()));
  CHECK(frobenius_power(x, 12, m) == x);
  CHECK(frobenius_power(x, 3, m) == powmod(x, Exponent(8), m));
  CHECK(code_of([&] { powmod(x, Exponent(2), Polynomial(spec)); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("exponent from hex") {
  const Exponent e = Exponent::from_hex("1000000000000000000");
  CHECK(e.bit_length() == 73);
  CHECK(e.bit(72));
  CHECK_FALSE(e.bit(71));
  CHECK(Exponent::pow2(72).bit_length() == 73);
}

TEST_CASE("reciprocal and self-reciprocity") {
  const FieldSpec spec = f2();
  CHECK(reciprocal(Polynomial::from_gf2(spec, 0b111)) == Polynomial::from_gf2(spec, 0b111));
  CHECK(reciprocal(Polynomial::from_gf2(spec, 0b1011)) == Polynomial::from_gf2(spec, 0b1101));
  CHECK(is_self_reciprocal(Polynomial::from_gf2(spec, 0b111)));
  CHECK_FALSE(is_self_reciprocal(Polynomial::from_gf2(spec, 0b1011)));
  CHECK(code_of([&] { reciprocal(Polynomial(spec)); }) == ErrorCode::InvalidInput);

  for (unsigned s : {1u, 2u, 3u}) {
    const FieldSpec field = FieldSpec::conway(s);
    std::mt19937_64 rng(40 + s);
    for (int i = 0; i < 200; ++i) {
      Polynomial f = random_poly(field, rng, 1 + static_cast<int>(rng() % 8));
      Polynomial g = random_poly(field, rng, 1 + static_cast<int>(rng() % 8));
      if (f.raw(0) == 0 || g.raw(0) == 0) continue;
      CHECK(reciprocal(reciprocal(f)) == f);
      CHECK(reciprocal(f * g) == reciprocal(f) * reciprocal(g));
      CHECK(is_self_reciprocal(q_transform(f)));
    }
  }
}

TEST_CASE("canonical text form") {
  const FieldSpec spec = f8();
  const Polynomial f = Polynomial::parse(spec, "poly[s=3]{1,6,1,4,5}");
  CHECK(f.to_string() == "poly[s=3]{1,6,1,4,5}");
  CHECK(f.pretty() == "x^4 + g^4*x^3 + x^2 + g^2*x + g^6");
  CHECK(Polynomial::parse(spec, "{1,6,1,4,5}") == f);
  CHECK(Polynomial(spec).to_string() == "poly[s=3]{0}");
  CHECK(code_of([&] { Polynomial::parse(spec, "poly[s=2]{1,1}"); }) == ErrorCode::SpecMismatch);
  CHECK(code_of([&] { Polynomial::parse(spec, "poly[s=3]{1,9}"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { Polynomial::parse(spec, "poly[s=3]{1,"); }) == ErrorCode::Parse);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Polynomial g = random_poly(spec, rng, static_cast<int>(rng() % 10));
    CHECK(Polynomial::parse(spec, g.to_string()) == g);
  }
}

TEST_CASE("canonical order: degree first, then coefficients from the top") {
  const FieldSpec spec = f8();
  const Polynomial a = Polynomial::parse(spec, "poly[s=3]{1,6,1,4,5}");
  const Polynomial b = Polynomial::parse(spec, "poly[s=3]{1,6,3,2,7}");
  const Polynomial c = Polynomial::parse(spec, "poly[s=3]{7,7,7}");
  CHECK(a < b);
  CHECK(c < a);
}

TEST_CASE("derivative and square") {
  const FieldSpec spec = f8();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const Polynomial f = random_poly(spec, rng, 1 + static_cast<int>(rng() % 9));
    CHECK(f.square() == f * f);
    CHECK(f.square().derivative().is_zero());
  }
}

}  // TEST_SUITE

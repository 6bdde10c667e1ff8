#include "qalpha/poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>

namespace qalpha {

// ---------------------------------------------------------------- Exponent

Exponent::Exponent(std::uint64_t v) {
  if (v) limbs_.push_back(v);
}

Exponent Exponent::pow2(std::size_t k) {
  Exponent e;
  e.limbs_.assign(k / 64 + 1, 0);
  e.limbs_.back() = std::uint64_t{1} << (k % 64);
  return e;
}

Exponent Exponent::from_hex(std::string_view hex) {
  if (hex.size() > 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex.remove_prefix(2);
  if (hex.empty()) throw Error(ErrorCode::Parse, "empty exponent");
  Exponent e;
  std::size_t nibbles = 0;
  for (auto it = hex.rbegin(); it != hex.rend(); ++it, ++nibbles) {
    int d = 0;
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(*it)));
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else throw Error(ErrorCode::Parse, "bad hex exponent '" + std::string(hex) + "'");
    if (nibbles % 16 == 0) e.limbs_.push_back(0);
    e.limbs_.back() |= static_cast<std::uint64_t>(d) << (4 * (nibbles % 16));
  }
  while (!e.limbs_.empty() && e.limbs_.back() == 0) e.limbs_.pop_back();
  return e;
}

std::size_t Exponent::bit_length() const noexcept {
  if (limbs_.empty()) return 0;
  return 64 * (limbs_.size() - 1) + (64 - static_cast<std::size_t>(std::countl_zero(limbs_.back())));
}

bool Exponent::bit(std::size_t i) const noexcept {
  if (i / 64 >= limbs_.size()) return false;
  return (limbs_[i / 64] >> (i % 64)) & 1;
}

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(FieldSpec spec) : spec_(std::move(spec)) {}

Polynomial::Polynomial(FieldSpec spec, std::vector<Bits> coeffs) : spec_(std::move(spec)), c_(std::move(coeffs)) {
  for (Bits b : c_) {
    if (b >= spec_.size()) throw Error(ErrorCode::InvalidInput, "coefficient out of range for " + spec_.to_string());
  }
  trim();
}

Polynomial::Polynomial(FieldSpec spec, std::span<const FieldElement> coeffs) : spec_(std::move(spec)) {
  c_.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    require_same_field(spec_, c.spec());
    c_.push_back(c.bits());
  }
  trim();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.spec(), std::vector<Bits>{c.bits()}); }

Polynomial Polynomial::x(const FieldSpec& spec) { return Polynomial(spec, std::vector<Bits>{0, 1}); }

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t degree) {
  std::vector<Bits> v(degree + 1, 0);
  v[degree] = c.bits();
  return Polynomial(c.spec(), std::move(v));
}

Polynomial Polynomial::from_gf2(const FieldSpec& spec, Bits packed) {
  std::vector<Bits> v;
  for (int i = 0; i <= gf2x::degree(packed); ++i) v.push_back((packed >> i) & 1);
  return Polynomial(spec, std::move(v));
}

void Polynomial::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldElement Polynomial::leading() const {
  if (c_.empty()) throw Error(ErrorCode::InvalidInput, "zero polynomial has no leading coefficient");
  return FieldElement(spec_, c_.back());
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) throw Error(ErrorCode::DivisionByZero, "cannot normalize the zero polynomial");
  if (c_.back() == 1) return *this;
  return scaled(leading().inverse());
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
  require_same_field(spec_, c.spec());
  Polynomial out(spec_);
  out.c_.reserve(c_.size());
  for (Bits b : c_) out.c_.push_back(spec_.mul(b, c.bits()));
  out.trim();
  return out;
}

Polynomial Polynomial::square() const {
  Polynomial out(spec_);
  if (c_.empty()) return out;
  out.c_.assign(2 * c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[2 * i] = spec_.square(c_[i]);
  return out;
}

Polynomial Polynomial::derivative() const {
  // Characteristic 2: only odd-degree terms survive.
  Polynomial out(spec_);
  for (std::size_t u = 1; u < c_.size(); ++u) out.c_.push_back((u & 1) ? c_[u] : 0);
  out.trim();
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.spec_, b.spec_);
  const auto& big = a.c_.size() >= b.c_.size() ? a : b;
  const auto& small = a.c_.size() >= b.c_.size() ? b : a;
  Polynomial out = big;
  for (std::size_t i = 0; i < small.c_.size(); ++i) out.c_[i] ^= small.c_[i];
  out.trim();
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.spec_, b.spec_);
  Polynomial out(a.spec_);
  if (a.c_.empty() || b.c_.empty()) return out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  const FieldSpec& f = a.spec_;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    Bits ai = a.c_[i];
    if (!ai) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] ^= f.mul(ai, b.c_[j]);
  }
  out.trim();
  return out;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) noexcept {
  if (auto c = a.c_.size() <=> b.c_.size(); c != 0) return c;
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

std::string hex(Bits v) {
  char buf[20];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, 16);
  return std::string(buf, ptr);
}

std::string_view trim_ws(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string Polynomial::to_string() const {
  std::string out = "poly[s=" + std::to_string(spec_.degree()) + "]{";
  if (c_.empty()) {
    out += "0";
  } else {
    for (std::size_t i = c_.size(); i-- > 0;) {
      out += hex(c_[i]);
      if (i) out += ",";
    }
  }
  return out + "}";
}

std::string Polynomial::pretty() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!out.empty()) out += " + ";
    std::string coeff = c_[i] == 1 ? "" : FieldElement(spec_, c_[i]).to_exponent_string();
    if (i == 0) {
      out += coeff.empty() ? "1" : coeff;
      continue;
    }
    if (!coeff.empty()) out += coeff + "*";
    out += i == 1 ? "x" : "x^" + std::to_string(i);
  }
  return out;
}

Polynomial Polynomial::parse(const FieldSpec& spec, std::string_view text) {
  text = trim_ws(text);
  if (text.starts_with("poly[")) {
    auto close = text.find(']');
    if (close == std::string_view::npos) throw Error(ErrorCode::Parse, "unterminated poly header");
    auto header = trim_ws(text.substr(5, close - 5));
    if (!header.starts_with("s=")) throw Error(ErrorCode::Parse, "poly header must be [s=<degree>]");
    unsigned s = 0;
    auto digits = header.substr(2);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), s);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) throw Error(ErrorCode::Parse, "bad poly header");
    if (s != spec.degree()) {
      throw Error(ErrorCode::SpecMismatch, "polynomial is over s=" + std::to_string(s) + " but field is " + spec.to_string());
    }
    text = trim_ws(text.substr(close + 1));
  }
  if (text.starts_with("{")) {
    if (!text.ends_with("}")) throw Error(ErrorCode::Parse, "unterminated coefficient list");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<Bits> desc;
  while (true) {
    auto comma = text.find(',');
    auto item = trim_ws(text.substr(0, comma));
    if (item.empty()) throw Error(ErrorCode::Parse, "empty coefficient");
    desc.push_back(FieldElement::parse(spec, item).bits());
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  std::reverse(desc.begin(), desc.end());
  return Polynomial(spec, std::move(desc));
}

// ---------------------------------------------------------------- free ops

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

namespace {

// In-place remainder of `r` modulo `m` (m nonzero); quotient written to q if given.
void reduce(std::vector<Bits>& r, const Polynomial& m, std::vector<Bits>* q) {
  const FieldSpec& f = m.spec();
  const auto& mc = m.raw();
  const std::size_t dm = mc.size() - 1;
  const Bits lead_inv = f.inv(mc.back());
  if (q) q->assign(r.size() > dm ? r.size() - dm : 0, 0);
  for (std::size_t i = r.size(); i-- > dm;) {
    Bits c = r[i];
    if (!c) continue;
    if (lead_inv != 1) c = f.mul(c, lead_inv);
    if (q) (*q)[i - dm] = c;
    const std::size_t shift = i - dm;
    if (c == 1) {
      for (std::size_t j = 0; j < dm; ++j) r[shift + j] ^= mc[j];
    } else {
      for (std::size_t j = 0; j < dm; ++j) r[shift + j] ^= f.mul(c, mc[j]);
    }
    r[i] = 0;
  }
  r.resize(std::min(r.size(), dm));
  while (!r.empty() && r.back() == 0) r.pop_back();
}

}  // namespace

std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.spec(), b.spec());
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Bits> r = a.raw(), q;
  reduce(r, b, &q);
  return {Polynomial(a.spec(), std::move(q)), Polynomial(a.spec(), std::move(r))};
}

Polynomial rem(const Polynomial& a, const Polynomial& m) {
  require_same_field(a.spec(), m.spec());
  if (m.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial reduction by zero");
  if (a.degree() < m.degree()) return a;
  std::vector<Bits> r = a.raw();
  reduce(r, m, nullptr);
  return Polynomial(a.spec(), std::move(r));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  require_same_field(a.spec(), b.spec());
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

Bits eval_raw(const Polynomial& f, Bits x) {
  const FieldSpec& spec = f.spec();
  Bits acc = 0;
  const auto& c = f.raw();
  for (std::size_t i = c.size(); i-- > 0;) acc = spec.mul(acc, x) ^ c[i];
  return acc;
}

FieldElement eval(const Polynomial& f, const FieldElement& x) {
  require_same_field(f.spec(), x.spec());
  return FieldElement(f.spec(), eval_raw(f, x.bits()));
}

namespace {

void require_modulus(const Polynomial& m) {
  if (m.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero modulus");
  if (m.degree() < 1) throw Error(ErrorCode::InvalidParameter, "modulus must have degree >= 1");
}

}  // namespace

Polynomial mulmod(const Polynomial& a, const Polynomial& b, const Polynomial& m) {
  require_modulus(m);
  return rem(rem(a, m) * rem(b, m), m);
}

Polynomial powmod(const Polynomial& base, const Exponent& e, const Polynomial& m) {
  require_same_field(base.spec(), m.spec());
  require_modulus(m);
  Polynomial b = rem(base, m);
  Polynomial r = Polynomial::constant(m.spec().one());
  for (std::size_t i = e.bit_length(); i-- > 0;) {
    r = rem(r.square(), m);
    if (e.bit(i)) r = rem(r * b, m);
  }
  return r;
}

Polynomial frobenius_power(const Polynomial& a, std::size_t k, const Polynomial& m) {
  require_modulus(m);
  Polynomial r = rem(a, m);
  for (std::size_t i = 0; i < k; ++i) r = rem(r.square(), m);
  return r;
}

Polynomial reciprocal(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "reciprocal of the zero polynomial");
  std::vector<Bits> rev(f.raw().rbegin(), f.raw().rend());
  return Polynomial(f.spec(), std::move(rev));
}

bool is_self_reciprocal(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "self-reciprocity of the zero polynomial");
  const auto& c = f.raw();
  return std::equal(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(c.size() / 2), c.rbegin());
}

}  // namespace qalpha

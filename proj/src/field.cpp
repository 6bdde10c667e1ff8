#include "qalpha/field.hpp"

#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

#include "qalpha/conway.hpp"

namespace qalpha {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SpecMismatch: return "spec-mismatch";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::UndefinedDlog: return "undefined-dlog";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::UnsupportedScale: return "unsupported-scale";
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::ReducibleModulus: return "reducible-modulus";
    case ErrorCode::DegreeMismatch: return "degree-mismatch";
    case ErrorCode::NonMonic: return "non-monic";
    case ErrorCode::NotSelfReciprocal: return "not-self-reciprocal";
    case ErrorCode::Reducible: return "reducible";
    case ErrorCode::InternalContract: return "internal-contract";
    case ErrorCode::InvalidSeed: return "invalid-seed";
    case ErrorCode::TheoremViolation: return "theorem-violation";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

unsigned nu2(std::uint64_t m) {
  if (m == 0) throw Error(ErrorCode::InvalidParameter, "nu2 of zero");
  return static_cast<unsigned>(std::countr_zero(m));
}

namespace {

std::string hex(Bits v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
bool parse_number(std::string_view text, T& out, int base) {
  text = trim(text);
  if (base == 16 && text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
  }
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out, base);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

// ---------------------------------------------------------------- gf2x

namespace gf2x {

int degree(Bits a) noexcept { return a == 0 ? -1 : 63 - std::countl_zero(a); }

Bits mod(Bits a, Bits m) {
  int dm = degree(m);
  if (dm < 0) throw Error(ErrorCode::DivisionByZero, "gf2x::mod by zero");
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

Bits mulmod(Bits a, Bits b, Bits m) {
  int dm = degree(m);
  if (dm < 1) throw Error(ErrorCode::InvalidParameter, "gf2x::mulmod needs deg m >= 1");
  a = mod(a, m);
  b = mod(b, m);
  const Bits top = Bits{1} << (dm - 1);
  const Bits low = m ^ (Bits{1} << dm);
  Bits r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    bool carry = (a & top) != 0;
    a = (a << 1) & ((top << 1) - 1);
    if (carry) a ^= low;
  }
  return r;
}

Bits gcd(Bits a, Bits b) noexcept {
  while (b) {
    int da = degree(a), db = degree(b);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    a ^= b << (da - db);
    if (degree(a) < db) std::swap(a, b);
  }
  return a;
}

std::optional<Bits> smallest_factor(Bits m) {
  int n = degree(m);
  for (int d = 1; 2 * d <= n; ++d) {
    for (Bits cand = Bits{1} << d; cand < (Bits{1} << (d + 1)); ++cand) {
      if (mod(m, cand) == 0) return cand;
    }
  }
  return std::nullopt;
}

bool is_irreducible(Bits m) {
  int n = degree(m);
  if (n < 1) return false;
  if (n == 1) return true;
  const Bits x = mod(0b10, m);
  auto frobenius = [&](int k) {
    Bits r = x;
    for (int i = 0; i < k; ++i) r = mulmod(r, r, m);
    return r;
  };
  if (frobenius(n) != x) return false;
  for (auto p : prime_factors(static_cast<std::uint64_t>(n))) {
    if (gcd(frobenius(n / static_cast<int>(p)) ^ x, m) != 1) return false;
  }
  return true;
}

std::string to_string(Bits a) {
  if (a == 0) return "0";
  std::string out;
  for (int i = degree(a); i >= 0; --i) {
    if (!((a >> i) & 1)) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) out += "1";
    else if (i == 1) out += "x";
    else out += "x^" + std::to_string(i);
  }
  return out;
}

}  // namespace gf2x

// ---------------------------------------------------------------- FieldSpec

Bits clmul_reduce(Bits a, Bits b, Bits modulus, unsigned s) noexcept {
  const Bits top = Bits{1} << (s - 1);
  const Bits mask = (top << 1) - 1;
  const Bits low = modulus & mask;
  Bits r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    bool carry = (a & top) != 0;
    a = (a << 1) & mask;
    if (carry) a ^= low;
  }
  return r;
}

struct FieldSpec::Impl {
  unsigned s = 0;
  Bits modulus = 0;
  Bits mask = 0;
  bool conway = false;
  Bits trace_mask = 0;
  std::optional<Bits> generator;
  // exp has 2*(N-1) entries so log(a)+log(b) indexes it without a modulo.
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> exp;

  Bits slow_mul(Bits a, Bits b) const noexcept { return clmul_reduce(a, b, modulus, s); }
  Bits slow_pow(Bits a, std::uint64_t e) const noexcept {
    Bits r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

FieldSpec FieldSpec::with_modulus(unsigned s, Bits modulus) {
  if (s < 1 || s > kMaxFieldDegree) {
    throw Error(ErrorCode::InvalidParameter, "field degree must be in [1, 63], got " + std::to_string(s));
  }
  if (gf2x::degree(modulus) != static_cast<int>(s)) {
    throw Error(ErrorCode::InvalidParameter,
                "modulus 0x" + hex(modulus) + " does not have degree " + std::to_string(s));
  }
  if (!(modulus & 1)) {
    throw Error(ErrorCode::ReducibleModulus, "modulus 0x" + hex(modulus) + " is divisible by x");
  }
  if (s <= 16) {
    if (auto f = gf2x::smallest_factor(modulus)) {
      throw Error(ErrorCode::ReducibleModulus, "modulus " + gf2x::to_string(modulus) +
                                                   " is reducible: divisible by " + gf2x::to_string(*f));
    }
  } else if (!gf2x::is_irreducible(modulus)) {
    throw Error(ErrorCode::ReducibleModulus, "modulus " + gf2x::to_string(modulus) + " is reducible");
  }

  auto impl = std::make_shared<Impl>();
  impl->s = s;
  impl->modulus = modulus;
  impl->mask = (s == 64) ? ~Bits{0} : ((Bits{1} << s) - 1);
  impl->conway = conway_modulus(s) == modulus;

  // Tr is GF(2)-linear, so it is the parity of a & trace_mask where bit i
  // of the mask is Tr(x^i).
  for (unsigned i = 0; i < s; ++i) {
    Bits xi = impl->slow_pow(gf2x::mod(0b10, modulus), i);
    Bits acc = 0, term = xi;
    for (unsigned j = 0; j < s; ++j) {
      acc ^= term;
      term = impl->slow_mul(term, term);
    }
    if (acc == 1) impl->trace_mask |= Bits{1} << i;
  }

  if (s <= kTableDegreeCap) {
    const std::uint64_t order = (std::uint64_t{1} << s) - 1;
    const auto primes = prime_factors(order);
    for (Bits g = (s == 1 ? 1 : 2); g <= impl->mask; ++g) {
      bool primitive = true;
      for (auto p : primes) {
        if (impl->slow_pow(g, order / p) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        impl->generator = g;
        break;
      }
    }
    impl->log.assign(std::size_t{1} << s, 0);
    impl->exp.assign(2 * order, 0);
    Bits v = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      impl->exp[i] = impl->exp[i + order] = static_cast<std::uint32_t>(v);
      impl->log[v] = static_cast<std::uint32_t>(i);
      v = impl->slow_mul(v, *impl->generator);
    }
  }
  return FieldSpec(std::move(impl));
}

FieldSpec FieldSpec::conway(unsigned s) {
  auto m = conway_modulus(s);
  if (!m) throw Error(ErrorCode::Unsupported, "no Conway polynomial tabulated for s=" + std::to_string(s));
  return with_modulus(s, *m);
}

FieldSpec FieldSpec::parse(std::string_view text) {
  std::optional<unsigned> s;
  std::optional<Bits> modulus;
  bool conway_requested = false;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::Parse, "bad field spec item '" + std::string(item) + "'");
    auto key = trim(item.substr(0, eq));
    auto value = trim(item.substr(eq + 1));
    if (key == "s") {
      unsigned v = 0;
      if (!parse_number(value, v, 10)) throw Error(ErrorCode::Parse, "bad field degree '" + std::string(value) + "'");
      s = v;
    } else if (key == "mod") {
      if (value == "conway") {
        conway_requested = true;
      } else {
        Bits v = 0;
        if (!parse_number(value, v, 16)) throw Error(ErrorCode::Parse, "bad modulus '" + std::string(value) + "'");
        modulus = v;
      }
    } else {
      throw Error(ErrorCode::Parse, "unknown field spec key '" + std::string(key) + "'");
    }
  }
  if (!s) throw Error(ErrorCode::Parse, "field spec '" + std::string(text) + "' lacks s=");
  if (modulus && conway_requested) throw Error(ErrorCode::Parse, "field spec gives two moduli");
  return modulus ? with_modulus(*s, *modulus) : conway(*s);
}

unsigned FieldSpec::degree() const noexcept { return impl_->s; }
Bits FieldSpec::modulus() const noexcept { return impl_->modulus; }
std::uint64_t FieldSpec::size() const noexcept { return std::uint64_t{1} << impl_->s; }
bool FieldSpec::uses_conway_modulus() const noexcept { return impl_->conway; }
bool FieldSpec::has_generator() const noexcept { return impl_->generator.has_value(); }
bool FieldSpec::has_tables() const noexcept { return !impl_->log.empty(); }

std::optional<FieldElement> FieldSpec::generator() const {
  if (!impl_->generator) return std::nullopt;
  return FieldElement(*this, *impl_->generator);
}

FieldElement FieldSpec::element(Bits bits) const { return FieldElement(*this, bits); }
FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }
FieldElement FieldSpec::root() const { return FieldElement(*this, gf2x::mod(0b10, impl_->modulus)); }

std::string FieldSpec::to_string() const {
  return "s=" + std::to_string(impl_->s) + ",mod=0x" + hex(impl_->modulus);
}

Bits FieldSpec::mul(Bits a, Bits b) const noexcept {
  const Impl& f = *impl_;
  if (!f.log.empty()) {
    if (a == 0 || b == 0) return 0;
    return f.exp[f.log[a] + f.log[b]];
  }
  return f.slow_mul(a, b);
}

Bits FieldSpec::square(Bits a) const noexcept { return mul(a, a); }

Bits FieldSpec::pow(Bits a, std::uint64_t e) const noexcept {
  const Impl& f = *impl_;
  if (!f.log.empty()) {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t order = (std::uint64_t{1} << f.s) - 1;
    return f.exp[static_cast<std::uint64_t>(f.log[a]) * (e % order) % order];
  }
  Bits r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Bits FieldSpec::inv(Bits a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const Impl& f = *impl_;
  if (!f.log.empty()) {
    const std::uint64_t order = (std::uint64_t{1} << f.s) - 1;
    return f.exp[(order - f.log[a]) % order];
  }
  // a^(2^s - 2) = prod_{i=1}^{s-1} a^(2^i)
  Bits r = 1, t = a;
  for (unsigned i = 1; i < f.s; ++i) {
    t = mul(t, t);
    r = mul(r, t);
  }
  return r;
}

Bits FieldSpec::sqrt(Bits a) const noexcept {
  for (unsigned i = 1; i < impl_->s; ++i) a = mul(a, a);
  return a;
}

unsigned FieldSpec::trace(Bits a) const noexcept {
  return static_cast<unsigned>(std::popcount(a & impl_->trace_mask) & 1);
}

std::uint64_t FieldSpec::dlog(Bits a) const {
  if (!impl_->generator) {
    throw Error(ErrorCode::Unsupported, "dlog needs a generator (s <= 20); field " + to_string() + " has none");
  }
  if (a == 0) throw Error(ErrorCode::UndefinedDlog, "dlog of zero");
  return impl_->log[a];
}

Bits FieldSpec::exp(std::uint64_t e) const {
  if (!impl_->generator) throw Error(ErrorCode::Unsupported, "field " + to_string() + " has no generator");
  const std::uint64_t order = (std::uint64_t{1} << impl_->s) - 1;
  return impl_->exp[e % order];
}

bool FieldSpec::same_as(const FieldSpec& other) const noexcept { return impl_ == other.impl_; }

bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
  return a.impl_ == b.impl_ || (a.impl_->s == b.impl_->s && a.impl_->modulus == b.impl_->modulus);
}

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw Error(ErrorCode::SpecMismatch, "field mismatch: " + a.to_string() + " vs " + b.to_string());
}

// ---------------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldSpec spec, Bits bits) : spec_(std::move(spec)), bits_(bits) {
  if (bits_ >= spec_.size()) {
    throw Error(ErrorCode::InvalidInput, "element 0x" + hex(bits_) + " has bits beyond degree " +
                                             std::to_string(spec_.degree()));
  }
}

FieldElement FieldElement::inverse() const { return FieldElement(spec_, spec_.inv(bits_)); }
FieldElement FieldElement::square() const { return FieldElement(spec_, spec_.square(bits_)); }
FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(spec_, spec_.pow(bits_, e)); }

std::string FieldElement::to_string() const { return hex(bits_); }

std::string FieldElement::to_exponent_string() const {
  if (bits_ == 0) return "0";
  if (!spec_.has_generator()) return hex(bits_);
  return "g^" + std::to_string(spec_.dlog(bits_));
}

FieldElement FieldElement::parse(const FieldSpec& spec, std::string_view text) {
  text = trim(text);
  if (text.size() > 2 && text[0] == 'g' && text[1] == '^') {
    std::uint64_t e = 0;
    if (!parse_number(text.substr(2), e, 10)) throw Error(ErrorCode::Parse, "bad exponent in '" + std::string(text) + "'");
    return FieldElement(spec, spec.exp(e));
  }
  if (text == "g") {
    auto g = spec.generator();
    if (!g) throw Error(ErrorCode::Unsupported, "field " + spec.to_string() + " has no generator");
    return *g;
  }
  Bits v = 0;
  if (!parse_number(text, v, 16)) throw Error(ErrorCode::Parse, "bad field element '" + std::string(text) + "'");
  return FieldElement(spec, v);
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.spec_, b.spec_);
  return FieldElement(a.spec_, a.bits_ ^ b.bits_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.spec_, b.spec_);
  return FieldElement(a.spec_, a.spec_.mul(a.bits_, b.bits_));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement inv(const FieldElement& a) { return a.inverse(); }
FieldElement sqrt(const FieldElement& a) { return FieldElement(a.spec(), a.spec().sqrt(a.bits())); }
unsigned trace(const FieldElement& a) { return a.spec().trace(a.bits()); }
std::uint64_t dlog(const FieldElement& a) { return a.spec().dlog(a.bits()); }

// ---------------------------------------------------------------- P^1

const FieldElement& ProjectivePoint::value() const {
  if (!value_) throw Error(ErrorCode::InvalidInput, "point at infinity has no finite value");
  return *value_;
}

std::string ProjectivePoint::to_string() const { return value_ ? value_->to_string() : "inf"; }

ProjectivePoint theta(const ProjectivePoint& p, const FieldElement& alpha) {
  if (alpha.is_zero()) throw Error(ErrorCode::InvalidParameter, "theta needs alpha != 0");
  if (p.is_infinity() || p.value().is_zero()) return ProjectivePoint::infinity();
  const FieldElement& x = p.value();
  return ProjectivePoint(x + alpha * x.inverse());
}

ProjectivePoint psi(const ProjectivePoint& p, const FieldElement& gamma) {
  if (gamma.is_zero()) throw Error(ErrorCode::InvalidParameter, "psi needs gamma != 0");
  if (p.is_infinity()) return p;
  return ProjectivePoint(gamma * p.value());
}

}  // namespace qalpha

#include "udc/field.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <sstream>

#include "polynomial.hpp"
#include "udc/error.hpp"

namespace udc {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;
namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 48;
constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 16;
constexpr unsigned kMaxDegree = 48;

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  if (text.empty()) fail(ErrorCode::parse, "field spec: empty " + std::string(what));
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorCode::parse, "field spec: bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

std::uint64_t FieldSpec::order() const { return checked_pow(characteristic, degree); }

std::string to_string(const FieldSpec& spec) {
  std::string out = std::to_string(spec.characteristic);
  if (spec.degree == 1) return out;
  out += '^' + std::to_string(spec.degree) + '/';
  for (std::size_t i = spec.modulus.size(); i-- > 0;) {
    out += std::to_string(spec.modulus[i]);
    if (i != 0) out += ',';
  }
  return out;
}

FieldSpec parse_field_spec(std::string_view text) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) {
    return make_field_spec(parse_uint(text, "characteristic"), 1);
  }
  const std::uint64_t p = parse_uint(text.substr(0, caret), "characteristic");
  std::string_view rest = text.substr(caret + 1);
  const auto slash = rest.find('/');
  const std::uint64_t s = parse_uint(rest.substr(0, slash), "degree");
  if (s == 0 || s > kMaxDegree) fail(ErrorCode::parse, "field spec: degree out of range");
  if (slash == std::string_view::npos) return make_field_spec(p, static_cast<unsigned>(s));

  std::vector<std::uint64_t> coeffs;
  std::string_view list = rest.substr(slash + 1);
  while (true) {
    const auto comma = list.find(',');
    coeffs.push_back(parse_uint(list.substr(0, comma), "modulus coefficient"));
    if (comma == std::string_view::npos) break;
    list = list.substr(comma + 1);
  }
  return make_field_spec(p, static_cast<unsigned>(s), std::move(coeffs));
}

FieldSpec make_field_spec(std::uint64_t p, unsigned s,
                          std::optional<std::vector<std::uint64_t>> modulus_high_first) {
  if (s < 1) fail(ErrorCode::invalid_argument, "field degree must be >= 1");
  if (!is_prime(p)) fail(ErrorCode::invalid_argument, "characteristic " + std::to_string(p) + " is not prime");
  const std::uint64_t q = checked_pow(p, s);
  if (q == 0 || q > kMaxOrder) fail(ErrorCode::too_large, "field order exceeds 2^48");

  FieldSpec spec;
  spec.characteristic = p;
  spec.degree = s;
  if (s == 1) {
    if (modulus_high_first && !modulus_high_first->empty()) {
      fail(ErrorCode::invalid_argument, "prime fields take no modulus");
    }
    return spec;
  }

  if (modulus_high_first) {
    const auto& m = *modulus_high_first;
    if (m.size() != s + 1) {
      fail(ErrorCode::invalid_argument, "modulus must have degree + 1 coefficients");
    }
    if (m.front() != 1) fail(ErrorCode::invalid_argument, "modulus must be monic");
    for (std::uint64_t c : m) {
      if (c >= p) fail(ErrorCode::invalid_argument, "modulus coefficient out of range");
    }
    spec.modulus.assign(m.rbegin(), m.rend());
    if (!poly::is_irreducible(spec.modulus, p)) {
      fail(ErrorCode::invalid_argument, "modulus is reducible over GF(" + std::to_string(p) + ")");
    }
    return spec;
  }

  // Lexicographically smallest monic irreducible: the lower coefficients,
  // read high first, count up as a base-p integer.
  const std::uint64_t count = checked_pow(p, s);
  for (std::uint64_t v = 0; v < count; ++v) {
    poly::Poly f(s + 1, 0);
    f[s] = 1;
    std::uint64_t x = v;
    for (unsigned i = 0; i < s; ++i) {
      f[i] = x % p;
      x /= p;
    }
    if (poly::is_irreducible(f, p)) {
      spec.modulus = std::move(f);
      return spec;
    }
  }
  fail(ErrorCode::internal, "no irreducible polynomial found");
}

FieldPtr Field::create(const FieldSpec& spec) { return std::make_shared<const Field>(spec); }

Field::Field(const FieldSpec& spec) : spec_(spec), p_(spec.characteristic), s_(spec.degree) {
  // Re-validate: specs may be built by hand.
  if (s_ == 1) {
    spec_ = make_field_spec(p_, 1);
  } else {
    if (spec.modulus.size() != s_ + 1) fail(ErrorCode::invalid_argument, "modulus size mismatch");
    std::vector<std::uint64_t> high(spec.modulus.rbegin(), spec.modulus.rend());
    spec_ = make_field_spec(p_, s_, high);
  }
  q_ = spec_.order();
  modulus_ = spec_.modulus;
  group_factors_ = factorize(q_ - 1);

  for (Symbol a = 1; a < q_; ++a) {
    bool primitive = true;
    for (auto [f, e] : group_factors_) {
      if (slow_pow(a, (q_ - 1) / f) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = a;
      break;
    }
  }

  if (s_ > 1 && q_ <= kLogTableLimit) {
    const std::uint64_t n = q_ - 1;
    exp_.assign(2 * n, 0);
    log_.assign(q_, 0);
    Symbol x = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      exp_[i] = static_cast<std::uint32_t>(x);
      exp_[i + n] = static_cast<std::uint32_t>(x);
      log_[x] = static_cast<std::uint32_t>(i);
      x = slow_mul(x, generator_);
    }
  }
}

unsigned Field::symbol_width() const noexcept {
  unsigned bits = 0;
  for (std::uint64_t v = q_ - 1; v > 0; v >>= 1U) ++bits;
  return std::max(1U, (bits + 7) / 8);
}

Symbol Field::from_integer(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Symbol>(r);
}

Symbol Field::from_coefficients(std::span<const std::uint64_t> low_first) const {
  if (low_first.size() > s_) fail(ErrorCode::invalid_argument, "too many coefficients");
  Symbol v = 0;
  for (std::size_t i = low_first.size(); i-- > 0;) {
    if (low_first[i] >= p_) fail(ErrorCode::invalid_argument, "coefficient out of range");
    v = v * p_ + low_first[i];
  }
  return v;
}

std::vector<std::uint64_t> Field::coefficients(Symbol a) const {
  std::vector<std::uint64_t> out(s_, 0);
  for (unsigned i = 0; i < s_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Symbol Field::digit_add(Symbol a, Symbol b, bool subtract) const noexcept {
  if (p_ == 2) return a ^ b;
  Symbol out = 0;
  Symbol scale = 1;
  for (unsigned i = 0; i < s_; ++i) {
    const std::uint64_t x = a % p_;
    const std::uint64_t y = b % p_;
    a /= p_;
    b /= p_;
    std::uint64_t d = subtract ? (x >= y ? x - y : x + p_ - y) : (x + y >= p_ ? x + y - p_ : x + y);
    out += d * scale;
    scale *= p_;
  }
  return out;
}

Symbol Field::add(Symbol a, Symbol b) const noexcept {
  if (s_ == 1) {
    const Symbol c = a + b;
    return c >= p_ ? c - p_ : c;
  }
  return digit_add(a, b, false);
}

Symbol Field::sub(Symbol a, Symbol b) const noexcept {
  if (s_ == 1) return a >= b ? a - b : a + p_ - b;
  return digit_add(a, b, true);
}

Symbol Field::neg(Symbol a) const noexcept { return sub(0, a); }

Symbol Field::slow_mul(Symbol a, Symbol b) const noexcept {
  if (s_ == 1) {
    if (p_ <= UINT32_MAX) return a * b % p_;
    return mul_mod(a, b, p_);
  }
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  std::array<std::uint64_t, kMaxDegree> da{};
  std::array<std::uint64_t, kMaxDegree> db{};
  for (unsigned i = 0; i < s_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (unsigned i = 0; i < s_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < s_; ++j) {
      prod[i + j] = (prod[i + j] + mul_mod(da[i], db[j], p_)) % p_;
    }
  }
  // Reduce with x^s = -(m_{s-1} x^{s-1} + ... + m_0).
  for (unsigned k = 2 * s_ - 2; k >= s_; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < s_; ++i) {
      const std::uint64_t t = mul_mod(c, modulus_[i], p_);
      std::uint64_t& slot = prod[k - s_ + i];
      slot = slot >= t ? slot - t : slot + p_ - t;
    }
  }
  Symbol out = 0;
  for (unsigned i = s_; i-- > 0;) out = out * p_ + prod[i];
  return out;
}

Symbol Field::mul(Symbol a, Symbol b) const noexcept {
  if (!log_.empty()) {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  return slow_mul(a, b);
}

Symbol Field::slow_pow(Symbol a, std::uint64_t e) const noexcept {
  Symbol result = 1;
  while (e > 0) {
    if (e & 1U) result = slow_mul(result, a);
    a = slow_mul(a, a);
    e >>= 1U;
  }
  return result;
}

Symbol Field::pow_u(Symbol a, std::uint64_t e) const noexcept {
  if (!log_.empty()) {
    if (a == 0) return e == 0 ? 1 : 0;
    const std::uint64_t n = q_ - 1;
    return exp_[static_cast<std::uint64_t>(log_[a]) * (e % n) % n];
  }
  if (s_ == 1) return pow_mod(a, e, p_);
  return slow_pow(a, e);
}

Symbol Field::inv(Symbol a) const {
  if (a == 0) fail(ErrorCode::invalid_argument, "division by zero in GF(" + std::to_string(q_) + ")");
  if (!log_.empty()) {
    const std::uint64_t n = q_ - 1;
    return exp_[(n - log_[a]) % n];
  }
  if (s_ == 1) {
    // Extended Euclid on signed 128-bit to stay exact for p < 2^48.
    i128 r0 = static_cast<i128>(p_), r1 = static_cast<i128>(a);
    i128 t0 = 0, t1 = 1;
    while (r1 != 0) {
      const i128 quot = r0 / r1;
      const i128 r2 = r0 - quot * r1;
      const i128 t2 = t0 - quot * t1;
      r0 = r1;
      r1 = r2;
      t0 = t1;
      t1 = t2;
    }
    if (t0 < 0) t0 += static_cast<i128>(p_);
    return static_cast<Symbol>(t0);
  }
  return slow_pow(a, q_ - 2);
}

Symbol Field::div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

Symbol Field::pow(Symbol a, std::int64_t e) const {
  if (e < 0) {
    return pow_u(inv(a), static_cast<std::uint64_t>(-(e + 1)) + 1);
  }
  return pow_u(a, static_cast<std::uint64_t>(e));
}

std::uint64_t Field::element_order(Symbol a) const {
  if (a == 0) fail(ErrorCode::invalid_argument, "element_order: zero has no multiplicative order");
  if (!contains(a)) fail(ErrorCode::invalid_argument, "element_order: symbol outside field");
  std::uint64_t m = q_ - 1;
  for (auto [f, e] : group_factors_) {
    for (unsigned i = 0; i < e && pow_u(a, m / f) == 1; ++i) m /= f;
  }
  return m;
}

Symbol Field::find_element_of_order(std::uint64_t n) const {
  if (n == 0 || (q_ - 1) % n != 0) {
    fail(ErrorCode::invalid_argument, "no element of order " + std::to_string(n) + " in GF(" +
                                          std::to_string(q_) + "): n does not divide q - 1");
  }
  if (n <= (std::uint64_t{1} << 20)) {
    // Every element of order n is h^j with gcd(j, n) = 1.
    const Symbol h = pow_u(generator_, (q_ - 1) / n);
    Symbol best = h;
    Symbol x = 1;
    for (std::uint64_t j = 1; j <= n; ++j) {
      x = mul(x, h);
      if (std::gcd(j, n) == 1) best = std::min(best, x);
    }
    return best;
  }
  for (Symbol a = 1; a < q_; ++a) {
    if (element_order(a) == n) return a;
  }
  fail(ErrorCode::internal, "element of order n not found");
}

std::string Field::format(Symbol a) const {
  if (s_ == 1) return std::to_string(a);
  const auto c = coefficients(a);
  std::ostringstream os;
  bool first = true;
  for (unsigned i = s_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

FieldElement::FieldElement(FieldPtr field, Symbol value) : field_(std::move(field)), value_(value) {
  if (!field_) fail(ErrorCode::invalid_argument, "null field");
  if (!field_->contains(value_)) fail(ErrorCode::invalid_argument, "symbol outside field");
}

const Field& FieldElement::same_field(const FieldElement& o) const {
  if (field_ != o.field_ && field_->spec() != o.field_->spec()) {
    fail(ErrorCode::invalid_argument, "mixed-field operands");
  }
  return *field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {field_, same_field(o).add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {field_, same_field(o).sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {field_, same_field(o).mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  return {field_, same_field(o).div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
std::uint64_t FieldElement::order() const { return field_->element_order(value_); }

bool FieldElement::operator==(const FieldElement& o) const {
  return value_ == o.value_ && (field_ == o.field_ || field_->spec() == o.field_->spec());
}

FieldPtr make_field(std::uint64_t p, unsigned s, std::optional<std::vector<std::uint64_t>> modulus_high_first) {
  return Field::create(make_field_spec(p, s, std::move(modulus_high_first)));
}

FieldPtr make_field(std::string_view spec_text) { return Field::create(parse_field_spec(spec_text)); }

std::uint64_t element_order(const FieldElement& x) { return x.order(); }

FieldElement find_element_of_order(const FieldPtr& field, std::uint64_t n) {
  return {field, field->find_element_of_order(n)};
}

}  // namespace udc

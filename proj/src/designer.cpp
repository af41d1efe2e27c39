#include "udc/designer.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "udc/error.hpp"

namespace udc {

Rational Rational::reduced() const {
  if (den == 0) fail(ErrorCode::invalid_argument, "zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

bool Rational::operator==(const Rational& o) const {
  const Rational a = reduced();
  const Rational b = o.reduced();
  return a.num == b.num && a.den == b.den;
}

std::string to_string(const Rational& x) { return std::to_string(x.num) + "/" + std::to_string(x.den); }

Rational nearest_rational(double x, std::uint64_t max_den) {
  if (!(x > 0.0 && x < 1.0)) fail(ErrorCode::invalid_argument, "rate must lie strictly between 0 and 1");
  Rational best{0, 1};
  double best_err = 2.0;
  for (std::uint64_t den = 1; den <= max_den; ++den) {
    const auto num = static_cast<std::uint64_t>(std::llround(x * static_cast<double>(den)));
    const double err = std::fabs(x - static_cast<double>(num) / static_cast<double>(den));
    if (err < best_err) {
      best_err = err;
      best = Rational{num, den}.reduced();
    }
  }
  return best;
}

Rational parse_rate(const std::string& text, bool* exact) {
  if (exact) *exact = true;
  const auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      std::size_t used = 0;
      const auto a = std::stoull(text.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument("rate");
      const std::string tail = text.substr(slash + 1);
      const auto b = std::stoull(tail, &used);
      if (used != tail.size()) throw std::invalid_argument("rate");
      if (b == 0 || a == 0 || a >= b) fail(ErrorCode::invalid_argument, "rate must lie strictly between 0 and 1");
      return Rational{a, b}.reduced();
    }
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("rate");
    const Rational r = nearest_rational(v);
    if (exact) *exact = r.value() == v;
    return r;
  } catch (const std::logic_error&) {
    fail(ErrorCode::parse, "cannot parse rate '" + text + "'");
  }
}

std::string FieldCandidate::label() const {
  if (m == 1) return std::to_string(p);
  return std::to_string(p) + "^" + std::to_string(m);
}

namespace {

bool smaller_field(const FieldCandidate& a, const FieldCandidate& b) {
  if (a.q && b.q) {
    if (*a.q != *b.q) return *a.q < *b.q;
    return a.p < b.p;
  }
  if (a.q != b.q) return a.q.has_value();
  const long double la = static_cast<long double>(a.m) * std::log(static_cast<long double>(a.p));
  const long double lb = static_cast<long double>(b.m) * std::log(static_cast<long double>(b.p));
  if (la != lb) return la < lb;
  return a.p < b.p;
}

constexpr std::uint64_t kInstantiableLimit = std::uint64_t{1} << 32;

}  // namespace

FieldCandidates field_candidates(std::uint64_t n, const CandidateOptions& opts) {
  if (n < 2) fail(ErrorCode::invalid_argument, "code length must be at least 2");
  FieldCandidates out;
  if (!opts.prime_field_only) {
    for (std::uint64_t p = 2; p < n; ++p) {
      if (!is_prime(p) || n % p == 0) continue;
      FieldCandidate c;
      c.p = p;
      c.m = residue_order(p, n);
      if (const std::uint64_t q = checked_pow(p, c.m); q != 0) c.q = q;
      c.prime_field = c.m == 1;
      c.instantiable = c.q && *c.q <= kInstantiableLimit;
      out.small_characteristic.push_back(c);
    }
    std::sort(out.small_characteristic.begin(), out.small_characteristic.end(), smaller_field);
  }
  for (std::uint64_t k = 1; out.prime_fields.size() < opts.prime_fields && k < 1'000'000; ++k) {
    const std::uint64_t p = k * n + 1;
    if (!is_prime(p)) continue;
    FieldCandidate c;
    c.p = p;
    c.m = 1;
    c.q = p;
    c.prime_field = true;
    c.instantiable = p <= kInstantiableLimit;
    if (c.instantiable) c.omega = make_field(p)->find_element_of_order(n);
    out.prime_fields.push_back(c);
  }
  return out;
}

std::optional<FieldCandidate> CodePlan::smallest_field() const {
  if (!candidates.small_characteristic.empty()) return candidates.small_characteristic.front();
  if (!candidates.prime_fields.empty()) return candidates.prime_fields.front();
  return std::nullopt;
}

CodePlan plan_code(Rational rate, std::size_t t, const CandidateOptions& opts) {
  if (t < 1) fail(ErrorCode::invalid_argument, "error budget t must be at least 1");
  const Rational r0 = rate.reduced();
  if (r0.num == 0 || r0.num >= r0.den) fail(ErrorCode::invalid_argument, "rate must lie strictly between 0 and 1");
  const std::uint64_t gap = r0.den - r0.num;
  // floor(k * gap / 2) >= t  <=>  k * gap >= 2t
  const std::uint64_t k = (2 * t + gap - 1) / gap;
  CodePlan plan;
  plan.requested = rate;
  plan.rate = r0;
  plan.n = static_cast<std::size_t>(k * r0.den);
  plan.r = static_cast<std::size_t>(k * r0.num);
  plan.d = plan.n - plan.r + 1;
  plan.t = (plan.n - plan.r) / 2;
  plan.exact_rate = true;
  plan.phi_n = euler_phi(plan.n);
  plan.candidates = field_candidates(plan.n, opts);
  return plan;
}

std::vector<CodePlan> optimal_codes_for_field(const FieldSpec& spec) {
  const std::uint64_t q = spec.order();
  if (q < 3) fail(ErrorCode::invalid_argument, "field must have at least 3 elements");
  const std::uint64_t n = q - 1;
  if (n > 1'000'000) fail(ErrorCode::too_large, "field too large to enumerate its codes");
  FieldCandidate self;
  self.p = spec.characteristic;
  self.m = spec.degree;
  self.q = q;
  self.prime_field = spec.degree == 1;
  self.instantiable = true;
  if (self.prime_field) self.omega = make_field(spec.characteristic)->find_element_of_order(n);
  std::vector<CodePlan> out;
  for (std::uint64_t r = 1; r < n; ++r) {
    CodePlan p;
    p.n = n;
    p.r = r;
    p.d = n - r + 1;
    p.t = (n - r) / 2;
    p.rate = Rational{r, n}.reduced();
    p.requested = p.rate;
    p.phi_n = euler_phi(n);
    (self.prime_field ? p.candidates.prime_fields : p.candidates.small_characteristic).push_back(self);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

void candidate_rows(std::ostringstream& os, const std::vector<FieldCandidate>& list) {
  os << "  " << std::left << std::setw(10) << "p" << std::setw(6) << "m" << std::setw(22) << "q" << std::setw(8)
     << "omega" << "instantiable\n";
  for (const auto& c : list) {
    os << "  " << std::setw(10) << c.p << std::setw(6) << c.m << std::setw(22)
       << (c.q ? std::to_string(*c.q) : c.label()) << std::setw(8) << (c.omega ? std::to_string(*c.omega) : "-")
       << (c.instantiable ? "yes" : "no") << "\n";
  }
}

nlohmann::json candidate_json(const FieldCandidate& c) {
  nlohmann::json j{{"p", c.p}, {"m", c.m}, {"label", c.label()}, {"prime_field", c.prime_field},
                   {"instantiable", c.instantiable}};
  j["q"] = c.q ? nlohmann::json(*c.q) : nlohmann::json(nullptr);
  j["omega"] = c.omega ? nlohmann::json(*c.omega) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

std::string plan_table(const CodePlan& plan) {
  std::ostringstream os;
  os << "code (" << plan.n << ", " << plan.r << ", " << plan.d << ")  rate " << to_string(plan.rate)
     << "  corrects t = " << plan.t << "\n";
  if (!plan.exact_rate) os << "note: requested rate snapped to " << to_string(plan.rate) << "\n";
  os << "phi(n) = " << plan.phi_n << " (p^phi(n) = 1 mod n for any p coprime to n)\n";
  if (const auto best = plan.smallest_field()) os << "smallest field: GF(" << best->label() << ")\n";
  if (!plan.candidates.small_characteristic.empty()) {
    os << "fields GF(p^m), p < n, m = ord_n(p):\n";
    candidate_rows(os, plan.candidates.small_characteristic);
  }
  if (!plan.candidates.prime_fields.empty()) {
    os << "prime fields GF(p), p = 1 mod n:\n";
    candidate_rows(os, plan.candidates.prime_fields);
  }
  return os.str();
}

std::string plan_json(const CodePlan& plan) {
  nlohmann::json j{{"n", plan.n},
                   {"r", plan.r},
                   {"d", plan.d},
                   {"t", plan.t},
                   {"rate", to_string(plan.rate)},
                   {"requested_rate", to_string(plan.requested)},
                   {"exact_rate", plan.exact_rate},
                   {"phi_n", plan.phi_n}};
  j["small_characteristic"] = nlohmann::json::array();
  for (const auto& c : plan.candidates.small_characteristic) j["small_characteristic"].push_back(candidate_json(c));
  j["prime_fields"] = nlohmann::json::array();
  for (const auto& c : plan.candidates.prime_fields) j["prime_fields"].push_back(candidate_json(c));
  const auto best = plan.smallest_field();
  j["smallest_field"] = best ? nlohmann::json(best->label()) : nlohmann::json(nullptr);
  return j.dump(2);
}

std::string plans_table(const std::vector<CodePlan>& plans) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "n" << std::setw(8) << "r" << std::setw(8) << "d" << std::setw(8) << "t"
     << "rate\n";
  for (const auto& p : plans) {
    os << std::setw(8) << p.n << std::setw(8) << p.r << std::setw(8) << p.d << std::setw(8) << p.t
       << to_string(p.rate) << "\n";
  }
  return os.str();
}

}  // namespace udc

#include "udc/channel.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "udc/ecp_decoder.hpp"
#include "udc/error.hpp"

namespace udc {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t i) noexcept {
  return splitmix64(splitmix64(master) ^ (i * 0xD1B54A32D192ED03ULL));
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double Rng::real() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Injection inject_errors(const Field& f, std::span<const Symbol> codeword, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::invalid_argument, "error probability must lie in [0, 1]");
  Injection out{Vector(codeword.begin(), codeword.end()), 0};
  for (auto& x : out.word) {
    if (rng.real() >= p) continue;
    // Uniform over the q - 1 other elements.
    const Symbol shift = 1 + rng.below(f.order() - 1);
    x = (x + shift) % f.order();
    ++out.weight;
  }
  return out;
}

Injection inject_errors(const Field& f, std::span<const Symbol> codeword, double p, std::uint64_t seed) {
  Rng rng(seed);
  return inject_errors(f, codeword, p, rng);
}

ChernoffBound chernoff_bound(std::size_t n, double p, std::size_t t) {
  if (n == 0 || !(p > 0.0 && p < 1.0)) fail(ErrorCode::invalid_argument, "chernoff_bound needs n >= 1 and 0 < p < 1");
  ChernoffBound b;
  b.mu = static_cast<double>(n) * p;
  b.delta = static_cast<double>(t + 1) / b.mu - 1.0;
  if (!(b.delta > 0.0)) {
    fail(ErrorCode::invalid_argument, "Chernoff bound inapplicable: (t + 1) <= n p, rate too high for this p");
  }
  b.bound = std::exp(-b.delta * b.delta * b.mu / (2.0 + b.delta));
  return b;
}

SimulationReport run_simulation(const LinearCode& code, double p, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) fail(ErrorCode::invalid_argument, "need at least one trial");
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::invalid_argument, "error probability must lie in (0, 1)");
  const Field& f = code.field();
  SimulationReport rep;
  rep.code = to_string(describe(code));
  rep.n = code.n();
  rep.r = code.r();
  rep.t = code.t();
  rep.p = p;
  rep.trials = trials;
  rep.seed = seed;
  rep.mu = static_cast<double>(code.n()) * p;
  const double rate = static_cast<double>(code.r()) / static_cast<double>(code.n());
  rep.above_capacity_threshold = rate > 1.0 - 2.0 * p;
  if (static_cast<double>(rep.t + 1) > rep.mu) {
    const auto b = chernoff_bound(code.n(), p, rep.t);
    rep.delta = b.delta;
    rep.chernoff_upper = b.bound;
  }

  std::uint64_t weight_sum = 0;
  Vector message(code.r());
  for (std::uint64_t i = 0; i < trials; ++i) {
    Rng rng(trial_seed(seed, i));
    for (auto& m : message) m = rng.below(f.order());
    const Vector sent = code.encode(message);
    const Injection inj = inject_errors(f, sent, p, rng);
    weight_sum += inj.weight;
    const DecodeOutcome out = decode(code, inj.word);
    const bool decoder_failed = out.status == DecodeStatus::failure;
    const bool wrong = !decoder_failed && out.corrected != sent;
    if (decoder_failed) ++rep.decoder_failures;
    if (wrong) ++rep.miscorrections;
    if (inj.weight <= rep.t) {
      ++rep.trials_within_t;
      if (decoder_failed || wrong) ++rep.failures_within_t;
    }
  }
  rep.failures = rep.decoder_failures + rep.miscorrections;
  rep.mean_weight = static_cast<double>(weight_sum) / static_cast<double>(trials);
  rep.empirical_failure_rate = static_cast<double>(rep.failures) / static_cast<double>(trials);
  return rep;
}

std::string report_json(const SimulationReport& rep) {
  nlohmann::ordered_json j;
  j["code"] = rep.code;
  j["n"] = rep.n;
  j["r"] = rep.r;
  j["t"] = rep.t;
  j["p"] = rep.p;
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["rng"] = rep.rng;
  j["failures"] = rep.failures;
  j["decoder_failures"] = rep.decoder_failures;
  j["miscorrections"] = rep.miscorrections;
  j["trials_within_t"] = rep.trials_within_t;
  j["failures_within_t"] = rep.failures_within_t;
  j["mean_weight"] = rep.mean_weight;
  j["empirical_failure_rate"] = rep.empirical_failure_rate;
  j["mu"] = rep.mu;
  j["delta"] = rep.delta ? nlohmann::ordered_json(*rep.delta) : nlohmann::ordered_json(nullptr);
  j["chernoff_upper"] = rep.chernoff_upper ? nlohmann::ordered_json(*rep.chernoff_upper) : nlohmann::ordered_json(nullptr);
  j["above_capacity_threshold"] = rep.above_capacity_threshold;
  return j.dump(2);
}

std::string report_text(const SimulationReport& rep) {
  std::ostringstream os;
  os << "code            " << rep.code << "\n"
     << "(n, r, t)       (" << rep.n << ", " << rep.r << ", " << rep.t << ")\n"
     << "p               " << rep.p << "\n"
     << "trials          " << rep.trials << "  (seed " << rep.seed << ", " << rep.rng << ")\n"
     << "failures        " << rep.failures << "  (decoder " << rep.decoder_failures << ", miscorrected "
     << rep.miscorrections << ")\n"
     << "within t        " << rep.failures_within_t << " failures in " << rep.trials_within_t << " trials\n"
     << "mean weight     " << rep.mean_weight << "  (mu = n p = " << rep.mu << ")\n"
     << std::setprecision(6) << "failure rate    " << rep.empirical_failure_rate << "\n";
  if (rep.chernoff_upper) {
    os << "chernoff bound  " << *rep.chernoff_upper << "  (delta " << *rep.delta << ")"
       << (rep.empirical_failure_rate <= *rep.chernoff_upper ? "" : "  EXCEEDED") << "\n";
  } else {
    os << "chernoff bound  not applicable: t + 1 <= n p\n";
  }
  if (rep.above_capacity_threshold) os << "warning: rate exceeds 1 - 2p; failure probability tends to >= 1/2\n";
  return os.str();
}

}  // namespace udc

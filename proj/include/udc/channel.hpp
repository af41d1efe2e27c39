#pragma once

// Symbol-error channel, Chernoff failure bounds and Monte Carlo decoding trials.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>

#include "udc/matrix.hpp"
#include "udc/unit_scheme.hpp"

namespace udc {

std::uint64_t splitmix64(std::uint64_t x) noexcept;
/// Independent stream seed for trial i; serial and partitioned runs agree.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t i) noexcept;

/// mt19937_64 with portable integer and real conversions (the standard
/// distributions are implementation-defined).
class Rng {
 public:
  static constexpr const char* name = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 bits.
  double real();

 private:
  std::mt19937_64 engine_;
};

struct Injection {
  Vector word;
  std::size_t weight = 0;
};

/// Each symbol independently, with probability p, becomes a uniformly chosen
/// different field element.
Injection inject_errors(const Field& f, std::span<const Symbol> codeword, double p, Rng& rng);
Injection inject_errors(const Field& f, std::span<const Symbol> codeword, double p, std::uint64_t seed);

struct ChernoffBound {
  double mu = 0;
  /// (1 + delta) mu = t + 1
  double delta = 0;
  /// exp(-delta^2 mu / (2 + delta)), bounds Pr[weight >= t + 1]
  double bound = 0;
};

/// Throws invalid_argument when delta <= 0: the bound does not apply.
ChernoffBound chernoff_bound(std::size_t n, double p, std::size_t t);

struct SimulationReport {
  std::string code;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t t = 0;
  double p = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::string rng = Rng::name;

  /// Decoder failures plus silent miscorrections.
  std::uint64_t failures = 0;
  std::uint64_t decoder_failures = 0;
  std::uint64_t miscorrections = 0;
  std::uint64_t trials_within_t = 0;
  std::uint64_t failures_within_t = 0;
  double mean_weight = 0;
  double empirical_failure_rate = 0;

  double mu = 0;
  std::optional<double> delta;
  std::optional<double> chernoff_upper;
  /// R > 1 - 2p: failure probability tends to at least 1/2 for large n.
  bool above_capacity_threshold = false;
};

SimulationReport run_simulation(const LinearCode& code, double p, std::uint64_t trials, std::uint64_t seed);

std::string report_json(const SimulationReport& rep);
std::string report_text(const SimulationReport& rep);

}  // namespace udc

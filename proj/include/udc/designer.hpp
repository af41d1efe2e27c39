#pragma once

// Code design: from a rate R = r0/n0 and an error budget t to (n, r, d) and a
// list of fields GF(p^m) carrying an n-th root of unity.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "udc/field.hpp"
#include "udc/number_theory.hpp"

namespace udc {

struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Rational reduced() const;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational& o) const;
};

std::string to_string(const Rational& x);
/// "a/b" or a decimal in (0, 1).
Rational parse_rate(const std::string& text, bool* exact = nullptr);

/// Closest fraction with denominator <= max_den; ties go to the smaller denominator.
Rational nearest_rational(double x, std::uint64_t max_den = 64);

struct FieldCandidate {
  std::uint64_t p = 0;
  std::uint64_t m = 1;
  /// p^m, absent when it overflows 64 bits.
  std::optional<std::uint64_t> q;
  bool prime_field = false;
  /// q <= 2^32: small enough to build and use here.
  bool instantiable = false;
  /// Canonical n-th root of unity, computed for prime fields.
  std::optional<Symbol> omega;

  /// "43^4", "337".
  std::string label() const;
};

struct CandidateOptions {
  /// Number of primes p = 1 (mod n) to list.
  std::size_t prime_fields = 4;
  bool prime_field_only = false;
};

/// Fields GF(p^m) containing a primitive n-th root of unity.
///   small characteristic: every prime p < n with p not dividing n, m = ord_n(p),
///     in ascending q, ties to the smaller p;
///   prime fields: the first few primes p = 1 (mod n), ascending.
struct FieldCandidates {
  std::vector<FieldCandidate> small_characteristic;
  std::vector<FieldCandidate> prime_fields;
};
FieldCandidates field_candidates(std::uint64_t n, const CandidateOptions& opts = {});

struct CodePlan {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t d = 0;
  std::size_t t = 0;
  Rational rate;
  Rational requested;
  bool exact_rate = true;
  std::uint64_t phi_n = 0;
  FieldCandidates candidates;

  /// The first small-characteristic candidate, else the first prime field.
  std::optional<FieldCandidate> smallest_field() const;
};

/// n is the smallest multiple of the reduced denominator with
/// floor((n - r) / 2) >= t.
CodePlan plan_code(Rational rate, std::size_t t, const CandidateOptions& opts = {});

/// n = q - 1 and every r in [1, n), all from the full Fourier scheme.
std::vector<CodePlan> optimal_codes_for_field(const FieldSpec& spec);

std::string plan_table(const CodePlan& plan);
std::string plan_json(const CodePlan& plan);
std::string plans_table(const std::vector<CodePlan>& plans);

}  // namespace udc

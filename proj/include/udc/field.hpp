#pragma once

// Exact arithmetic in GF(p) and GF(p^s).
//
// Elements are reduced coefficient vectors c_0 + c_1 x + ... + c_{s-1} x^{s-1}
// packed as the base-p integer sum c_i p^i (a `Symbol`). The packing is a
// bijection onto [0, q), so the integer order of symbols is the canonical
// enumeration order: 0, 1, 2, ... for prime fields, and lexicographic order of
// (c_{s-1}, ..., c_0) for extension fields.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "udc/number_theory.hpp"

namespace udc {

using Symbol = std::uint64_t;

struct FieldSpec {
  std::uint64_t characteristic = 0;
  unsigned degree = 1;
  /// Monic modulus, low degree first (size degree + 1). Empty for prime fields.
  std::vector<std::uint64_t> modulus;

  std::uint64_t order() const;
  bool operator==(const FieldSpec&) const = default;
};

/// "p" for prime fields, "p^s/c_s,...,c_0" for extensions.
std::string to_string(const FieldSpec& spec);
FieldSpec parse_field_spec(std::string_view text);

/// Validates (p, s, modulus). With s > 1 and no modulus, the lexicographically
/// smallest irreducible monic polynomial of degree s is chosen.
FieldSpec make_field_spec(std::uint64_t p, unsigned s,
                          std::optional<std::vector<std::uint64_t>> modulus_high_first = std::nullopt);

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Field {
 public:
  /// Fields are immutable and shared. Throws udc::Error on an invalid spec.
  static FieldPtr create(const FieldSpec& spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return s_; }
  std::uint64_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return s_ == 1; }
  bool contains(Symbol a) const noexcept { return a < q_; }

  /// Bytes needed for the largest symbol q - 1.
  unsigned symbol_width() const noexcept;

  Symbol zero() const noexcept { return 0; }
  Symbol one() const noexcept { return 1; }
  /// Image of the integer v under Z -> GF(p) -> GF(q).
  Symbol from_integer(std::int64_t v) const noexcept;

  Symbol from_coefficients(std::span<const std::uint64_t> low_first) const;
  std::vector<std::uint64_t> coefficients(Symbol a) const;

  Symbol add(Symbol a, Symbol b) const noexcept;
  Symbol sub(Symbol a, Symbol b) const noexcept;
  Symbol neg(Symbol a) const noexcept;
  Symbol mul(Symbol a, Symbol b) const noexcept;
  /// Throws on a == 0.
  Symbol inv(Symbol a) const;
  Symbol div(Symbol a, Symbol b) const;
  /// Negative exponents invert first; throws for 0^negative.
  Symbol pow(Symbol a, std::int64_t e) const;
  Symbol pow_u(Symbol a, std::uint64_t e) const noexcept;

  /// Smallest m >= 1 with a^m = 1. Throws on a == 0.
  std::uint64_t element_order(Symbol a) const;
  /// The canonically smallest element of multiplicative order exactly n.
  /// Throws when n does not divide q - 1.
  Symbol find_element_of_order(std::uint64_t n) const;
  /// The canonically smallest generator of the multiplicative group.
  Symbol primitive_element() const noexcept { return generator_; }

  /// Factorization of q - 1.
  const Factorization& group_factors() const noexcept { return group_factors_; }

  std::string format(Symbol a) const;

  explicit Field(const FieldSpec& spec);  // prefer create()

 private:
  Symbol slow_mul(Symbol a, Symbol b) const noexcept;
  Symbol digit_add(Symbol a, Symbol b, bool subtract) const noexcept;
  Symbol slow_pow(Symbol a, std::uint64_t e) const noexcept;

  FieldSpec spec_;
  std::uint64_t p_;
  unsigned s_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;  // low first, monic
  Factorization group_factors_;
  Symbol generator_ = 1;
  // Discrete log cache for small extension fields; arithmetic semantics are
  // identical with or without it.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

/// Value type carrying its field; arithmetic between different fields throws.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Symbol value);

  const FieldPtr& field() const noexcept { return field_; }
  Symbol value() const noexcept { return value_; }
  std::vector<std::uint64_t> coefficients() const { return field_->coefficients(value_); }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement pow(std::int64_t e) const;
  FieldElement inv() const;
  std::uint64_t order() const;

  bool operator==(const FieldElement& o) const;

 private:
  const Field& same_field(const FieldElement& o) const;

  FieldPtr field_;
  Symbol value_;
};

/// Convenience: validated field from (p, s, optional modulus c_s..c_0).
FieldPtr make_field(std::uint64_t p, unsigned s = 1,
                    std::optional<std::vector<std::uint64_t>> modulus_high_first = std::nullopt);
FieldPtr make_field(std::string_view spec_text);

std::uint64_t element_order(const FieldElement& x);
FieldElement find_element_of_order(const FieldPtr& field, std::uint64_t n);

}  // namespace udc

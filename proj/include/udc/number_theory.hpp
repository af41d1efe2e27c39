#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace udc {

/// Prime factorization as (prime, exponent) pairs in ascending prime order.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Trial division. Intended for n up to ~1e14.
Factorization factorize(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Smallest m >= 1 with p^m == 1 (mod n). Requires gcd(p, n) == 1 and n >= 1.
std::uint64_t residue_order(std::uint64_t p, std::uint64_t n);

/// p^e, or 0 when the result does not fit in 64 bits.
std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e);

}  // namespace udc

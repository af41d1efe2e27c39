#include "udc/number_theory.hpp"

#include <algorithm>
#include <numeric>

#include "udc/error.hpp"

namespace udc {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : kSmall) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::invalid_argument, "cannot factorize 0");
  Factorization out;
  auto strip = [&](std::uint64_t f) {
    unsigned e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    if (e > 0) out.emplace_back(f, e);
  };
  strip(2);
  strip(3);
  for (std::uint64_t f = 5; f <= n / f; f += 6) {
    strip(f);
    strip(f + 2);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 0; k < e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t residue_order(std::uint64_t p, std::uint64_t n) {
  if (n == 0) fail(ErrorCode::invalid_argument, "residue_order: modulus must be positive");
  if (std::gcd(p, n) != 1) {
    fail(ErrorCode::invalid_argument, "residue_order: gcd(p, n) != 1");
  }
  if (n == 1) return 1;
  std::uint64_t m = euler_phi(n);
  for (auto [f, e] : factorize(m)) {
    for (unsigned i = 0; i < e && pow_mod(p, m / f, n) == 1; ++i) m /= f;
  }
  return m;
}

std::uint64_t checked_pow(std::uint64_t p, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (p != 0 && r > UINT64_MAX / p) return 0;
    r *= p;
  }
  return r;
}

}  // namespace udc

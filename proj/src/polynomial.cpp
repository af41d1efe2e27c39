#include "polynomial.hpp"

#include <algorithm>

#include "udc/number_theory.hpp"

namespace udc::poly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    out[i] = x >= y ? x - y : x + p - y;
  }
  trim(out);
  return out;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
    }
  }
  trim(out);
  return out;
}

Poly rem(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = udc::pow_mod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = mul_mod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t t = mul_mod(factor, b[i], p);
      a[shift + i] = a[shift + i] >= t ? a[shift + i] - t : a[shift + i] + p - t;
    }
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly result{1};
  base = rem(base, m, p);
  while (e > 0) {
    if (e & 1U) result = rem(mul(result, base, p), m, p);
    base = rem(mul(base, base, p), m, p);
    e >>= 1U;
  }
  return result;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  if (f.size() < 2) return false;
  const std::size_t s = f.size() - 1;
  if (s == 1) return true;
  const Poly x{0, 1};
  Poly xp = x;  // x^{p^i} mod f
  for (std::size_t i = 1; i <= s / 2; ++i) {
    xp = pow_mod(xp, p, f, p);
    Poly g = gcd(f, sub(xp, x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace udc::poly

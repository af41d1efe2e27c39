#pragma once

// Dense polynomials over GF(p), coefficients stored low degree first.
// Internal to the library; used to validate and search field moduli.

#include <cstdint>
#include <vector>

namespace udc::poly {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& f);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
/// Remainder of a modulo a nonzero b.
Poly rem(Poly a, const Poly& b, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// base^e mod m.
Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p);

/// Ben-Or test: f of degree s is irreducible iff gcd(f, x^{p^i} - x) = 1
/// for i = 1..floor(s/2).
bool is_irreducible(const Poly& f, std::uint64_t p);

}  // namespace udc::poly

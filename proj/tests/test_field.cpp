#include <doctest.h>

#include <random>

#include "udc/error.hpp"
#include "udc/field.hpp"
#include "udc/number_theory.hpp"

using namespace udc;

namespace {

// Schoolbook polynomial arithmetic on coefficient lists, independent of Field.
struct NaiveExt {
  std::uint64_t p;
  std::vector<std::uint64_t> mod;  // low first, monic

  std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const {
    const std::size_t s = mod.size() - 1;
    std::vector<std::uint64_t> prod(2 * s, 0);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t k = 2 * s - 1; k >= s; --k) {
      const std::uint64_t c = prod[k];
      prod[k] = 0;
      for (std::size_t i = 0; i < s; ++i) prod[k - s + i] = (prod[k - s + i] + (p - c) * mod[i]) % p;
    }
    prod.resize(s);
    return prod;
  }
};

std::uint64_t naive_order(const Field& f, Symbol a) {
  Symbol x = a;
  std::uint64_t m = 1;
  while (x != 1) {
    x = f.mul(x, a);
    ++m;
  }
  return m;
}

}  // namespace

TEST_CASE("primality and factorization") {
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool naive = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && naive; ++d) naive = n % d != 0;
    CHECK(is_prime(n) == naive);
  }
  CHECK(is_prime(1'000'000'007ULL));
  CHECK(is_prime(3'215'031'751ULL) == false);  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK(is_prime(18446744073709551557ULL));
  const auto fac = factorize(2 * 2 * 2 * 3 * 5 * 5 * 401ULL);
  REQUIRE(fac.size() == 4);
  CHECK(fac[0] == std::pair<std::uint64_t, unsigned>{2, 3});
  CHECK(fac[3] == std::pair<std::uint64_t, unsigned>{401, 1});
}

TEST_CASE("make_field accepts the worked moduli and rejects bad input") {
  const FieldPtr gf9 = make_field(3, 2, std::vector<std::uint64_t>{1, 1, 2});
  CHECK(gf9->order() == 9);
  const Symbol x = gf9->from_coefficients(std::vector<std::uint64_t>{0, 1});
  CHECK(gf9->element_order(x) == 8);

  const FieldPtr gf256 = make_field(2, 8, std::vector<std::uint64_t>{1, 0, 0, 0, 1, 1, 1, 0, 1});
  CHECK(gf256->order() == 256);
  CHECK(gf256->element_order(2) == 255);  // x is primitive for this modulus

  CHECK(make_field(29)->order() == 29);

  CHECK_THROWS_AS(make_field(15), Error);
  CHECK_THROWS_AS(make_field(3, 0), Error);
  CHECK_THROWS_AS(make_field(3, 2, std::vector<std::uint64_t>{1, 0, 2}), Error);  // x^2 + 2 = (x+1)(x+2)
  CHECK_THROWS_AS(make_field(2, 2, std::vector<std::uint64_t>{1, 0, 1}), Error);
}

TEST_CASE("searched modulus is the smallest irreducible monic") {
  const FieldSpec spec = make_field_spec(3, 2);
  // Lexicographic (c_1, c_0): x^2+0x+c0 with c0=1 is irreducible over GF(3).
  CHECK(spec.modulus == std::vector<std::uint64_t>{1, 0, 1});
  const FieldSpec s2 = make_field_spec(2, 3);
  CHECK(s2.modulus == std::vector<std::uint64_t>{1, 1, 0, 1});  // x^3 + x + 1
}

TEST_CASE("field spec text round trips") {
  for (const char* text : {"257", "2^8/1,0,0,0,1,1,1,0,1", "3^2/1,1,2", "29"}) {
    CHECK(to_string(parse_field_spec(text)) == text);
  }
  CHECK(parse_field_spec("2^8/1,0,0,0,1,1,1,0,1").modulus == std::vector<std::uint64_t>{1, 0, 1, 1, 1, 0, 0, 0, 1});
  CHECK_THROWS_AS(parse_field_spec("2^8/1,0,1"), Error);
  CHECK_THROWS_AS(parse_field_spec("abc"), Error);
  CHECK_THROWS_AS(parse_field_spec("29 "), Error);
}

TEST_CASE("field operations on small examples") {
  const FieldPtr gf5 = make_field(5);
  CHECK(gf5->mul(2, 3) == 1);
  CHECK(gf5->inv(2) == 3);
  const FieldPtr gf29 = make_field(29);
  CHECK(gf29->pow(7, 7) == 1);
  CHECK(gf29->pow(7, -1) == gf29->inv(7));
  CHECK_THROWS_AS(gf29->inv(0), Error);
  CHECK_THROWS_AS(gf29->div(3, 0), Error);
  for (Symbol a = 0; a < 29; ++a) {
    CHECK(gf29->add(a, 0) == a);
    CHECK(gf29->mul(a, 1) == a);
  }
}

TEST_CASE("mixed-field element arithmetic throws") {
  const FieldElement a(make_field(5), 2);
  const FieldElement b(make_field(7), 2);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(FieldElement(make_field(5), 5), Error);
  const FieldElement c(make_field(5), 3);
  CHECK((a * c).value() == 1);
  CHECK(a.inv() == c);
}

TEST_CASE("extension multiplication agrees with schoolbook polynomials") {
  for (const char* text : {"3^2/1,1,2", "2^8/1,0,0,0,1,1,1,0,1", "5^3", "7^2", "2^5"}) {
    const FieldPtr f = make_field(text);
    NaiveExt ref{f->characteristic(), f->spec().modulus};
    std::mt19937_64 rng(std::hash<std::string>{}(text));
    for (int trial = 0; trial < 2000; ++trial) {
      const Symbol a = rng() % f->order();
      const Symbol b = rng() % f->order();
      CHECK(f->coefficients(f->mul(a, b)) == ref.mul(f->coefficients(a), f->coefficients(b)));
    }
  }
}

TEST_CASE("field axioms exhaustively on small fields") {
  for (const char* text : {"2", "3", "5", "7", "11", "13", "29", "31", "2^2", "2^3", "3^2", "2^4", "5^2", "3^3", "2^5"}) {
    const FieldPtr fp = make_field(text);
    const Field& f = *fp;
    const std::uint64_t q = f.order();
    bool ok = true;
    for (Symbol a = 0; a < q && ok; ++a) {
      if (a != 0) ok = f.mul(a, f.inv(a)) == 1;
      ok = ok && f.add(a, f.neg(a)) == 0;
      for (Symbol b = 0; b < q && ok; ++b) {
        ok = f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a) && f.sub(f.add(a, b), b) == a;
        for (Symbol c = 0; c < q && ok; ++c) {
          ok = f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) && f.add(f.add(a, b), c) == f.add(a, f.add(b, c)) &&
               f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    }
    CHECK_MESSAGE(ok, text);
  }
}

TEST_CASE("field axioms on random triples in larger fields") {
  for (const char* text : {"257", "65537", "2^8/1,0,0,0,1,1,1,0,1", "3^7", "1000003", "2^20", "101^3"}) {
    const FieldPtr fp = make_field(text);
    const Field& f = *fp;
    std::mt19937_64 rng(42);
    bool ok = true;
    for (int i = 0; i < 10000 && ok; ++i) {
      const Symbol a = rng() % f.order(), b = rng() % f.order(), c = rng() % f.order();
      ok = f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)) &&
           f.mul(a, b) == f.mul(b, a) && (a == 0 || f.mul(a, f.inv(a)) == 1);
    }
    CHECK_MESSAGE(ok, text);
  }
}

TEST_CASE("element orders from the worked examples") {
  CHECK(make_field(23)->element_order(2) == 11);
  CHECK(make_field(23)->element_order(3) == 11);
  CHECK(make_field(257)->element_order(3) == 256);
  CHECK(make_field(53)->element_order(10) == 13);
  CHECK(make_field(29)->element_order(1) == 1);
  CHECK_THROWS_AS(make_field(29)->element_order(0), Error);
}

TEST_CASE("element order divides q - 1 and matches a naive count") {
  for (const char* text : {"2^8/1,0,0,0,1,1,1,0,1", "509", "3^5", "7^3", "13^2", "503"}) {
    const FieldPtr f = make_field(text);
    for (Symbol a = 1; a < f->order(); ++a) {
      const auto m = f->element_order(a);
      CHECK((f->order() - 1) % m == 0);
      CHECK(m == naive_order(*f, a));
    }
  }
}

TEST_CASE("find_element_of_order returns the smallest element of that order") {
  CHECK(make_field(29)->find_element_of_order(7) == 7);
  CHECK(make_field(59)->find_element_of_order(29) == 3);
  CHECK(make_field(7)->find_element_of_order(6) == 3);
  CHECK_THROWS_AS(make_field(29)->find_element_of_order(5), Error);

  for (const char* text : {"29", "257", "401", "3^4", "2^8", "337"}) {
    const FieldPtr f = make_field(text);
    for (std::uint64_t n : divisors(f->order() - 1)) {
      const Symbol w = f->find_element_of_order(n);
      CHECK(f->pow_u(w, n) == 1);
      for (std::uint64_t m : divisors(n)) {
        if (m < n) CHECK(f->pow_u(w, m) != 1);
      }
      Symbol scan = 1;
      while (naive_order(*f, scan) != n) ++scan;
      CHECK(w == scan);
    }
  }
}

TEST_CASE("indeterminate generates the group for the primitive worked moduli") {
  const FieldPtr gf9 = make_field("3^2/1,1,2");
  const FieldPtr gf256 = make_field("2^8/1,0,0,0,1,1,1,0,1");
  for (const FieldPtr& f : {gf9, gf256}) {
    const Symbol x = f->characteristic();  // coefficient vector (0, 1)
    std::vector<bool> seen(f->order(), false);
    Symbol y = 1;
    for (std::uint64_t i = 0; i + 1 < f->order(); ++i) {
      seen[y] = true;
      y = f->mul(y, x);
    }
    std::size_t count = 0;
    for (Symbol a = 1; a < f->order(); ++a) count += seen[a];
    CHECK(count == f->order() - 1);
  }
}

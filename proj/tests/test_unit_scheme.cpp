#include <doctest.h>

#include <numeric>
#include <random>

#include "udc/error.hpp"
#include "udc/unit_scheme.hpp"

using namespace udc;

namespace {

std::shared_ptr<const UnitScheme> fourier(std::uint64_t p, std::size_t n) {
  return std::make_shared<const UnitScheme>(fourier_scheme(make_field(p), n));
}

bool is_zero(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (Symbol x : m.row(i)) {
      if (x != 0) return false;
    }
  }
  return true;
}

// Naive Leibniz-free determinant oracle via cofactor expansion (n <= 6).
Symbol cofactor_det(const Field& f, const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Symbol acc = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) minor(i - 1, cc++) = m(i, j);
      }
    }
    const Symbol term = f.mul(m(0, c), cofactor_det(f, minor));
    acc = c % 2 == 0 ? f.add(acc, term) : f.sub(acc, term);
  }
  return acc;
}

}  // namespace

TEST_CASE("Fourier schemes are unit pairs") {
  struct Case {
    std::uint64_t p;
    std::size_t n;
    Symbol omega;
  };
  for (const Case& c : {Case{5, 4, 2}, Case{29, 7, 7}, Case{23, 11, 2}, Case{59, 29, 3}, Case{257, 256, 3}, Case{53, 13, 10}}) {
    const auto s = fourier(c.p, c.n);
    CHECK(s->omega() == c.omega);
    CHECK(linalg::multiply(s->field(), s->u(), s->v()) == Matrix::identity(c.n));
    CHECK(linalg::multiply(s->field(), s->v(), s->u()) == Matrix::identity(c.n));
  }
}

TEST_CASE("F_4 over GF(5) is the printed matrix") {
  const auto s = fourier(5, 4);
  const Symbol expect[4][4] = {{1, 1, 1, 1}, {1, 2, 4, 3}, {1, 4, 1, 4}, {1, 3, 4, 2}};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) CHECK(s->u()(i, j) == expect[i][j]);
  }
}

TEST_CASE("Fourier equation pairs E_i with E_{n-i}") {
  const auto s = fourier(29, 7);
  const Field& f = s->field();
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      const Symbol ip = linalg::dot(f, s->u().row(i), s->power_row(static_cast<std::int64_t>((7 - j) % 7)));
      CHECK(ip == (i == j ? 7 : 0));
    }
  }
}

TEST_CASE("star product adds Fourier row indices") {
  const auto s = fourier(23, 11);
  for (std::size_t i = 0; i < 11; ++i) {
    for (std::size_t j = 0; j < 11; ++j) {
      const Vector prod = star_multiply(s->field(), s->u().row(i), s->u().row(j));
      const auto row = s->u().row((i + j) % 11);
      CHECK(prod == Vector(row.begin(), row.end()));
    }
  }
}

TEST_CASE("Vandermonde schemes") {
  const FieldPtr f = make_field(31);
  const UnitScheme s = vandermonde_scheme(f, {3, 5, 6, 11, 17, 30});
  CHECK(linalg::multiply(*f, s.u(), s.v()) == Matrix::identity(6));
  CHECK_THROWS_AS(vandermonde_scheme(f, {3, 5, 3}), Error);
  CHECK_THROWS_AS(vandermonde_scheme(f, {0, 5, 3}), Error);
  CHECK_THROWS_AS(vandermonde_scheme(f, {31}), Error);
}

TEST_CASE("row selections") {
  const auto s = fourier(29, 7);
  CHECK(selected_rows(*s, {5, 3, 3}) == std::vector<std::size_t>{5, 1, 4});
  CHECK_THROWS_AS(selected_rows(*s, {0, 1, 7}), Error);
  CHECK_THROWS_AS(selected_rows(*s, {0, 1, 0}), Error);
  CHECK_THROWS_AS(selected_rows(*s, {0, 7, 2}), Error);  // step = 0 mod n repeats
  const auto s4 = fourier(5, 4);
  CHECK_THROWS_AS(selected_rows(*s4, {0, 2, 3}), Error);
  const UnitScheme v = vandermonde_scheme(make_field(31), {1, 2, 3, 4, 5});
  CHECK_THROWS_AS(selected_rows(v, {2, 2, 3}), Error);
  CHECK(selected_rows(v, {2, 2, 2}) == std::vector<std::size_t>{2, 4});
  CHECK(selected_rows(v, {0, 2, 3}) == std::vector<std::size_t>{0, 2, 4});
}

TEST_CASE("block identities hold for every selection of small Fourier schemes") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::size_t>{29, 7}, {5, 4}, {23, 11}, {13, 12}}) {
    const auto s = fourier(p, n);
    const Field& f = s->field();
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t step = 1; step < n; ++step) {
          const RowSelection sel{start, step, r};
          std::vector<std::size_t> rows;
          try {
            rows = selected_rows(*s, sel);
          } catch (const Error&) {
            continue;
          }
          const LinearCode code = derive_code(s, sel);
          CHECK(linalg::multiply(f, code.generator(), code.recovery()) == Matrix::identity(r));
          CHECK(is_zero(linalg::multiply(f, code.generator(), code.check())));
          // alpha A (C, D) = (alpha, 0)
          Vector msg(r);
          std::iota(msg.begin(), msg.end(), Symbol{1});
          for (auto& m : msg) m %= p;
          const Vector word = code.encode(msg);
          CHECK(linalg::vec_mat(f, word, code.recovery()) == msg);
          CHECK(code.is_codeword(word));
          CHECK(code.mds() == (std::gcd(n, step) == 1));
          CHECK(code.check_structure().has_value() == code.mds());
        }
      }
    }
  }
}

TEST_CASE("structured check rows span the same space as D") {
  const auto s = fourier(23, 11);
  const Field& f = s->field();
  for (std::size_t step : {1, 3, 4}) {
    for (std::size_t start : {0, 2, 9}) {
      const LinearCode code = derive_code(s, {start, step, 5});
      const Matrix& h = code.check_rows();
      REQUIRE(h.rows() == 6);
      const Matrix dt = code.check().transpose();
      Matrix both(12, 11);
      for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 11; ++j) {
          both(i, j) = h(i, j);
          both(i + 6, j) = dt(i, j);
        }
      }
      CHECK(linalg::rank(f, both) == 6);
      CHECK(linalg::rank(f, dt) == 6);
    }
  }
}

TEST_CASE("first-r-rows Fourier check rows are E_1 .. E_{n-r}") {
  const auto s = fourier(29, 7);
  const LinearCode code = derive_code(s, {0, 1, 3});
  for (std::size_t l = 0; l < 4; ++l) {
    const auto row = code.check_rows().row(l);
    CHECK(Vector(row.begin(), row.end()) == s->power_row(static_cast<std::int64_t>(l + 1)));
  }
}

TEST_CASE("Vandermonde GRS dual is orthogonal to the code") {
  const FieldPtr f = make_field(101);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Vector pts;
    while (pts.size() < 9) {
      const Symbol x = 1 + rng() % 100;
      if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
    auto s = std::make_shared<const UnitScheme>(vandermonde_scheme(f, pts));
    const std::size_t step = 1 + rng() % 3;
    const std::size_t r = 1 + rng() % 4;
    const std::size_t start = rng() % (9 - (r - 1) * step);
    const LinearCode code = derive_code(s, {start, step, r});
    if (!code.mds()) continue;
    CHECK(is_zero(linalg::multiply(*f, code.generator(), code.check_rows().transpose())));
  }
}

TEST_CASE("from_progression matches explicit power rows") {
  const FieldPtr f = make_field(31);
  const Vector pts{2, 3, 7, 11, 13};
  const auto cs = CheckStructure::from_progression(*f, pts, 2, 3, 2);
  for (std::size_t l = 0; l < 2; ++l) {
    for (std::size_t j = 0; j < pts.size(); ++j) CHECK(cs.entry(*f, static_cast<std::int64_t>(l), j) == f->pow(pts[j], 2 + 3 * static_cast<std::int64_t>(l)));
  }
}

TEST_CASE("minor determinants factor and vanish only when k-th powers collide") {
  const auto s = fourier(29, 7);
  const Field& f = s->field();
  const std::vector<std::size_t> rows{1, 3, 5};
  const std::vector<std::size_t> cols{0, 2, 6};
  const Symbol det = vandermonde_minor_det(*s, rows, cols);
  CHECK(det == cofactor_det(f, s->u().select_rows(rows).select_cols(cols)));
  CHECK(det != 0);

  // n = 4, k = 2: omega^0 and omega^2 have equal squares.
  const auto s4 = fourier(5, 4);
  CHECK(vandermonde_minor_det(*s4, std::vector<std::size_t>{0, 2}, std::vector<std::size_t>{0, 2}) == 0);
  CHECK(vandermonde_minor_det(*s4, std::vector<std::size_t>{0, 2}, std::vector<std::size_t>{0, 1}) != 0);
  CHECK_THROWS_AS(vandermonde_minor_det(*s, std::vector<std::size_t>{0, 1, 3}, std::vector<std::size_t>{0, 1, 2}), Error);

  const UnitScheme v = vandermonde_scheme(make_field(31), {2, 3, 29, 28, 5});
  for (std::size_t k = 1; k <= 2; ++k) {
    const std::vector<std::size_t> r2{1, 1 + k};
    for (std::size_t a = 0; a < 5; ++a) {
      for (std::size_t b = a + 1; b < 5; ++b) {
        const std::vector<std::size_t> c2{a, b};
        const Symbol d = vandermonde_minor_det(v, r2, c2);
        const bool collide = v.field().pow_u(v.points()[a], k) == v.field().pow_u(v.points()[b], k);
        CHECK((d == 0) == collide);
      }
    }
  }
}

TEST_CASE("code descriptors") {
  const std::string text = "field=257;n=256;start=0;step=1;r=222;kind=fourier";
  const CodeDescriptor d = parse_code_descriptor(text);
  CHECK(to_string(d) == text);
  CHECK(d.r == 222);
  const CodeDescriptor shuffled = parse_code_descriptor("kind=fourier;r=222;step=1;start=0;n=256;field=257");
  CHECK(shuffled == d);
  CHECK_THROWS_AS(parse_code_descriptor("field=257;n=256;start=0;step=1;r=222"), Error);
  CHECK_THROWS_AS(parse_code_descriptor(text + ";r=3"), Error);
  CHECK_THROWS_AS(parse_code_descriptor(text + ";foo=3"), Error);
  CHECK_THROWS_AS(parse_code_descriptor("field=257;n=x;start=0;step=1;r=222;kind=fourier"), Error);
  CHECK_THROWS_AS(parse_code_descriptor("field=257;n=256;start=0;step=1;r=222;kind=bch"), Error);

  const LinearCode code = make_code(parse_code_descriptor("field=2^8/1,0,0,0,1,1,1,0,1;n=255;start=0;step=1;r=239;kind=fourier"));
  CHECK(code.claimed_distance() == 17);
  CHECK(to_string(describe(code)) == "field=2^8/1,0,0,0,1,1,1,0,1;n=255;start=0;step=1;r=239;kind=fourier");

  const LinearCode vc = make_code(parse_code_descriptor("field=31;n=10;start=0;step=1;r=4;kind=vandermonde"));
  CHECK(vc.scheme().points() == Vector{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(vc.mds());
}

TEST_CASE("row 0 alone gives the repetition code") {
  const auto s = fourier(29, 7);
  const LinearCode code = derive_code(s, {0, 1, 1});
  const Vector w = code.encode(Vector{5});
  CHECK(w == Vector(7, 5));
}

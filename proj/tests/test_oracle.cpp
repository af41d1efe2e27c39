#include <doctest.h>

#include <cmath>

#include <numeric>
#include <random>

#include "udc/ecp_decoder.hpp"
#include "udc/error.hpp"
#include "udc/oracle.hpp"

using namespace udc;

namespace {

std::shared_ptr<const UnitScheme> fourier(std::uint64_t p, std::size_t n) {
  return std::make_shared<const UnitScheme>(fourier_scheme(make_field(p), n));
}

}  // namespace

TEST_CASE("distances of the worked GF(29) codes") {
  const auto s = fourier(29, 7);
  const auto d73 = min_distance(derive_code(s, {0, 1, 3}));
  CHECK(d73.measured == 5);
  CHECK(d73.mds);
  CHECK(d73.method == DistanceMethod::message_enumeration);
  CHECK(min_distance(derive_code(s, {0, 1, 5})).measured == 3);
  const auto by_rank = min_distance(derive_code(s, {0, 1, 3}), DistanceMethod::check_column_rank);
  CHECK(by_rank.measured == 5);
  CHECK(by_rank.method == DistanceMethod::check_column_rank);
}

TEST_CASE("rows {0, 2} of F_4 over GF(5) are not MDS") {
  const LinearCode code = derive_code(fourier(5, 4), {0, 2, 2});
  const auto rep = min_distance(code);
  CHECK(rep.measured == 2);
  CHECK_FALSE(rep.mds);
  CHECK_FALSE(code.mds());
  CHECK_FALSE(rep.claimed.has_value());
  CHECK(min_distance(code, DistanceMethod::check_column_rank).measured == 2);
}

TEST_CASE("row 0 gives distance n") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::size_t>{29, 7}, {23, 11}, {5, 4}}) {
    CHECK(min_distance(derive_code(fourier(p, n), {0, 1, 1})).measured == n);
  }
}

TEST_CASE("MDS predicate is certified for every valid selection with n <= 8") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::size_t>{29, 7}, {5, 4}, {7, 6}, {17, 8}, {11, 5}}) {
    const auto s = fourier(p, n);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t start = 0; start < n; ++start) {
        for (std::size_t step = 1; step < n; ++step) {
          try {
            (void)selected_rows(*s, {start, step, r});
          } catch (const Error&) {
            continue;
          }
          const LinearCode code = derive_code(s, {start, step, r});
          const auto rep = min_distance(code);
          CHECK(rep.measured <= n - r + 1);
          if (code.mds()) CHECK(rep.measured == n - r + 1);
          CHECK(rep.mds == (rep.measured == n - r + 1));
        }
      }
    }
  }
}

TEST_CASE("duality: C is MDS iff its dual is") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::size_t>{29, 7}, {5, 4}, {7, 6}, {11, 5}}) {
    const auto s = fourier(p, n);
    const Field& f = s->field();
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t step = 1; step < n; ++step) {
        try {
          (void)selected_rows(*s, {0, step, r});
        } catch (const Error&) {
          continue;
        }
        const LinearCode code = derive_code(s, {0, step, r});
        const std::size_t d = min_distance(code).measured;
        // The generator is a check matrix of the dual.
        const std::size_t d_dual = min_distance_by_check_columns(f, code.generator());
        CHECK((d == n - r + 1) == (d_dual == r + 1));
        if (std::pow(static_cast<double>(p), static_cast<double>(n - r)) <= 1e6) {
          CHECK(min_distance_by_enumeration(f, code.check().transpose()) == d_dual);
        }
      }
    }
  }
}

TEST_CASE("brute force agrees with the decoder on all correctable (7,3) corruptions of one word") {
  const LinearCode code = derive_code(fourier(29, 7), {0, 1, 3});
  const Field& f = code.field();
  const Codebook book(code);
  CHECK(book.size() == 24389);
  const Vector sent = code.encode(Vector{4, 17, 9});
  std::size_t count = 0;
  for (std::size_t a = 0; a < 7; ++a) {
    for (std::size_t b = a; b < 7; ++b) {
      for (Symbol va = 1; va < 29; va += (a == b ? 1 : 3)) {
        for (Symbol vb = 1; vb < 29; vb += 5) {
          Vector rx = sent;
          rx[a] = f.add(rx[a], va);
          if (b != a) rx[b] = f.add(rx[b], vb);
          const auto bf = brute_force_decode(code, book, rx);
          const auto dec = decode(code, rx);
          CHECK(bf.codeword == sent);
          CHECK(bf.ties == 1);
          CHECK(dec.corrected == bf.codeword);
          CHECK(dec.message == bf.message);
          ++count;
        }
      }
    }
  }
  CHECK(count > 0);
  const auto self = brute_force_decode(code, book, sent);
  CHECK(self.distance == 0);
  CHECK(self.codeword == sent);
}

TEST_CASE("beyond t the nearest codeword may be a different one") {
  const LinearCode code = derive_code(fourier(29, 7), {0, 1, 3});
  const Codebook book(code);
  const Vector sent(7, 0);
  std::mt19937_64 rng(4);
  std::size_t elsewhere = 0;
  for (int i = 0; i < 2000; ++i) {
    Vector rx = sent;
    for (int k = 0; k < 3; ++k) rx[rng() % 7] = 1 + rng() % 28;
    const auto bf = brute_force_decode(code, book, rx);
    if (bf.codeword != sent && bf.distance <= code.t()) ++elsewhere;
    const auto dec = decode(code, rx);
    if (dec.status != DecodeStatus::failure && bf.distance <= code.t()) CHECK(dec.corrected == bf.codeword);
  }
  CHECK(elsewhere > 0);
}

TEST_CASE("general-path codebook matches the packed path") {
  const LinearCode code = derive_code(fourier(257, 8), {0, 1, 2});
  const Codebook book(code);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    Vector rx(8);
    for (auto& x : rx) x = rng() % 257;
    const auto hit = book.nearest(rx);
    std::size_t best = 99, ties = 0;
    for (std::size_t k = 0; k < book.size(); ++k) {
      const Vector w = book.codeword(k);
      std::size_t d = 0;
      for (std::size_t j = 0; j < 8; ++j) d += w[j] != rx[j];
      if (d < best) {
        best = d;
        ties = 1;
      } else if (d == best) {
        ++ties;
      }
    }
    CHECK(hit.distance == best);
    CHECK(hit.ties == ties);
  }
}

TEST_CASE("oracle refuses oversized instances") {
  const LinearCode big = derive_code(fourier(257, 256), {0, 1, 200});
  CHECK_THROWS_AS(min_distance(big), Error);
  CHECK_THROWS_AS(Codebook{big}, Error);
}

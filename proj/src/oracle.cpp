#include "udc/oracle.hpp"

#include <algorithm>
#include <bit>

#include "udc/error.hpp"
#include "udc/number_theory.hpp"

namespace udc {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

std::string_view to_string(DistanceMethod m) {
  return m == DistanceMethod::message_enumeration ? "message-enumeration" : "check-column-rank";
}

namespace {

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  u128 acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t messages_count(std::uint64_t q, std::size_t r) {
  const std::uint64_t m = checked_pow(q, r);
  return m == 0 ? kMaxEnumeratedMessages + 1 : m;
}

// Calls visit(digits, word) for every message in lexicographic order.
template <typename Visit>
void enumerate_row_space(const Field& f, const Matrix& g, Visit&& visit) {
  const std::size_t r = g.rows();
  const std::size_t n = g.cols();
  const std::uint64_t q = f.order();
  // mult[i][v] = v * row_i
  std::vector<std::vector<Vector>> mult(r, std::vector<Vector>(q, Vector(n)));
  for (std::size_t i = 0; i < r; ++i) {
    for (Symbol v = 0; v < q; ++v) {
      for (std::size_t j = 0; j < n; ++j) mult[i][v][j] = f.mul(v, g(i, j));
    }
  }
  std::vector<Symbol> digits(r, 0);
  Vector word(n, 0);
  while (true) {
    visit(std::as_const(digits), std::as_const(word));
    std::size_t i = r;
    while (i > 0) {
      --i;
      const Symbol old = digits[i];
      const Symbol next = old + 1 == q ? 0 : old + 1;
      for (std::size_t j = 0; j < n; ++j) word[j] = f.add(f.sub(word[j], mult[i][old][j]), mult[i][next][j]);
      digits[i] = next;
      if (next != 0) break;
      if (i == 0) return;
    }
    if (r == 0) return;
  }
}

}  // namespace

std::size_t min_distance_by_enumeration(const Field& f, const Matrix& generator) {
  if (generator.rows() == 0) fail(ErrorCode::invalid_argument, "empty generator");
  if (linalg::rank(f, generator) != generator.rows()) fail(ErrorCode::invalid_argument, "generator is not full rank");
  if (messages_count(f.order(), generator.rows()) > kMaxEnumeratedMessages) {
    fail(ErrorCode::too_large, "too many messages to enumerate");
  }
  std::size_t best = generator.cols();
  bool first = true;
  enumerate_row_space(f, generator, [&](const std::vector<Symbol>&, const Vector& word) {
    if (first) {
      first = false;  // the zero message
      return;
    }
    const auto w = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Symbol x) { return x != 0; }));
    best = std::min(best, w);
  });
  return best;
}

std::size_t min_distance_by_check_columns(const Field& f, const Matrix& check) {
  const std::size_t n = check.cols();
  const std::size_t rk = linalg::rank(f, check);
  if (rk >= n) fail(ErrorCode::invalid_argument, "check matrix defines the zero code");
  std::vector<std::size_t> subset;
  for (std::size_t w = 1; w <= rk + 1; ++w) {
    if (binomial_capped(n, w, kMaxRankSubsets) > kMaxRankSubsets) fail(ErrorCode::too_large, "too many column subsets");
    subset.resize(w);
    for (std::size_t i = 0; i < w; ++i) subset[i] = i;
    while (true) {
      if (linalg::rank(f, check.select_cols(subset)) < w) return w;
      std::size_t i = w;
      while (i > 0 && subset[i - 1] == n - w + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < w; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  fail(ErrorCode::internal, "no dependent column set found");
}

DistanceReport min_distance(const LinearCode& code, std::optional<DistanceMethod> method) {
  const Field& f = code.field();
  DistanceReport rep;
  rep.n = code.n();
  rep.r = code.r();
  rep.claimed = code.claimed_distance();

  const bool enum_ok = messages_count(f.order(), code.r()) <= kMaxEnumeratedMessages;
  bool rank_ok = true;
  for (std::size_t w = 1; w <= code.n() - code.r() + 1 && rank_ok; ++w) {
    rank_ok = binomial_capped(code.n(), w, kMaxRankSubsets) <= kMaxRankSubsets;
  }
  if (!method) {
    if (enum_ok) method = DistanceMethod::message_enumeration;
    else if (rank_ok) method = DistanceMethod::check_column_rank;
    else fail(ErrorCode::too_large, "code too large for exact distance computation");
  }
  rep.method = *method;
  if (*method == DistanceMethod::message_enumeration) {
    rep.measured = min_distance_by_enumeration(f, code.generator());
  } else {
    rep.measured = min_distance_by_check_columns(f, code.check().transpose());
  }
  rep.mds = rep.measured == code.n() - code.r() + 1;
  return rep;
}

namespace {

std::uint64_t pack8(std::span<const Symbol> v) {
  std::uint64_t x = 0;
  for (std::size_t j = 0; j < v.size(); ++j) x |= static_cast<std::uint64_t>(v[j]) << (8 * j);
  return x;
}

int nonzero_bytes(std::uint64_t x) {
  constexpr std::uint64_t lo7 = 0x7F7F7F7F7F7F7F7FULL;
  const std::uint64_t y = ((x & lo7) + lo7) | x;
  return std::popcount(y & ~lo7);
}

}  // namespace

Codebook::Codebook(const LinearCode& code) : n_(code.n()), r_(code.r()), q_(code.field().order()) {
  const std::uint64_t m = messages_count(q_, r_);
  if (m > kMaxCodebook) fail(ErrorCode::too_large, "codebook larger than 1e6 codewords");
  count_ = static_cast<std::size_t>(m);
  words_.reserve(count_ * n_);
  enumerate_row_space(code.field(), code.generator(), [&](const std::vector<Symbol>&, const Vector& word) {
    words_.insert(words_.end(), word.begin(), word.end());
  });
  if (n_ <= 8 && q_ <= 256) {
    packed_.resize(count_);
    for (std::size_t i = 0; i < count_; ++i) packed_[i] = pack8(std::span(words_).subspan(i * n_, n_));
  }
}

Vector Codebook::codeword(std::size_t index) const {
  return Vector(words_.begin() + static_cast<std::ptrdiff_t>(index * n_),
                words_.begin() + static_cast<std::ptrdiff_t>((index + 1) * n_));
}

Vector Codebook::message(std::size_t index) const {
  Vector m(r_);
  for (std::size_t i = r_; i-- > 0;) {
    m[i] = index % q_;
    index /= q_;
  }
  return m;
}

Codebook::Nearest Codebook::nearest(std::span<const Symbol> received) const {
  if (received.size() != n_) fail(ErrorCode::invalid_argument, "received word has wrong length");
  Nearest best{0, n_ + 1, 0};
  auto consider = [&](std::size_t i, std::size_t d) {
    if (d < best.distance) {
      best = {i, d, 1};
    } else if (d == best.distance) {
      ++best.ties;
    }
  };
  if (!packed_.empty() && std::all_of(received.begin(), received.end(), [](Symbol x) { return x < 256; })) {
    const std::uint64_t rx = pack8(received);
    for (std::size_t i = 0; i < count_; ++i) consider(i, static_cast<std::size_t>(nonzero_bytes(packed_[i] ^ rx)));
    return best;
  }
  for (std::size_t i = 0; i < count_; ++i) {
    const Symbol* w = words_.data() + i * n_;
    std::size_t d = 0;
    for (std::size_t j = 0; j < n_; ++j) d += w[j] != received[j];
    consider(i, d);
  }
  return best;
}

BruteForceResult brute_force_decode(const LinearCode& code, const Codebook& book, std::span<const Symbol> received) {
  if (book.length() != code.n()) fail(ErrorCode::invalid_argument, "codebook does not match code");
  const auto hit = book.nearest(received);
  if (hit.ties > 1 && hit.distance <= code.t() && code.mds()) {
    fail(ErrorCode::internal, "tie within the unique-decoding radius of an MDS code");
  }
  return {book.codeword(hit.index), book.message(hit.index), hit.distance, hit.ties};
}

BruteForceResult brute_force_decode(const LinearCode& code, std::span<const Symbol> received) {
  return brute_force_decode(code, Codebook(code), received);
}

}  // namespace udc

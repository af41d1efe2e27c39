#pragma once

// Brute-force ground truth for desk-scale codes: exact minimum distance and
// nearest-codeword decoding. Deliberately shares nothing with the decoder
// beyond field arithmetic and the code's matrices.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "udc/matrix.hpp"
#include "udc/unit_scheme.hpp"

namespace udc {

enum class DistanceMethod { message_enumeration, check_column_rank };

std::string_view to_string(DistanceMethod m);

struct DistanceReport {
  std::size_t n = 0;
  std::size_t r = 0;
  std::optional<std::size_t> claimed;
  std::size_t measured = 0;
  DistanceMethod method = DistanceMethod::message_enumeration;
  bool mds = false;
};

inline constexpr std::uint64_t kMaxEnumeratedMessages = 10'000'000;
inline constexpr std::uint64_t kMaxRankSubsets = 5'000'000;
inline constexpr std::uint64_t kMaxCodebook = 1'000'000;

/// Uses message enumeration when q^r is small enough, otherwise check-column
/// rank subsets. Throws too_large when neither is feasible.
DistanceReport min_distance(const LinearCode& code, std::optional<DistanceMethod> method = std::nullopt);

/// Minimum nonzero weight of the row space of a full-rank generator.
std::size_t min_distance_by_enumeration(const Field& f, const Matrix& generator);

/// Smallest number of linearly dependent columns of a check matrix, i.e. the
/// minimum distance of {c : H c^T = 0}. Throws when that code is {0}.
std::size_t min_distance_by_check_columns(const Field& f, const Matrix& check);

/// All q^r codewords in lexicographic message order (message digit 0 most
/// significant).
class Codebook {
 public:
  explicit Codebook(const LinearCode& code);

  std::size_t size() const noexcept { return count_; }
  std::size_t length() const noexcept { return n_; }
  Vector codeword(std::size_t index) const;
  Vector message(std::size_t index) const;

  struct Nearest {
    std::size_t index = 0;
    std::size_t distance = 0;
    /// Codewords at the minimum distance; 1 means the nearest one is unique.
    std::size_t ties = 0;
  };
  Nearest nearest(std::span<const Symbol> received) const;

 private:
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::uint64_t q_ = 0;
  std::size_t count_ = 0;
  std::vector<Symbol> words_;           // count_ x n_
  std::vector<std::uint64_t> packed_;   // one word per codeword when n <= 8, q <= 256
};

struct BruteForceResult {
  Vector codeword;
  Vector message;
  std::size_t distance = 0;
  std::size_t ties = 0;
};

/// Nearest codeword; the lexicographically first message wins ties. Throws
/// internal if an MDS code shows a tie at distance <= t.
BruteForceResult brute_force_decode(const LinearCode& code, const Codebook& book, std::span<const Symbol> received);
BruteForceResult brute_force_decode(const LinearCode& code, std::span<const Symbol> received);

}  // namespace udc

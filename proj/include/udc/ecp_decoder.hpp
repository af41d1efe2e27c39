#pragma once

// Error-correcting-pair decoding of unit-derived codes:
//   syndromes -> Hankel kernel -> locator zero set -> error values -> message.
//
// Everything is phrased against a CheckStructure whose check row l has entries
// u_j z_j^l. For the first r rows of a Fourier matrix these rows are
// E_1, ..., E_{n-r}; for an arithmetic selection with step k they are
// E_{j_1}, E_{j_1+k}, ...; for a general Vandermonde scheme they are the
// rows of a generalized Reed-Solomon dual.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "udc/matrix.hpp"
#include "udc/unit_scheme.hpp"

namespace udc {

struct Syndromes {
  /// alpha_1 .. alpha_{n-r}, stored 0-based.
  Vector values;
  /// floor((n - r) / 2)
  std::size_t t = 0;

  bool all_zero() const noexcept;
};

/// Which rows span the locator space.
enum class LocatorBasis {
  /// Rows E_1 .. E_{t+1}: the first t+1 check rows (first-r-rows Fourier codes).
  first_rows,
  /// Rows F_0 .. F_t with F_0 = E_{j_1 - k}: the check progression shifted back by one.
  arithmetic,
  /// Rows F_1 .. F_{t+1} of a general Vandermonde check progression.
  vandermonde,
};

struct ErrorLocator {
  Vector kernel;                    ///< x, length t + 1
  Vector locator;                   ///< a = (rows) x, length n
  std::vector<std::size_t> zero_set;  ///< J, ascending
};

enum class SolvePath {
  /// Factor the system as (transposed Vandermonde in z_J) x diag(u_J) and
  /// solve the leading |J| x |J| block in O(|J|^2); check the rest.
  vandermonde,
  /// Gaussian elimination on the full (n - r) x |J| system.
  elimination,
};

enum class DecodeStatus { no_error, corrected, failure };

struct DecodeOutcome {
  DecodeStatus status = DecodeStatus::failure;
  Vector error;      ///< w, length n
  Vector corrected;  ///< received - w
  Vector message;    ///< corrected C, length r
  std::size_t error_count = 0;
  Syndromes syndromes;
  std::optional<ErrorLocator> locator;
};

struct DecodeOptions {
  /// Defaults to the basis matching the code's construction.
  std::optional<LocatorBasis> basis;
  SolvePath solve = SolvePath::vandermonde;
};

LocatorBasis default_basis(const LinearCode& code);

// Structure-level pipeline. These work on any CheckStructure, including ones
// built by CheckStructure::from_progression for codes given only by check rows.

Syndromes compute_syndromes(const Field& f, const CheckStructure& cs, std::span<const Symbol> received);

/// Nonzero x with H x = 0 for the t x (t+1) Hankel matrix H_{ij} = alpha_{i+j+1}
/// (0-based i, j). Deterministic: reduced row echelon form, the first free
/// variable set to 1 and any other free variables to 0. Requires t >= 1.
Vector hankel_kernel(const Field& f, const Syndromes& s);

ErrorLocator locate_errors(const Field& f, const CheckStructure& cs, std::span<const Symbol> kernel,
                           LocatorBasis basis);

/// Solves  sum_{j in J} u_j z_j^l w_j = alpha_{l+1}  for every check row l and
/// returns the full-length error vector (zero outside J). nullopt when the
/// system is inconsistent, which means more than t errors occurred.
std::optional<Vector> solve_error_values(const Field& f, const CheckStructure& cs, const Syndromes& s,
                                         std::span<const std::size_t> zero_set,
                                         SolvePath path = SolvePath::vandermonde);

/// Locates and evaluates the error from the received word alone. Returns the
/// error vector, or nullopt on failure; the no-error case returns all zeros.
std::optional<Vector> find_error(const Field& f, const CheckStructure& cs, std::span<const Symbol> received,
                                 LocatorBasis basis, SolvePath path = SolvePath::vandermonde);

// Code-level operations.

Syndromes compute_syndromes(const LinearCode& code, std::span<const Symbol> received);
ErrorLocator locate_errors(const LinearCode& code, std::span<const Symbol> kernel,
                           std::optional<LocatorBasis> basis = std::nullopt);
std::optional<Vector> solve_error_values(const LinearCode& code, const Syndromes& s,
                                         std::span<const std::size_t> zero_set,
                                         SolvePath path = SolvePath::vandermonde);

/// Corrects up to t errors. Failure is a status, never an exception; throws
/// only when the code has no error-correcting-pair structure or the input is
/// malformed.
DecodeOutcome decode(const LinearCode& code, std::span<const Symbol> received, const DecodeOptions& opts = {});

/// Matches the syndrome against scalar multiples of single check columns;
/// falls back to decode() unless exactly one column matches.
DecodeOutcome decode_single_error(const LinearCode& code, std::span<const Symbol> received);

/// corrected C. Throws when `corrected` is not a codeword.
Vector recover_message(const LinearCode& code, std::span<const Symbol> corrected);

/// The error-correcting pair (A, B) as generator rows:
///   A = rows 0..t of the check structure, B = z^0 .. z^{t-1} (z^t when n - r is odd).
struct CorrectingPair {
  Matrix a;
  Matrix b;
};
CorrectingPair correcting_pair(const LinearCode& code);

std::size_t hamming_weight(std::span<const Symbol> v);

}  // namespace udc

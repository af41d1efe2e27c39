#pragma once

// Unit schemes U V = I built from Fourier and Vandermonde matrices, row
// selections deriving (n, r) codes from them, and the MDS predicate.
//
// Indices are 0-based throughout: row i of U is E_i = (x_1^i, ..., x_n^i) and
// column j belongs to point x_{j+1}.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "udc/field.hpp"
#include "udc/matrix.hpp"

namespace udc {

enum class SchemeKind { fourier, vandermonde };

std::string_view to_string(SchemeKind kind);

class UnitScheme {
 public:
  const FieldPtr& field_ptr() const noexcept { return field_; }
  const Field& field() const noexcept { return *field_; }
  std::size_t size() const noexcept { return points_.size(); }
  SchemeKind kind() const noexcept { return kind_; }
  /// The root of unity of a Fourier scheme; 0 for Vandermonde schemes.
  Symbol omega() const noexcept { return omega_; }
  const Vector& points() const noexcept { return points_; }
  const Matrix& u() const noexcept { return u_; }
  const Matrix& v() const noexcept { return v_; }

  /// E_m for any integer m (negative exponents allowed since points are units).
  Vector power_row(std::int64_t m) const;

 private:
  friend UnitScheme fourier_scheme(const FieldPtr& field, std::size_t n);
  friend UnitScheme vandermonde_scheme(const FieldPtr& field, Vector points);
  UnitScheme() = default;

  FieldPtr field_;
  SchemeKind kind_ = SchemeKind::fourier;
  Symbol omega_ = 0;
  Vector points_;
  Matrix u_;
  Matrix v_;
};

/// U = [omega^{ij}] on the canonical element of order n; V = n^{-1} [omega^{-ij}].
UnitScheme fourier_scheme(const FieldPtr& field, std::size_t n);
/// U = [x_j^i]; V by exact Gauss-Jordan elimination. Points distinct and nonzero.
UnitScheme vandermonde_scheme(const FieldPtr& field, Vector points);

struct RowSelection {
  std::size_t start = 0;
  std::size_t step = 1;
  std::size_t count = 1;

  bool operator==(const RowSelection&) const = default;
};

/// Selected row indices; reduced mod n for Fourier schemes. Throws when the
/// selection is invalid for the scheme.
std::vector<std::size_t> selected_rows(const UnitScheme& scheme, const RowSelection& sel);

/// True guarantees minimum distance n - r + 1.
bool mds_predicate(const UnitScheme& scheme, const RowSelection& sel);

/// Basis of a dual code with row l (l in Z) equal to
///   multipliers[j] * points[j]^l,   j = 0..n-1,
/// of which rows 0..count-1 are the check rows. Both syndrome decoding and the
/// error-correcting pair are phrased against this basis.
struct CheckStructure {
  Vector multipliers;
  Vector points;
  std::size_t count = 0;

  std::size_t length() const noexcept { return points.size(); }
  Symbol entry(const Field& f, std::int64_t l, std::size_t j) const;
  Vector row(const Field& f, std::int64_t l) const;
  Matrix rows(const Field& f) const;

  /// Check rows E_{first}, E_{first+step}, ... of an extended Vandermonde
  /// matrix on `scheme_points`.
  static CheckStructure from_progression(const Field& f, std::span<const Symbol> scheme_points,
                                         std::int64_t first, std::size_t step, std::size_t count);
};

class LinearCode {
 public:
  const UnitScheme& scheme() const noexcept { return *scheme_; }
  const std::shared_ptr<const UnitScheme>& scheme_ptr() const noexcept { return scheme_; }
  const Field& field() const noexcept { return scheme_->field(); }
  const RowSelection& selection() const noexcept { return selection_; }
  const std::vector<std::size_t>& rows() const noexcept { return rows_; }

  std::size_t n() const noexcept { return scheme_->size(); }
  std::size_t r() const noexcept { return selection_.count; }
  /// floor((n - r) / 2)
  std::size_t t() const noexcept { return (n() - r()) / 2; }

  /// A: the selected rows of U (r x n).
  const Matrix& generator() const noexcept { return a_; }
  /// C: the selected columns of V (n x r), so A C = I.
  const Matrix& recovery() const noexcept { return c_; }
  /// D: the remaining columns of V in ascending order (n x (n - r)), A D = 0.
  const Matrix& check() const noexcept { return d_; }

  bool mds() const noexcept { return mds_; }
  /// n - r + 1 when the MDS predicate holds.
  std::optional<std::size_t> claimed_distance() const noexcept;

  /// Present exactly when the code is decodable by error-correcting pairs.
  const std::optional<CheckStructure>& check_structure() const noexcept { return structure_; }
  /// Check rows of the structure ((n - r) x n); empty when not decodable.
  const Matrix& check_rows() const noexcept { return h_; }

  Vector encode(std::span<const Symbol> message) const;
  bool is_codeword(std::span<const Symbol> word) const;

 private:
  friend LinearCode derive_code(std::shared_ptr<const UnitScheme> scheme, const RowSelection& sel);
  LinearCode() = default;

  std::shared_ptr<const UnitScheme> scheme_;
  RowSelection selection_;
  std::vector<std::size_t> rows_;
  Matrix a_, c_, d_, h_;
  bool mds_ = false;
  std::optional<CheckStructure> structure_;
};

/// Builds A, C, D and verifies A C = I and A D = 0 exactly. Rejects r >= n.
LinearCode derive_code(std::shared_ptr<const UnitScheme> scheme, const RowSelection& sel);
LinearCode derive_code(const UnitScheme& scheme, const RowSelection& sel);

/// Componentwise product; on Fourier rows E_i * E_j = E_{i+j mod n}.
Vector star_multiply(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b);

/// Determinant of the minor of U on `rows` x `cols`, with `rows` an
/// arithmetic progression (mod n for Fourier schemes). Computed both by
/// elimination and by the factorization
///   prod_c x_c^{rows[0]} * prod_{a<b} (x_{c_b}^k - x_{c_a}^k),
/// which must agree.
Symbol vandermonde_minor_det(const UnitScheme& scheme, std::span<const std::size_t> rows,
                             std::span<const std::size_t> cols);

/// "field=<spec>;n=<n>;start=<s>;step=<k>;r=<r>;kind=fourier|vandermonde"
struct CodeDescriptor {
  FieldSpec field;
  std::size_t n = 0;
  std::size_t start = 0;
  std::size_t step = 1;
  std::size_t r = 0;
  SchemeKind kind = SchemeKind::fourier;

  bool operator==(const CodeDescriptor&) const = default;
};

std::string to_string(const CodeDescriptor& d);
CodeDescriptor parse_code_descriptor(std::string_view text);
CodeDescriptor describe(const LinearCode& code);

/// Default Vandermonde points for descriptors: the symbols 1, 2, ..., n.
Vector default_vandermonde_points(const Field& f, std::size_t n);

/// Instantiates the scheme named by the descriptor and derives the code.
LinearCode make_code(const CodeDescriptor& d);

}  // namespace udc

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "udc/field.hpp"

namespace udc {

using Vector = std::vector<Symbol>;

/// Dense row-major matrix of field symbols. The field is supplied to each
/// operation, not stored.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Symbol fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Symbol& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
  Symbol operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

  std::span<Symbol> row(std::size_t i) noexcept { return {data_.data() + i * cols_, cols_}; }
  std::span<const Symbol> row(std::size_t i) const noexcept { return {data_.data() + i * cols_, cols_}; }
  Vector column(std::size_t j) const;

  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;
  Matrix transpose() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Symbol> data_;
};

namespace linalg {

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b);
/// Row vector times matrix: v M.
Vector vec_mat(const Field& f, std::span<const Symbol> v, const Matrix& m);
/// Matrix times column vector: M v.
Vector mat_vec(const Field& f, const Matrix& m, std::span<const Symbol> v);
Symbol dot(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b);

/// In-place reduced row echelon form; pivot = first nonzero entry at or below
/// the current row. Returns pivot columns in order.
std::vector<std::size_t> rref(const Field& f, Matrix& m);

std::size_t rank(const Field& f, Matrix m);
Symbol determinant(const Field& f, Matrix m);
std::optional<Matrix> inverse(const Field& f, const Matrix& m);

/// Basis of the right kernel {x : M x = 0}, one vector per row. Basis vector i
/// has a 1 at the i-th free column and 0 at the other free columns.
Matrix nullspace(const Field& f, const Matrix& m);

/// Some x with M x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Field& f, const Matrix& m, std::span<const Symbol> b);

}  // namespace linalg
}  // namespace udc

#include "udc/matrix.hpp"

#include <utility>

#include "udc/error.hpp"

namespace udc {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n, 0);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    auto src = row(idx[i]);
    std::copy(src.begin(), src.end(), out.row(i).begin());
  }
  return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix out(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) out(i, j) = (*this)(i, idx[j]);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

namespace linalg {

Matrix multiply(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) fail(ErrorCode::invalid_argument, "matrix multiply: shape mismatch");
  Matrix out(a.rows(), b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Symbol x = a(i, k);
      if (x == 0) continue;
      auto src = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) dst[j] = f.add(dst[j], f.mul(x, src[j]));
    }
  }
  return out;
}

Vector vec_mat(const Field& f, std::span<const Symbol> v, const Matrix& m) {
  if (v.size() != m.rows()) fail(ErrorCode::invalid_argument, "vector-matrix: length mismatch");
  Vector out(m.cols(), 0);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    const Symbol x = v[k];
    if (x == 0) continue;
    auto src = m.row(k);
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(x, src[j]));
  }
  return out;
}

Vector mat_vec(const Field& f, const Matrix& m, std::span<const Symbol> v) {
  if (v.size() != m.cols()) fail(ErrorCode::invalid_argument, "matrix-vector: length mismatch");
  Vector out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = dot(f, m.row(i), v);
  return out;
}

Symbol dot(const Field& f, std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.size() != b.size()) fail(ErrorCode::invalid_argument, "dot: length mismatch");
  Symbol acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
  return acc;
}

std::vector<std::size_t> rref(const Field& f, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    }
    const Symbol scale = f.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Symbol factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const Field& f, Matrix m) { return rref(f, m).size(); }

Symbol determinant(const Field& f, Matrix m) {
  if (m.rows() != m.cols()) fail(ErrorCode::invalid_argument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Symbol det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const Symbol inv = f.inv(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      const Symbol factor = f.mul(m(i, c), inv);
      for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Field& f, const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::invalid_argument, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = rref(f, aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

Matrix nullspace(const Field& f, const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref(f, r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix basis(free_cols.size(), m.cols(), 0);
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t fc = free_cols[b];
    basis(b, fc) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(b, pivots[i]) = f.neg(r(i, fc));
  }
  return basis;
}

std::optional<Vector> solve(const Field& f, const Matrix& m, std::span<const Symbol> b) {
  if (b.size() != m.rows()) fail(ErrorCode::invalid_argument, "solve: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto pivots = rref(f, aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

}  // namespace linalg
}  // namespace udc

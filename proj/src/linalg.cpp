#include "ghn/linalg.hpp"

#include <utility>

namespace ghn {

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::col(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Vec Matrix::apply(std::span<const Rational> x) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

RowEchelon row_reduce(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead_row) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(lead_row, k));
    }
    Rational inv = 1 / a(lead_row, c);
    for (std::size_t k = c; k < a.cols(); ++k) a(lead_row, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t k = c; k < a.cols(); ++k) a(r, k) -= f * a(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vec> nullspace(const Matrix& m) {
  RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      v[ech.pivots[r]] = -ech.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve(const Matrix& m, std::span<const Rational> rhs) {
  // Augment with the right-hand side and an identity block that records the
  // row operations, so an inconsistency certificate falls out directly.
  const std::size_t n = m.cols();
  Matrix aug(m.rows(), n + 1 + m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = rhs[r];
    aug(r, n + 1 + r) = 1;
  }
  // Only eliminate on the coefficient columns.
  Matrix& a = aug;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < n && lead_row < a.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead_row) {
      for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(lead_row, k));
    }
    Rational inv = 1 / a(lead_row, c);
    for (std::size_t k = 0; k < a.cols(); ++k) a(lead_row, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t k = 0; k < a.cols(); ++k) a(r, k) -= f * a(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }

  LinearSolution out;
  for (std::size_t r = pivots.size(); r < a.rows(); ++r) {
    if (a(r, n) != 0) {
      out.status = LinearSolution::Status::Inconsistent;
      out.certificate.resize(m.rows());
      for (std::size_t k = 0; k < m.rows(); ++k) out.certificate[k] = a(r, n + 1 + k);
      return out;
    }
  }
  out.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) out.x[pivots[r]] = a(r, n);
  out.status = pivots.size() == n ? LinearSolution::Status::Unique
                                  : LinearSolution::Status::Underdetermined;
  return out;
}

Rational determinant(const Matrix& m) {
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

Vec leading_principal_minors(const Matrix& m) {
  Vec out;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    Matrix sub(k, k);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(r, c);
    }
    out.push_back(determinant(sub));
  }
  return out;
}

}  // namespace ghn

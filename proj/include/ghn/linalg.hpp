#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ghn/rational.hpp"

namespace ghn {

/// Row-major dense matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Builds a matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  Matrix transposed() const;
  Vec apply(std::span<const Rational> x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Exact; a pivot is any nonzero entry.
RowEchelon row_reduce(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}; each basis vector has a 1 in one free coordinate
/// and 0 in the others.
std::vector<Vec> nullspace(const Matrix& m);

struct LinearSolution {
  enum class Status { Unique, Underdetermined, Inconsistent };
  Status status = Status::Inconsistent;
  /// A particular solution when consistent (free variables set to 0).
  Vec x;
  /// When inconsistent: y with y^T m = 0 and y . rhs != 0.
  Vec certificate;
};

LinearSolution solve(const Matrix& m, std::span<const Rational> rhs);

Rational determinant(const Matrix& m);

/// Determinants of the k x k leading principal submatrices, k = 1..n.
Vec leading_principal_minors(const Matrix& m);

}  // namespace ghn

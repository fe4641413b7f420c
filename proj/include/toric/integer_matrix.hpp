#pragma once

#include "toric/numeric.hpp"

#include <cstddef>
#include <vector>

namespace toric {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Result of the Smith normal form: left * input * right == diagonal, with
/// left and right unimodular and the diagonal entries nonnegative and each
/// dividing the next.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;

  std::vector<Integer> invariant_factors() const;
};

/// Deterministic Smith normal form. Pivot choice: the entry of smallest
/// nonzero absolute value in the active block, ties broken by row-major
/// position.
SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form of a full-row-rank matrix: upper echelon,
/// positive pivots, entries above each pivot reduced into [0, pivot).
/// Canonical for the row lattice.
IntMatrix hermite_normal_form(const IntMatrix& m);

}  // namespace toric

#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "gtutte/errors.hpp"

namespace gtutte {

using Int = mpz_class;

/// Dense matrix of arbitrary-precision integers. Zero dimensions are legal
/// (an m x 0 matrix means "no relations" / "no elements").
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  /// Row-major construction from nested lists, e.g. {{2,0},{1,2}}.
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

  static IntMatrix identity(std::size_t n);
  /// Builds a matrix from column vectors (all of equal length).
  static IntMatrix from_columns(const std::vector<std::vector<Int>>& cols);
  /// Same, with an explicit row count so an empty list keeps its shape.
  static IntMatrix from_columns(std::size_t rows,
                                const std::vector<std::vector<Int>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::vector<Int> column(std::size_t j) const;

  /// Horizontal concatenation [*this | other]; row counts must agree.
  IntMatrix augmented(const IntMatrix& other) const;
  /// Copy with the given columns appended.
  IntMatrix with_columns(const std::vector<std::vector<Int>>& cols) const;
  /// Copy restricted to the listed columns, in the given order.
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;

  IntMatrix transposed() const;

  /// Matrix product; inner dimensions must agree.
  IntMatrix operator*(const IntMatrix& rhs) const;

  bool operator==(const IntMatrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

}  // namespace gtutte

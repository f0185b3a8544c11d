#include "gtutte/int_matrix.hpp"

namespace gtutte {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_)
      throw DimensionMismatch("ragged rows in matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& cols) {
  if (cols.empty()) return IntMatrix(0, 0);
  IntMatrix m(cols.front().size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows())
      throw DimensionMismatch("columns of unequal length");
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}


IntMatrix IntMatrix::from_columns(std::size_t rows,
                                  const std::vector<std::vector<Int>>& cols) {
  if (cols.empty()) return IntMatrix(rows, 0);
  IntMatrix m = from_columns(cols);
  if (m.rows() != rows) throw DimensionMismatch("column length != row count");
  return m;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> col(rows_);
  for (std::size_t i = 0; i < rows_; ++i) col[i] = at(i, j);
  return col;
}

IntMatrix IntMatrix::augmented(const IntMatrix& other) const {
  if (other.rows() != rows_ && other.cols() != 0)
    throw DimensionMismatch("augmenting matrices with different row counts");
  IntMatrix m(rows_, cols_ + other.cols());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (std::size_t j = 0; j < other.cols(); ++j)
      m.at(i, cols_ + j) = other.at(i, j);
  }
  return m;
}

IntMatrix IntMatrix::with_columns(
    const std::vector<std::vector<Int>>& cols) const {
  return augmented(from_columns(cols));
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  IntMatrix m(rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows())
    throw DimensionMismatch("inner dimensions disagree in matrix product");
  IntMatrix m(rows_, rhs.cols());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j)
        m.at(i, j) += at(i, k) * rhs.at(k, j);
    }
  return m;
}

}  // namespace gtutte

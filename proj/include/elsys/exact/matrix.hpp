#pragma once

#include "elsys/exact/exact_num.hpp"

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace elsys::exact {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count must equal rows*cols");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<T>& entries() const { return data_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows_; ++r) {
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
      os << "\n";
    }
    return os;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<ExactNum>;

// Rank by fraction-free (Bareiss) elimination.  Columns without a pivot are
// skipped; every division is exact, so entries stay in the ring generated
// by the input.
template <class T>
std::size_t matrix_rank(Matrix<T> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  T prev(1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && is_zero_coeff(m(pivot, col))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) m.swap_rows(pivot, rank);
    const T p = m(rank, col);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const T f = m(r, col);
      for (std::size_t c = col + 1; c < cols; ++c) m(r, c) = (p * m(r, c) - f * m(rank, c)) / prev;
      m(r, col) = T(0);
    }
    prev = p;
    ++rank;
  }
  return rank;
}

}  // namespace elsys::exact

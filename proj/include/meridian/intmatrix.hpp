#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace meridian {

/// Exact arbitrary-precision integer. Naive SNF pivoting explodes entry sizes,
/// so fixed-width integers are not an option here.
using Int = boost::multiprecision::cpp_int;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += f * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& f);
  /// col i += f * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& f);
  void negate_row(std::size_t i);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& a);

}  // namespace meridian

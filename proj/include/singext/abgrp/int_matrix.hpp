#pragma once

#include "singext/abgrp/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace singext::abgrp {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const std::vector<Int>& entries() const { return a_; }

  IntVec row(std::size_t r) const;
  IntVec column(std::size_t c) const;
  void set_column(std::size_t c, const IntVec& v);

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVec operator*(const IntVec& v) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row i += k * row j
  void add_row_multiple(std::size_t i, std::size_t j, const Int& k);
  /// col i += k * col j
  void add_col_multiple(std::size_t i, std::size_t j, const Int& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

  /// Exact determinant (fraction-free Bareiss elimination).
  Int determinant() const;

  /// "[[a,b],[c,d]]"
  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

} // namespace singext::abgrp

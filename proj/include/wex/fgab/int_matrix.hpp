#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace wex::fgab {

using Integer = mpz_class;

/// Dense integer matrix with arbitrary-precision entries, stored row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> row_major);

  /// Convenience for literals: `IntMatrix::of({{2, 4}, {6, 8}})`.
  static IntMatrix of(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::size_t rows, std::size_t cols, const std::vector<Integer>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const std::vector<Integer>& row_major() const { return data_; }

  IntMatrix column(std::size_t c) const;
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  IntMatrix transpose() const;

  bool is_zero() const;

  // Elementary operations, used by the normal form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_column(std::size_t c);
  /// Replaces columns (a, b) by (s*a + t*b, u*a + v*b).
  void combine_columns(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                       const Integer& u, const Integer& v);
  /// Replaces rows (a, b) by (s*a + t*b, u*a + v*b).
  void combine_rows(std::size_t a, std::size_t b, const Integer& s, const Integer& t,
                    const Integer& u, const Integer& v);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend IntMatrix operator*(const Integer& k, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  /// `[[1, 2], [3, 4]]`; a 0-row matrix prints as `[]`.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vcat(const IntMatrix& a, const IntMatrix& b);
/// Block diagonal [[a, 0], [0, b]].
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// Determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);

}  // namespace wex::fgab

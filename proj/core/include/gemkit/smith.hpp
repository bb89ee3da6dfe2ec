#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gemkit {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

struct SmithForm {
  /// Nonzero invariant factors d_1 | d_2 | ... | d_r, all positive.
  std::vector<BigInt> diagonal;
  int rank = 0;
  /// Unimodular transforms with left * M * right == D (D has `diagonal` on
  /// its main diagonal and zeros elsewhere).
  IntegerMatrix left;
  IntegerMatrix right;
};

/// Smith normal form by elementary row/column operations over Z. The result
/// is re-multiplied and checked before returning; a mismatch is a library bug
/// and throws std::logic_error.
SmithForm smith_normal_form(const IntegerMatrix& m);

/// The diagonal matrix D for a given shape and invariant factors.
IntegerMatrix diagonal_matrix(std::size_t rows, std::size_t cols, const std::vector<BigInt>& diagonal);

}  // namespace gemkit

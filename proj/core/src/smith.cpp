#include "gemkit/smith.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gemkit {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long x : row) data_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x.is_zero(); });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  IntegerMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  return out;
}

IntegerMatrix diagonal_matrix(std::size_t rows, std::size_t cols, const std::vector<BigInt>& diagonal) {
  IntegerMatrix d(rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) d(i, i) = diagonal[i];
  return d;
}

namespace {

// Working state: D = left * M * right is maintained throughout.
struct Reducer {
  IntegerMatrix d;
  IntegerMatrix left;
  IntegerMatrix right;

  std::size_t rows() const { return d.rows(); }
  std::size_t cols() const { return d.cols(); }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols(); ++j) std::swap(d(a, j), d(b, j));
    for (std::size_t j = 0; j < rows(); ++j) std::swap(left(a, j), left(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows(); ++i) std::swap(d(i, a), d(i, b));
    for (std::size_t i = 0; i < cols(); ++i) std::swap(right(i, a), right(i, b));
  }
  // row[target] -= q * row[source]
  void add_row(std::size_t target, std::size_t source, const BigInt& q) {
    for (std::size_t j = 0; j < cols(); ++j) d(target, j) -= q * d(source, j);
    for (std::size_t j = 0; j < rows(); ++j) left(target, j) -= q * left(source, j);
  }
  // col[target] -= q * col[source]
  void add_col(std::size_t target, std::size_t source, const BigInt& q) {
    for (std::size_t i = 0; i < rows(); ++i) d(i, target) -= q * d(i, source);
    for (std::size_t i = 0; i < cols(); ++i) right(i, target) -= q * right(i, source);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols(); ++j) d(r, j) = -d(r, j);
    for (std::size_t j = 0; j < rows(); ++j) left(r, j) = -left(r, j);
  }

  // Moves the smallest nonzero |entry| of the trailing block to (t, t).
  bool pivot_smallest(std::size_t t) {
    bool found = false;
    std::size_t br = t, bc = t;
    BigInt best;
    for (std::size_t i = t; i < rows(); ++i)
      for (std::size_t j = t; j < cols(); ++j) {
        if (d(i, j).is_zero()) continue;
        BigInt a = abs(d(i, j));
        if (!found || a < best) {
          best = a;
          br = i;
          bc = j;
          found = true;
        }
      }
    if (!found) return false;
    swap_rows(t, br);
    swap_cols(t, bc);
    return true;
  }

  // Clears row and column t outside the pivot; afterwards the pivot divides
  // every entry of the trailing block.
  void eliminate(std::size_t t) {
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows(); ++i) {
        if (d(i, t).is_zero()) continue;
        BigInt q = d(i, t) / d(t, t);
        add_row(i, t, q);
        if (!d(i, t).is_zero()) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols(); ++j) {
        if (d(t, j).is_zero()) continue;
        BigInt q = d(t, j) / d(t, t);
        add_col(j, t, q);
        if (!d(t, j).is_zero()) dirty = true;
      }
      if (dirty) {
        pivot_smallest_in_cross(t);
        continue;
      }
      // Divisibility: fold an offending row into row t and restart.
      bool fixed = true;
      for (std::size_t i = t + 1; i < rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < cols(); ++j)
          if (BigInt(d(i, j) % d(t, t)) != 0) {
            add_row(t, i, BigInt(-1));
            fixed = false;
            break;
          }
      if (fixed) return;
    }
  }

  // After a division step the remainder may be smaller than the pivot.
  void pivot_smallest_in_cross(std::size_t t) {
    std::size_t br = t, bc = t;
    BigInt best = abs(d(t, t));
    for (std::size_t i = t + 1; i < rows(); ++i)
      if (!d(i, t).is_zero() && abs(d(i, t)) < best) {
        best = abs(d(i, t));
        br = i;
        bc = t;
      }
    for (std::size_t j = t + 1; j < cols(); ++j)
      if (!d(t, j).is_zero() && abs(d(t, j)) < best) {
        best = abs(d(t, j));
        br = t;
        bc = j;
      }
    swap_rows(t, br);
    swap_cols(t, bc);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  Reducer r{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  const std::size_t limit = std::min(m.rows(), m.cols());
  SmithForm out;
  for (std::size_t t = 0; t < limit; ++t) {
    if (!r.pivot_smallest(t)) break;
    r.eliminate(t);
    if (r.d(t, t) < 0) r.negate_row(t);
    out.diagonal.push_back(r.d(t, t));
  }
  out.rank = static_cast<int>(out.diagonal.size());
  out.left = std::move(r.left);
  out.right = std::move(r.right);

  for (std::size_t i = 1; i < out.diagonal.size(); ++i)
    if (BigInt(out.diagonal[i] % out.diagonal[i - 1]) != 0)
      throw std::logic_error("smith_normal_form: divisibility chain broken");
  if (!(out.left * m * out.right == diagonal_matrix(m.rows(), m.cols(), out.diagonal)))
    throw std::logic_error("smith_normal_form: U*M*V != D");
  return out;
}

}  // namespace gemkit

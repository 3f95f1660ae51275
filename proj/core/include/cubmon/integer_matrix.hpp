#pragma once

// Dense integer matrices with overflow-checked arithmetic, plus the exact
// lattice routines (Hermite form, kernels, unimodular inverses) used by the
// lattice and representation layers. Nothing here touches floating point.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "cubmon/errors.hpp"

namespace cubmon {

using IntVector = std::vector<std::int64_t>;

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("int64 addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("int64 subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("int64 multiplication overflow");
  return r;
}

/// a*b + c*d without intermediate overflow going unnoticed.
inline std::int64_t mul_add(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return add(mul(a, b), mul(c, d));
}

}  // namespace checked

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, std::int64_t fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<std::int64_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const std::int64_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  IntVector column(std::size_t j) const;
  IntVector row_vector(std::size_t i) const { auto r = row(i); return {r.begin(), r.end()}; }

  IntMatrix transpose() const;
  /// Sub-block of the given rows and columns, in the given order.
  IntMatrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  IntMatrix top_rows(std::size_t n) const;

  std::vector<IntVector> to_rows() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, std::span<const std::int64_t> x);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Row-style Hermite normal form: transform * input == form, transform unimodular.
/// Pivots are positive, entries above a pivot lie in [0, pivot), zero rows last.
struct HermiteResult {
  IntMatrix form;
  IntMatrix transform;
  std::size_t rank = 0;
};

HermiteResult hermite_rows(const IntMatrix& a);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& a);

/// Exact determinant (fraction-free Bareiss elimination).
std::int64_t determinant(const IntMatrix& a);

/// Inverse of a matrix with determinant +-1; throws DegenerateForm otherwise.
IntMatrix inverse_unimodular(const IntMatrix& a);

/// Basis (rows, Hermite-reduced) of the integer lattice {x : a x = 0}.
/// The integer kernel of an integer matrix is always saturated.
IntMatrix integer_kernel(const IntMatrix& a);

std::int64_t dot(std::span<const std::int64_t> x, std::span<const std::int64_t> y);
/// x^T g y.
std::int64_t pairing(const IntMatrix& g, std::span<const std::int64_t> x, std::span<const std::int64_t> y);
/// gcd of the entries; 0 for the zero vector.
std::int64_t content(std::span<const std::int64_t> v);
bool is_zero(std::span<const std::int64_t> v);

}  // namespace cubmon

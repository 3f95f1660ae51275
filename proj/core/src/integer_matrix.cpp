#include "cubmon/integer_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace cubmon {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidInput("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidInput("row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows) {
  IntMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InvalidInput("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  IntMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

IntMatrix IntMatrix::top_rows(std::size_t n) const {
  IntMatrix s(n, cols_);
  std::copy_n(data_.begin(), n * cols_, s.data_.begin());
  return s;
}

std::vector<IntVector> IntMatrix::to_rows() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c(i, j) = checked::add(c(i, j), checked::mul(aik, b(k, j)));
    }
  return c;
}

IntVector operator*(const IntMatrix& a, std::span<const std::int64_t> x) {
  if (a.cols() != x.size()) throw InvalidInput("matrix-vector dimension mismatch");
  IntVector y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x);
  return y;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix sum dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = checked::add(a(i, j), b(i, j));
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix difference dimension mismatch");
  IntMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = checked::sub(a(i, j), b(i, j));
  return c;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// row_i -= q * row_r, applied to both the working matrix and the transform.
void subtract_row(IntMatrix& m, std::size_t i, std::size_t r, std::int64_t q) {
  if (q == 0) return;
  auto ri = m.row(i);
  auto rr = m.row(r);
  for (std::size_t j = 0; j < ri.size(); ++j) ri[j] = checked::sub(ri[j], checked::mul(q, rr[j]));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  std::swap_ranges(ra.begin(), ra.end(), rb.begin());
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (auto& x : m.row(i)) x = checked::sub(0, x);
}

}  // namespace

HermiteResult hermite_rows(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  const std::size_t m = a.rows();
  std::size_t r = 0;
  for (std::size_t j = 0; j < a.cols() && r < m; ++j) {
    while (true) {
      // Euclid on the column: bring the smallest nonzero entry to row r.
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i) {
        if (h(i, j) == 0) continue;
        if (piv == m || std::abs(h(i, j)) < std::abs(h(piv, j))) piv = i;
      }
      if (piv == m) break;
      swap_rows(h, r, piv);
      swap_rows(u, r, piv);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, j) == 0) continue;
        const std::int64_t q = h(i, j) / h(r, j);
        subtract_row(h, i, r, q);
        subtract_row(u, i, r, q);
        if (h(i, j) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (h(r, j) == 0) continue;
    if (h(r, j) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      const std::int64_t q = floor_div(h(i, j), h(r, j));
      subtract_row(h, i, r, q);
      subtract_row(u, i, r, q);
    }
    ++r;
  }
  return {std::move(h), std::move(u), r};
}

std::size_t rank(const IntMatrix& a) { return hermite_rows(a).rank; }

std::int64_t determinant(const IntMatrix& a) {
  if (!a.square()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  std::int64_t sign = 1;
  __extension__ typedef __int128 wide;
  std::int64_t prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(m, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const wide num = static_cast<wide>(m(i, j)) * m(k, k) - static_cast<wide>(m(i, k)) * m(k, j);
        const wide q = num / prev;
        if (q > INT64_MAX || q < INT64_MIN) throw ArithmeticOverflow("determinant overflow");
        m(i, j) = static_cast<std::int64_t>(q);
      }
    prev = m(k, k);
  }
  return checked::mul(sign, m(n - 1, n - 1));
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  if (!a.square()) throw DegenerateForm("inverse of a non-square matrix");
  auto hr = hermite_rows(a);
  if (hr.form != IntMatrix::identity(a.rows())) throw DegenerateForm("matrix is not unimodular");
  return hr.transform;
}

IntMatrix integer_kernel(const IntMatrix& a) {
  auto hr = hermite_rows(a.transpose());
  const std::size_t n = a.cols();
  std::vector<IntVector> basis;
  for (std::size_t i = hr.rank; i < n; ++i) basis.push_back(hr.transform.row_vector(i));
  if (basis.empty()) return IntMatrix(0, n);
  auto reduced = hermite_rows(IntMatrix::from_rows(basis, n));
  return reduced.form.top_rows(reduced.rank);
}

std::int64_t dot(std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
  if (x.size() != y.size()) throw InvalidInput("dot product dimension mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0 && y[i] != 0) s = checked::add(s, checked::mul(x[i], y[i]));
  return s;
}

std::int64_t pairing(const IntMatrix& g, std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
  return dot(x, g * y);
}

std::int64_t content(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

bool is_zero(std::span<const std::int64_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

}  // namespace cubmon

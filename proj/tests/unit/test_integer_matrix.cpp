#include <doctest.h>

#include <random>

#include "cubmon/errors.hpp"
#include "cubmon/integer_matrix.hpp"
#include "oracles.hpp"

using namespace cubmon;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

std::vector<std::vector<long long>> plain(const IntMatrix& m) {
  std::vector<std::vector<long long>> out(m.rows(), std::vector<long long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

TEST_CASE("hermite form satisfies its contract on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_matrix(rng, 1 + trial % 6, 1 + (trial / 6) % 7, -4, 4);
    const auto h = hermite_rows(a);
    CHECK(h.transform * a == h.form);
    CHECK(std::llabs(determinant(h.transform)) == 1);
    CHECK(h.rank == oracle::rational_rank(plain(a)));
    std::size_t prev_col = 0;
    for (std::size_t i = 0; i < h.form.rows(); ++i) {
      std::size_t p = 0;
      while (p < h.form.cols() && h.form(i, p) == 0) ++p;
      if (i >= h.rank) {
        CHECK(p == h.form.cols());
        continue;
      }
      CHECK(h.form(i, p) > 0);
      if (i > 0) CHECK(p > prev_col);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(h.form(k, p) >= 0);
        CHECK(h.form(k, p) < h.form(i, p));
      }
      prev_col = p;
    }
  }
}

TEST_CASE("determinant agrees with Laplace expansion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto a = random_matrix(rng, n, n, -5, 5);
    CHECK(determinant(a) == oracle::laplace_det(plain(a)));
  }
  CHECK(determinant(IntMatrix{{0, 1}, {-1, 0}}) == 1);
  CHECK(determinant(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("kernel vectors are annihilated and saturated") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_matrix(rng, 1 + trial % 4, 2 + trial % 6, -3, 3);
    const auto k = integer_kernel(a);
    CHECK(k.rows() + rank(a) == a.cols());
    for (std::size_t i = 0; i < k.rows(); ++i) {
      CHECK(is_zero(a * k.row(i)));
      CHECK(content(k.row(i)) == 1);
    }
    if (k.rows() > 0) CHECK(hermite_rows(k).form == k);
  }
}

TEST_CASE("unimodular inverse and its failure mode") {
  const IntMatrix u{{2, 1}, {1, 1}};
  CHECK(inverse_unimodular(u) * u == IntMatrix::identity(2));
  CHECK_THROWS_AS(inverse_unimodular(IntMatrix{{2, 0}, {0, 1}}), DegenerateForm);
}

TEST_CASE("checked arithmetic reports overflow") {
  CHECK_THROWS_AS(checked::mul(INT64_MAX, 2), ArithmeticOverflow);
  CHECK_THROWS_AS(checked::add(INT64_MAX, 1), ArithmeticOverflow);
  CHECK(checked::mul_add(3, 4, 5, 6) == 42);
}

TEST_CASE("pairing is x^T g y") {
  const IntMatrix g{{0, 1}, {-1, 0}};
  const IntVector x{1, 0}, y{0, 1};
  CHECK(pairing(g, x, y) == 1);
  CHECK(pairing(g, y, x) == -1);
  CHECK(content(IntVector{4, -6, 8}) == 2);
  CHECK(content(IntVector{0, 0}) == 0);
}

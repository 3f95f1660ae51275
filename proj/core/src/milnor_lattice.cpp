#include "cubmon/milnor_lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "cubmon/errors.hpp"

namespace cubmon {

int hl_pairing(const BitVertex& i, const BitVertex& j) {
  if (i.k() != j.k()) throw InvalidInput("pairing of vertices of different dimension");
  if (i == j) return 0;
  if (j < i) return -hl_pairing(j, i);
  if (!edge_by_comparability(i, j)) return 0;
  int exponent = 0;
  for (unsigned nu = 0; nu < i.k(); ++nu) exponent += i.bit(nu) - j.bit(nu);
  const int power = (std::abs(exponent) % 2 == 0) ? 1 : -1;
  return -power;
}

SkewLattice gram_matrix(unsigned k) {
  const ArtinGraph g(k);  // validates k
  SkewLattice lattice{k, IntMatrix(g.size(), g.size())};
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size(); ++b) lattice.gram(a, b) = hl_pairing(g.vertex(a), g.vertex(b));
  return lattice;
}

bool is_skew(const IntMatrix& m) {
  if (!m.square()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  return true;
}

std::vector<IntVector> radical(const SkewLattice& lattice) { return integer_kernel(lattice.gram).to_rows(); }

QuotientLattice quotient_lattice(const SkewLattice& lattice) {
  const IntMatrix& g = lattice.gram;
  const std::size_t n = g.rows();
  // U g^T = H with zero rows last: the trailing rows of U span the kernel and
  // U itself is a unimodular change of basis adapted to it.
  const auto hr = hermite_rows(g.transpose());
  const std::size_t r = hr.rank;
  const IntMatrix u_inv = inverse_unimodular(hr.transform);

  // Coordinates w.r.t. the rows of U are given by U^{-T}; keep the first r.
  const IntMatrix raw_projection = u_inv.transpose().top_rows(r);
  const auto canon = hermite_rows(raw_projection);
  IntMatrix projection = canon.form;

  // Right inverse of the canonical projection: (first r rows of U)^T V^{-1}.
  const IntMatrix lift = hr.transform.top_rows(r).transpose() * inverse_unimodular(canon.transform);
  IntMatrix induced = lift.transpose() * g * lift;

  QuotientLattice q;
  q.rank = r;
  q.induced_gram = std::move(induced);
  for (std::size_t i = 0; i < n; ++i) q.class_map.push_back(projection.column(i));
  q.radical_basis = radical(lattice);
  q.projection = std::move(projection);
  return q;
}

std::size_t sublattice_rank(const QuotientLattice& q, const std::vector<std::size_t>& subset) {
  if (subset.empty()) return 0;
  std::vector<IntVector> rows;
  for (auto i : subset) rows.push_back(q.class_map.at(i));
  return rank(IntMatrix::from_rows(rows, q.rank));
}

namespace {

// Find f in span(basis) with <e, f> = 1 by an extended-gcd combination of the
// basis vectors. Returns false when gcd of the pairings is not 1.
bool find_dual(const IntMatrix& gram, const IntVector& e, const std::vector<IntVector>& basis, IntVector& f) {
  const std::size_t dim = e.size();
  f.assign(dim, 0);
  std::int64_t g = 0;
  for (const auto& b : basis) {
    const std::int64_t p = pairing(gram, e, b);
    if (p == 0) continue;
    if (g == 0) {
      g = p;
      f = b;
      continue;
    }
    // Extended Euclid: s*g + t*p = gcd(g, p).
    std::int64_t old_r = g, r = p, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const std::int64_t qt = old_r / r;
      std::int64_t tmp = old_r - qt * r; old_r = r; r = tmp;
      tmp = old_s - qt * s; old_s = s; s = tmp;
      tmp = old_t - qt * t; old_t = t; t = tmp;
    }
    for (std::size_t i = 0; i < dim; ++i) f[i] = checked::mul_add(old_s, f[i], old_t, b[i]);
    g = old_r;
  }
  if (g < 0) {
    for (auto& x : f) x = -x;
    g = -g;
  }
  return g == 1;
}

}  // namespace

std::vector<IntVector> symplectic_basis(const IntMatrix& skew_gram) {
  if (!is_skew(skew_gram)) throw DegenerateForm("Gram matrix is not skew-symmetric");
  const std::size_t dim = skew_gram.rows();
  if (dim % 2 != 0 || std::llabs(determinant(skew_gram)) != 1)
    throw DegenerateForm("skew form is not unimodular");

  std::vector<IntVector> remaining;
  for (std::size_t i = 0; i < dim; ++i) {
    IntVector e(dim, 0);
    e[i] = 1;
    remaining.push_back(std::move(e));
  }
  std::vector<IntVector> out;
  while (!remaining.empty()) {
    // remaining is a basis of the orthogonal complement of what has been split
    // off so far; that complement is again unimodular.
    const IntVector e = remaining.front();
    IntVector f;
    if (!find_dual(skew_gram, e, remaining, f)) throw DegenerateForm("no dual vector found; form is degenerate");
    std::vector<IntVector> projected;
    for (const auto& x : remaining) {
      // x - <x,f> e + <x,e> f is orthogonal to both e and f.
      const std::int64_t xf = pairing(skew_gram, x, f);
      const std::int64_t xe = pairing(skew_gram, x, e);
      IntVector y(dim);
      for (std::size_t i = 0; i < dim; ++i)
        y[i] = checked::add(checked::sub(x[i], checked::mul(xf, e[i])), checked::mul(xe, f[i]));
      projected.push_back(std::move(y));
    }
    out.push_back(e);
    out.push_back(f);
    const auto hr = hermite_rows(IntMatrix::from_rows(projected, dim));
    remaining.clear();
    for (std::size_t i = 0; i < hr.rank; ++i) remaining.push_back(hr.form.row_vector(i));
  }
  return out;
}

std::vector<IntVector> symplectic_basis(const QuotientLattice& q) { return symplectic_basis(q.induced_gram); }

}  // namespace cubmon

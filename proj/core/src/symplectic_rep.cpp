#include "cubmon/symplectic_rep.hpp"

#include <algorithm>
#include <deque>

#include "cubmon/canonical.hpp"
#include "cubmon/errors.hpp"

namespace cubmon {

bool preserves_form(const IntMatrix& m, const IntMatrix& form) { return m.transpose() * form * m == form; }

SpMatrix::SpMatrix(IntMatrix entries, const IntMatrix& form, std::optional<GeneratorWord> provenance)
    : entries_(std::move(entries)), provenance_(std::move(provenance)) {
  if (!preserves_form(entries_, form)) throw ConstructionFailed("matrix does not preserve the skew form");
}

namespace {

IntMatrix transvection_matrix(const QuotientLattice& q, std::size_t vertex, int sign) {
  const IntVector& a = q.class_map.at(vertex);
  const IntVector ga = q.induced_gram * a;  // <x, a> = (G a) . x
  IntMatrix t = IntMatrix::identity(q.rank);
  for (std::size_t i = 0; i < q.rank; ++i)
    for (std::size_t j = 0; j < q.rank; ++j) t(i, j) = checked::add(t(i, j), checked::mul(sign, checked::mul(a[i], ga[j])));
  return t;
}

}  // namespace

SpMatrix transvection(const QuotientLattice& q, std::size_t vertex, int sign) {
  if (sign != 1 && sign != -1) throw InvalidInput("transvection sign must be +1 or -1");
  return SpMatrix(transvection_matrix(q, vertex, sign), q.induced_gram, GeneratorWord{vertex});
}

TransvectionRep::TransvectionRep(const QuotientLattice& q, int sign) : q_(&q), sign_(sign) {
  for (std::size_t v = 0; v < q.class_map.size(); ++v) {
    gens_.push_back(transvection(q, v, sign));
    inverses_.push_back(transvection_matrix(q, v, -sign));
  }
}

IntMatrix TransvectionRep::word(const GeneratorWord& w) const {
  IntMatrix m = IntMatrix::identity(q_->rank);
  for (auto v : w) m = m * gens_.at(v).entries();
  return m;
}

IntMatrix TransvectionRep::word_inverse(const GeneratorWord& w) const {
  IntMatrix m = IntMatrix::identity(q_->rank);
  for (auto it = w.rbegin(); it != w.rend(); ++it) m = m * inverses_.at(*it);
  return m;
}

bool verify_pair_relation(const SpMatrix& a, const SpMatrix& b, bool expect_braid) {
  const IntMatrix& x = a.entries();
  const IntMatrix& y = b.entries();
  if (expect_braid) return x * y * x == y * x * y;
  return x * y == y * x;
}

TransvectionShape transvection_shape(const TransvectionRep& rep, std::size_t vertex) {
  const QuotientLattice& q = rep.lattice();
  const IntMatrix dev = rep.generator(vertex).entries() - IntMatrix::identity(q.rank);
  TransvectionShape s;
  s.deviation_rank = rank(dev);
  s.square_zero = (dev * dev) == IntMatrix(q.rank, q.rank);
  s.fixed_dimension = q.rank - s.deviation_rank;
  // Image of T - I: span of its columns, Hermite-reduced.
  const auto hr = hermite_rows(dev.transpose());
  if (hr.rank == 1) {
    const IntVector dir = hr.form.row_vector(0);
    s.direction_primitive = content(dir) == 1;
    const IntVector& a = q.class_map.at(vertex);
    IntVector neg(a.size());
    std::transform(a.begin(), a.end(), neg.begin(), [](std::int64_t x) { return -x; });
    s.direction_is_class = (dir == a || dir == neg);
  }
  return s;
}

std::vector<std::size_t> oriented_triangle(const TransvectionRep& rep, std::size_t u, std::size_t v, std::size_t w) {
  const QuotientLattice& q = rep.lattice();
  const auto& cm = q.class_map;
  const std::int64_t cyc = q.pair(cm[u], cm[v]) * q.pair(cm[v], cm[w]) * q.pair(cm[w], cm[u]);
  if (rep.sign() * cyc == -1) return {u, v, w};
  return {u, w, v};
}

bool triangle_identity_holds(const TransvectionRep& rep, std::size_t u, std::size_t v, std::size_t w) {
  const IntMatrix& a = rep.generator(u).entries();
  const IntMatrix& b = rep.generator(v).entries();
  const IntMatrix& c = rep.generator(w).entries();
  return a * b * c * a == b * c * a * b;
}

RelationReport verify_all_relations(const TransvectionRep& rep, const ArtinGraph& g) {
  RelationReport report;
  report.sign = rep.sign();
  const std::size_t n = g.size();
  if (rep.generator_count() != n) throw InvalidInput("representation and graph have different vertex counts");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      ++report.pairs_checked;
      const bool braid = g.adjacent(i, j);
      if (!verify_pair_relation(rep.generator(i), rep.generator(j), braid))
        report.failures.push_back({{i, j}, braid ? "braid" : "commute"});
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!g.adjacent(i, j)) continue;
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!g.adjacent(i, k) || !g.adjacent(j, k)) continue;
        ++report.triangles_checked;
        const auto t = oriented_triangle(rep, i, j, k);
        if (!triangle_identity_holds(rep, t[0], t[1], t[2])) report.failures.push_back({t, "triangle"});
        if (triangle_identity_holds(rep, t[0], t[2], t[1])) ++report.triangles_both_orientations;
      }
    }
  return report;
}

std::vector<ConjugacyWitness> conjugacy_witnesses(const TransvectionRep& rep, const ArtinGraph& g, std::size_t root) {
  const std::size_t n = g.size();
  std::vector<std::optional<GeneratorWord>> words(n);
  words.at(root) = GeneratorWord{};
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      if (words[v] || !g.adjacent(u, v)) continue;
      // (T_u T_v) T_u (T_u T_v)^{-1} = T_v, so prefix the parent's word with u v.
      GeneratorWord w{u, v};
      w.insert(w.end(), words[u]->begin(), words[u]->end());
      words[v] = std::move(w);
      queue.push_back(v);
    }
  }
  std::vector<ConjugacyWitness> out;
  const IntMatrix& t_root = rep.generator(root).entries();
  for (std::size_t v = 0; v < n; ++v) {
    if (!words[v]) throw InvalidInput("graph is disconnected; no conjugacy witness for " + g.vertex(v).str());
    ConjugacyWitness cw{v, *words[v], false};
    cw.verified = rep.word(cw.word) * t_root * rep.word_inverse(cw.word) == rep.generator(v).entries();
    out.push_back(std::move(cw));
  }
  return out;
}

std::uint32_t mod2_vector(std::span<const std::int64_t> v) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] % 2 != 0) m |= (1u << i);
  return m;
}

int mod2_pairing(const QuotientLattice& q, std::uint32_t x, std::uint32_t y) {
  int s = 0;
  for (std::size_t i = 0; i < q.rank; ++i) {
    if (!((x >> i) & 1u)) continue;
    for (std::size_t j = 0; j < q.rank; ++j)
      if ((y >> j) & 1u) s += static_cast<int>(q.induced_gram(i, j) & 1);
  }
  return s & 1;
}

QuadraticRefinement quadratic_refinement(const QuotientLattice& q) {
  if (q.rank > 20) throw ConstructionFailed("mod-2 space too large to tabulate");
  const std::size_t n = q.rank;
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);

  // Greedy F_2 basis among the vanishing classes, remembering how each
  // reduced pivot row is expressed in terms of the chosen basis.
  std::vector<std::uint32_t> pivot_rows;
  std::vector<std::uint32_t> pivot_combo;
  std::vector<int> pivot_bit;
  QuadraticRefinement qr;
  qr.rank_ = n;
  for (std::size_t v = 0; v < q.class_map.size() && qr.basis_.size() < n; ++v) {
    std::uint32_t x = mod2_vector(q.class_map[v]);
    std::uint32_t combo = 1u << qr.basis_.size();
    for (std::size_t t = 0; t < pivot_rows.size(); ++t)
      if ((x >> pivot_bit[t]) & 1u) {
        x ^= pivot_rows[t];
        combo ^= pivot_combo[t];
      }
    if (x == 0) continue;
    int bit = 0;
    while (!((x >> bit) & 1u)) ++bit;
    pivot_rows.push_back(x);
    pivot_combo.push_back(combo);
    pivot_bit.push_back(bit);
    qr.basis_.push_back(v);
  }
  if (qr.basis_.size() != n) throw ConstructionFailed("vanishing classes do not span the mod-2 quotient");

  std::vector<std::uint32_t> basis_vec;
  for (auto v : qr.basis_) basis_vec.push_back(mod2_vector(q.class_map[v]));
  std::vector<std::vector<int>> bpair(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bpair[i][j] = mod2_pairing(q, basis_vec[i], basis_vec[j]);

  qr.values_.assign(std::size_t{1} << n, 0);
  for (std::uint32_t x = 0; x <= full; ++x) {
    // Coordinates of x in the chosen basis.
    std::uint32_t rem = x;
    std::uint32_t coords = 0;
    for (std::size_t t = 0; t < pivot_rows.size(); ++t)
      if ((rem >> pivot_bit[t]) & 1u) {
        rem ^= pivot_rows[t];
        coords ^= pivot_combo[t];
      }
    int val = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((coords >> i) & 1u)) continue;
      val ^= 1;
      for (std::size_t j = i + 1; j < n; ++j)
        if ((coords >> j) & 1u) val ^= bpair[i][j];
    }
    qr.values_[x] = static_cast<std::uint8_t>(val);
    if (x == full) break;
  }
  for (std::size_t v = 0; v < q.class_map.size(); ++v)
    if (qr.values_[mod2_vector(q.class_map[v])] != 1)
      throw ConstructionFailed("quadratic refinement takes value 0 on vanishing class " + std::to_string(v));
  return qr;
}

bool refinement_is_quadratic(const QuotientLattice& q, const QuadraticRefinement& qr) {
  const std::uint32_t size = static_cast<std::uint32_t>(qr.values().size());
  // Precompute x -> (G x) mod 2 so the pairing is a popcount.
  std::vector<std::uint32_t> gx(size);
  for (std::uint32_t x = 0; x < size; ++x) {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < q.rank; ++i)
      if (mod2_pairing(q, 1u << i, x)) r |= 1u << i;
    gx[x] = r;
  }
  for (std::uint32_t x = 0; x < size; ++x)
    for (std::uint32_t y = 0; y < size; ++y) {
      const int p = __builtin_popcount(x & gx[y]) & 1;
      if (qr.value(x ^ y) != (qr.value(x) ^ qr.value(y) ^ p)) return false;
    }
  return true;
}

std::vector<std::size_t> refinement_violations(const QuotientLattice& q, const QuadraticRefinement& qr) {
  std::vector<std::size_t> bad;
  const std::uint32_t size = static_cast<std::uint32_t>(qr.values().size());
  for (std::size_t v = 0; v < q.class_map.size(); ++v) {
    const std::uint32_t a = mod2_vector(q.class_map[v]);
    for (std::uint32_t x = 0; x < size; ++x) {
      const std::uint32_t tx = mod2_pairing(q, x, a) ? (x ^ a) : x;
      if (qr.value(tx) != qr.value(x)) {
        bad.push_back(v);
        break;
      }
    }
  }
  return bad;
}

std::size_t invariant_span_closure(const TransvectionRep& rep, const std::vector<IntVector>& seeds) {
  const std::size_t dim = rep.lattice().rank;
  std::vector<IntVector> span;
  auto current_rank = [&] { return span.empty() ? std::size_t{0} : rank(IntMatrix::from_rows(span, dim)); };
  auto try_add = [&](const IntVector& x) {
    if (is_zero(x)) return false;
    const std::size_t before = current_rank();
    span.push_back(x);
    if (current_rank() > before) return true;
    span.pop_back();
    return false;
  };
  for (const auto& s : seeds) {
    if (s.size() != dim) throw InvalidInput("seed vector has the wrong dimension");
    try_add(s);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const auto snapshot = span;
    for (const auto& x : snapshot)
      for (std::size_t v = 0; v < rep.generator_count(); ++v)
        if (try_add(rep.generator(v).entries() * x)) grew = true;
  }
  return current_rank();
}

ChainParity chain_parity_check(const QuotientLattice& q) {
  if (q.class_map.size() != 16) throw InvalidInput("chain parity check requires the k = 4 lattice");
  const auto chain = canonical::braid_chain();
  ChainParity out;
  out.sum.assign(q.rank, 0);
  for (std::size_t i : {0u, 2u, 4u, 6u}) {
    const IntVector& a = q.class_map[chain[i].mask()];
    for (std::size_t t = 0; t < q.rank; ++t) out.sum[t] = checked::add(out.sum[t], a[t]);
  }
  out.nonzero = !is_zero(out.sum);
  const IntVector& hat = q.class_map[BitVertex::parse("0111").mask()];
  out.parity = static_cast<int>(((q.pair(hat, out.sum) % 2) + 2) % 2);
  return out;
}

}  // namespace cubmon

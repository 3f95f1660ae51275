#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "cubmon/artin_graph.hpp"
#include "cubmon/errors.hpp"
#include "cubmon/milnor_lattice.hpp"
#include "oracles.hpp"

using namespace cubmon;

namespace {
BitVertex V(const char* s) { return BitVertex::parse(s); }

std::vector<std::vector<long long>> rows_of(const std::vector<IntVector>& vs) {
  std::vector<std::vector<long long>> out;
  for (const auto& v : vs) out.emplace_back(v.begin(), v.end());
  return out;
}
}  // namespace

TEST_CASE("pairing rule examples") {
  CHECK(hl_pairing(V("0000"), V("0001")) == 1);
  CHECK(hl_pairing(V("0001"), V("0000")) == -1);
  CHECK(hl_pairing(V("0100"), V("1010")) == 0);
  CHECK(hl_pairing(V("0001"), V("0001")) == 0);
  CHECK_THROWS_AS(hl_pairing(V("001"), V("0001")), InvalidInput);
}

TEST_CASE("gram matrix matches the rule evaluated on strings") {
  for (unsigned k = 1; k <= 5; ++k) {
    const auto l = gram_matrix(k);
    const auto names = oracle::all_tuples(k);
    const ArtinGraph g(k);
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = 0; j < names.size(); ++j) {
        CHECK(l.gram(i, j) == oracle::pairing(names[i], names[j]));
        CHECK(l.gram(i, j) == -l.gram(j, i));
        CHECK((l.gram(i, j) != 0) == g.adjacent(i, j));
      }
  }
  const auto k1 = gram_matrix(1);
  CHECK(k1.gram == IntMatrix{{0, 1}, {-1, 0}});
}

TEST_CASE("rank, radical and quotient for k = 4") {
  const auto l = gram_matrix(4);
  std::vector<std::vector<long long>> g(16, std::vector<long long>(16));
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) g[i][j] = l.gram(i, j);
  CHECK(oracle::rational_rank(g) == 10);
  CHECK(rank(l.gram) == 10);
  const auto rad = radical(l);
  CHECK(rad.size() == 6);
  for (const auto& v : rad) {
    CHECK(is_zero(l.gram * v));
    CHECK(content(v) == 1);
  }
  CHECK(oracle::rational_rank(rows_of(rad)) == 6);

  const auto q = quotient_lattice(l);
  CHECK(q.rank == 10);
  CHECK(q.class_map.size() == 16);
  CHECK(q.radical_basis == rad);
  for (std::size_t i = 0; i < 16; ++i)
    for (std::size_t j = 0; j < 16; ++j) CHECK(q.pair(q.class_map[i], q.class_map[j]) == l.gram(i, j));
  CHECK(oracle::rational_rank(rows_of(q.class_map)) == 10);
  CHECK(std::llabs(determinant(q.induced_gram)) == 1);
  // radical vectors project to zero
  for (const auto& v : rad) CHECK(is_zero(q.projection * v));
}

TEST_CASE("quotient is reproducible") {
  const auto a = quotient_lattice(gram_matrix(4));
  const auto b = quotient_lattice(gram_matrix(4));
  CHECK(a.class_map == b.class_map);
  CHECK(a.induced_gram == b.induced_gram);
}

TEST_CASE("nondegenerate lattice has empty radical") {
  const SkewLattice l{1, IntMatrix{{0, 1}, {-1, 0}}};
  CHECK(radical(l).empty());
}

TEST_CASE("sublattice ranks") {
  const ArtinGraph g(4);
  const auto q = quotient_lattice(gram_matrix(4));
  std::vector<std::size_t> all(16);
  std::iota(all.begin(), all.end(), 0);
  CHECK(sublattice_rank(q, all) == 10);
  for (std::size_t v = 0; v < 16; ++v) CHECK(sublattice_rank(q, {v}) == 1);
  std::vector<std::size_t> non_extremal;
  for (std::size_t v = 0; v < 16; ++v)
    if (!is_extremal(g, g.vertex(v))) non_extremal.push_back(v);
  // independent count from the Gram rows: the quotient embeds in the dual
  const auto l = gram_matrix(4);
  std::vector<std::vector<long long>> rows;
  for (auto v : non_extremal) {
    std::vector<long long> r;
    for (std::size_t j = 0; j < 16; ++j) r.push_back(l.gram(v, j));
    rows.push_back(r);
  }
  CHECK(sublattice_rank(q, non_extremal) == oracle::rational_rank(rows));
  // monotone under inclusion
  std::vector<std::size_t> grow;
  std::size_t prev = 0;
  for (std::size_t v = 0; v < 16; ++v) {
    grow.push_back(v);
    const auto r = sublattice_rank(q, grow);
    CHECK(r >= prev);
    CHECK(r <= 10);
    prev = r;
  }
}

TEST_CASE("symplectic basis") {
  const auto q = quotient_lattice(gram_matrix(4));
  const auto basis = symplectic_basis(q);
  REQUIRE(basis.size() == 10);
  const auto b = IntMatrix::from_rows(basis, 10);
  CHECK(std::llabs(determinant(b)) == 1);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      std::int64_t expect = 0;
      if (i % 2 == 0 && j == i + 1) expect = 1;
      if (j % 2 == 0 && i == j + 1) expect = -1;
      CHECK(q.pair(basis[i], basis[j]) == expect);
    }
  const auto std2 = symplectic_basis(IntMatrix{{0, 1}, {-1, 0}});
  CHECK(std2 == std::vector<IntVector>{{1, 0}, {0, 1}});
  CHECK_THROWS_AS(symplectic_basis(IntMatrix{{0, 2}, {-2, 0}}), DegenerateForm);
  CHECK_THROWS_AS(symplectic_basis(gram_matrix(4).gram), DegenerateForm);
}

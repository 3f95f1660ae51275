#include <doctest.h>

#include <cstdlib>
#include <numeric>

#include "cubmon/artin_graph.hpp"
#include "cubmon/canonical.hpp"
#include "cubmon/errors.hpp"
#include "cubmon/milnor_lattice.hpp"
#include "cubmon/symplectic_rep.hpp"

using namespace cubmon;

namespace {
BitVertex V(const char* s) { return BitVertex::parse(s); }

struct Fixture {
  ArtinGraph g{4};
  QuotientLattice q = quotient_lattice(gram_matrix(4));
  std::size_t idx(const char* s) const { return g.index_of(V(s)); }
};
}  // namespace

TEST_CASE_FIXTURE(Fixture, "transvections fix their own class and have rank one deviation") {
  for (int sign : {1, -1}) {
    const TransvectionRep rep(q, sign);
    for (std::size_t v = 0; v < 16; ++v) {
      const auto& t = rep.generator(v).entries();
      CHECK(t * q.class_map[v] == q.class_map[v]);
      CHECK(preserves_form(t, q.induced_gram));
      const auto d = t - IntMatrix::identity(q.rank);
      CHECK(rank(d) == 1);
      CHECK(is_zero((d * d).row(0)));
      const auto sh = transvection_shape(rep, v);
      CHECK(sh.deviation_rank == 1);
      CHECK(sh.square_zero);
      CHECK(sh.fixed_dimension == 9);
      CHECK(sh.direction_primitive);
      CHECK(sh.direction_is_class);
      CHECK(rep.inverse(v) * t == IntMatrix::identity(q.rank));
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "transvection formula x + s<x,a>a") {
  const auto t = transvection(q, idx("0101"), 1);
  const auto& a = q.class_map[idx("0101")];
  for (std::size_t w = 0; w < 16; ++w) {
    const auto& x = q.class_map[w];
    IntVector expect = x;
    const auto c = q.pair(x, a);
    for (std::size_t i = 0; i < expect.size(); ++i) expect[i] += c * a[i];
    CHECK(t.entries() * x == expect);
  }
}

TEST_CASE_FIXTURE(Fixture, "SpMatrix rejects matrices that do not preserve the form") {
  IntMatrix m = IntMatrix::identity(q.rank);
  m(0, 0) = 2;
  CHECK_THROWS_AS(SpMatrix(m, q.induced_gram), ConstructionFailed);
}

TEST_CASE_FIXTURE(Fixture, "pair relations") {
  const TransvectionRep rep(q, 1);
  const auto& a = rep.generator(idx("0001"));
  const auto& b = rep.generator(idx("0101"));
  CHECK(verify_pair_relation(a, b, true));
  const auto& c = rep.generator(idx("0100"));
  const auto& d = rep.generator(idx("1010"));
  CHECK(verify_pair_relation(c, d, false));
  CHECK_FALSE(verify_pair_relation(c, d, true));
  CHECK_FALSE(verify_pair_relation(a, b, false));
}

TEST_CASE_FIXTURE(Fixture, "all relations hold for both signs") {
  for (int sign : {1, -1}) {
    const auto rep = verify_all_relations(TransvectionRep(q, sign), g);
    CHECK(rep.sign == sign);
    CHECK(rep.pairs_checked == 120);
    // count triangles independently
    std::size_t triangles = 0;
    for (std::size_t a = 0; a < 16; ++a)
      for (std::size_t b = a + 1; b < 16; ++b)
        for (std::size_t c = b + 1; c < 16; ++c) triangles += g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
    CHECK(rep.triangles_checked == triangles);
    CHECK(rep.failures.empty());
  }
  const TransvectionRep rep(q, 1);
  const auto t = oriented_triangle(rep, idx("0000"), idx("0001"), idx("0011"));
  CHECK(triangle_identity_holds(rep, t[0], t[1], t[2]));
  // the opposite orientation fails
  CHECK_FALSE(triangle_identity_holds(rep, t[0], t[2], t[1]));
}

TEST_CASE_FIXTURE(Fixture, "conjugacy witnesses verify by multiplication") {
  for (int sign : {1, -1}) {
    const TransvectionRep rep(q, sign);
    const auto ws = conjugacy_witnesses(rep, g);
    REQUIRE(ws.size() == 16);
    for (const auto& w : ws) {
      CHECK(w.verified);
      const auto lhs = rep.word(w.word) * rep.generator(0).entries() * rep.word_inverse(w.word);
      CHECK(lhs == rep.generator(w.vertex).entries());
      if (w.vertex == 0) CHECK(w.word.empty());
    }
    // a single edge conjugation (T_u T_v) T_u (T_u T_v)^-1 = T_v
    for (const auto& [u, v] : g.edges()) {
      const GeneratorWord uv{u, v};
      CHECK(rep.word(uv) * rep.generator(u).entries() * rep.word_inverse(uv) == rep.generator(v).entries());
    }
  }
}

TEST_CASE_FIXTURE(Fixture, "quadratic refinement") {
  const auto qr = quadratic_refinement(q);
  CHECK(qr.values().size() == 1024);
  CHECK(qr.value(0) == 0);
  for (const auto& a : q.class_map) CHECK(qr.value(mod2_vector(a)) == 1);
  CHECK(refinement_is_quadratic(q, qr));
  CHECK(refinement_violations(q, qr).empty());
  // direct invariance on every vector for both signs
  for (int sign : {1, -1}) {
    const TransvectionRep rep(q, sign);
    std::size_t moved = 0;
    for (std::size_t v = 0; v < 16; ++v)
      for (std::uint32_t x = 0; x < 1024; ++x) {
        IntVector vx(10);
        for (std::size_t i = 0; i < 10; ++i) vx[i] = (x >> i) & 1u;
        moved += qr.value(mod2_vector(rep.generator(v).entries() * vx)) != qr.value(x);
      }
    CHECK(moved == 0);
  }
}

TEST_CASE_FIXTURE(Fixture, "invariant span closure") {
  for (int sign : {1, -1}) {
    const TransvectionRep rep(q, sign);
    for (std::size_t v = 0; v < 16; ++v) CHECK(invariant_span_closure(rep, {q.class_map[v]}) == 10);
    CHECK(invariant_span_closure(rep, {IntVector(10, 0)}) == 0);
    CHECK(invariant_span_closure(rep, q.class_map) == 10);
  }
}

TEST_CASE_FIXTURE(Fixture, "chain parity") {
  const auto cp = chain_parity_check(q);
  CHECK(cp.nonzero);
  CHECK(cp.parity == 1);
  CHECK(q.pair(q.class_map[idx("0111")], q.class_map[idx("1010")]) == 0);
  CHECK(q.pair(q.class_map[idx("0111")], q.class_map[idx("1000")]) == 0);
  const auto chain = canonical::braid_chain();
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::llabs(q.pair(q.class_map[idx("0111")], q.class_map[g.index_of(chain[i])])) == 1);
}

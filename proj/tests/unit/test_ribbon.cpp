#include <doctest.h>

#include <algorithm>
#include <random>

#include "cubmon/canonical.hpp"
#include "cubmon/curve_pattern.hpp"
#include "cubmon/errors.hpp"
#include "cubmon/ribbon.hpp"
#include "oracles.hpp"

using namespace cubmon;

namespace {

CurvePattern named(const std::vector<std::vector<int>>& m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m.size(); ++i) names.push_back("c" + std::to_string(i));
  return CurvePattern(names, m);
}

RibbonStructure random_structure(std::mt19937& rng, const CurvePattern& p) {
  auto r = default_structure(p);
  for (auto& o : r.visit_order) std::shuffle(o.begin(), o.end(), rng);
  for (auto& b : r.crossing_bits) b = static_cast<std::uint8_t>(rng() & 1u);
  return r;
}

oracle::Traced traced(const CurvePattern& p, const RibbonStructure& r) {
  std::map<std::pair<std::size_t, std::size_t>, int> bits;
  const auto cr = p.crossings();
  for (std::size_t c = 0; c < cr.size(); ++c) bits[cr[c]] = r.crossing_bits[c];
  return oracle::trace(p.matrix(), r.visit_order, bits);
}

}  // namespace

TEST_CASE("single crossing is a punctured torus") {
  const auto p = canonical::bundled_pattern("pair");
  for (std::uint8_t b : {0, 1}) {
    auto r = default_structure(p);
    r.crossing_bits[0] = b;
    const auto s = surface_of(p, r);
    REQUIRE(s.components.size() == 1);
    CHECK(s.components[0].euler_char == -1);
    CHECK(s.components[0].boundary_count == 1);
    CHECK(s.components[0].genus == 1);
    CHECK(s.components[0].crossings == 1);
  }
}

TEST_CASE("a chain of seven curves has genus three and two boundary circles") {
  const auto p = canonical::bundled_pattern("chain7");
  auto r = default_structure(p);
  for (std::uint32_t mask = 0; mask < (1u << r.crossing_bits.size()); ++mask) {
    for (std::size_t c = 0; c < r.crossing_bits.size(); ++c) r.crossing_bits[c] = (mask >> c) & 1u;
    const auto s = surface_of(p, r);
    CHECK(s.total_genus() == 3);
    CHECK(s.total_boundary() == 2);
    CHECK(s.total_euler_char() == -6);
  }
}

TEST_CASE("a cycle of eight curves satisfies 2g + b = 10") {
  const auto p = canonical::bundled_pattern("cycle8");
  std::mt19937 rng(3);
  for (int t = 0; t < 64; ++t) {
    const auto s = surface_of(p, random_structure(rng, p));
    CHECK(2 * s.total_genus() + s.total_boundary() == 10);
  }
}

TEST_CASE("surface genus agrees with an independent dart tracer") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const auto m = oracle::random_pattern(rng, 2 + trial % 8, 16);
    const auto p = named(m);
    const auto r = random_structure(rng, p);
    const auto s = surface_of(p, r);
    const auto t = traced(p, r);
    CHECK(s.total_genus() == t.genus);
    CHECK(s.total_boundary() == t.faces);
    CHECK(static_cast<int>(s.components.size()) == t.components);
    CHECK(s.total_euler_char() == -static_cast<int>(p.crossing_count()));
  }
}

TEST_CASE("rotating or reversing visit orders leaves the surface unchanged") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = named(oracle::random_pattern(rng, 6, 12));
    auto r = random_structure(rng, p);
    const auto base = surface_of(p, r);
    auto rotated = r;
    for (auto& o : rotated.visit_order)
      if (!o.empty()) std::rotate(o.begin(), o.begin() + static_cast<std::ptrdiff_t>(rng() % o.size()), o.end());
    CHECK(surface_of(p, rotated).components == base.components);
    CHECK(surface_of(p, reversed(r)).total_genus() == base.total_genus());
    CHECK(surface_of(p, reversed(r)).total_boundary() == base.total_boundary());
    rotated.canonicalize();
    r.canonicalize();
    CHECK(rotated == r);
  }
}

TEST_CASE("genus is monotone under removing curves") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = named(oracle::random_pattern(rng, 7, 14));
    const auto r = random_structure(rng, p);
    const int g = surface_of(p, r).total_genus();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (rng() % 3) keep.push_back(i);
    const auto sub = p.restrict_to(keep);
    const auto rs = restrict_structure(p, r, keep);
    CHECK(surface_of(sub, rs).total_genus() <= g);
  }
}

TEST_CASE("inconsistent structures are rejected") {
  const auto p = canonical::bundled_pattern("chain7");
  auto r = default_structure(p);
  r.crossing_bits.pop_back();
  CHECK_THROWS_AS(surface_of(p, r), InvalidInput);
  r = default_structure(p);
  r.visit_order[1].push_back(r.visit_order[1][0]);
  CHECK_THROWS_AS(surface_of(p, r), InvalidInput);
  r = default_structure(p);
  r.visit_order[0] = {5};
  CHECK_THROWS_AS(require_consistent(p, r), InvalidInput);
}

#include <doctest.h>

#include <random>

#include "cubmon/canonical.hpp"
#include "cubmon/errors.hpp"
#include "cubmon/serialization.hpp"

using namespace cubmon;

TEST_CASE("graph round trip and validation") {
  for (unsigned k = 1; k <= 5; ++k) {
    const ArtinGraph g(k);
    const auto j = graph_to_json(g);
    CHECK(j["edges"].size() == g.edge_count());
    const auto back = graph_from_json(j);
    CHECK(back.edges() == g.edges());
  }
  auto j = graph_to_json(ArtinGraph(3));
  j["edges"].erase(0);
  CHECK_THROWS_AS(graph_from_json(j), InvalidInput);
  j = graph_to_json(ArtinGraph(3));
  std::swap(j["vertices"][1], j["vertices"][2]);
  CHECK_THROWS_AS(graph_from_json(j), InvalidInput);
  CHECK_THROWS_AS(graph_from_json(json{{"k", "x"}}), InvalidInput);

  const auto dot = graph_to_dot(ArtinGraph(2));
  CHECK(dot.find("graph gamma2 {") == 0);
  CHECK(dot.find("label=\"01\"") != std::string::npos);
}

TEST_CASE("matrix round trip") {
  const IntMatrix m{{1, -2, 3}, {0, 5, -7}};
  CHECK(matrix_from_json(matrix_to_json(m)) == m);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,2],[3]]")), InvalidInput);
  CHECK_THROWS_AS(matrix_from_json(json::parse("[[1,\"a\"]]")), InvalidInput);
}

TEST_CASE("lattice and representation documents") {
  const auto l = gram_matrix(4);
  const auto lj = lattice_to_json(l);
  CHECK(lj["rank"] == 10);
  CHECK(matrix_from_json(lj["gram"]) == l.gram);
  const auto q = quotient_lattice(l);
  const auto qj = quotient_to_json(q);
  CHECK(qj["rank"] == 10);
  CHECK(std::llabs(qj["determinant"].get<long long>()) == 1);
  CHECK(qj["symplectic_basis"].size() == 10);
  CHECK(matrix_from_json(qj["induced_gram"]) == q.induced_gram);

  const ArtinGraph g(4);
  const TransvectionRep rep(q, -1);
  const auto rj = representation_to_json(rep, g);
  CHECK(rj["sign"] == -1);
  CHECK(matrix_from_json(rj["transvections"]["0110"]) == rep.generator(g.index_of(BitVertex::parse("0110"))).entries());
  const auto report = relation_report_to_json(verify_all_relations(rep, g), g);
  CHECK(report["ok"] == true);
  CHECK(report["pairs_checked"] == 120);
  const auto wj = witnesses_to_json(conjugacy_witnesses(rep, g), g);
  CHECK(wj.size() == 16);
  CHECK(wj[0]["word"].empty());
  const auto fj = refinement_to_json(quadratic_refinement(q), g);
  CHECK(fj["values"].size() == 1024);
}

TEST_CASE("pattern round trip") {
  for (const auto& name : canonical::bundled_pattern_names()) {
    const auto p = canonical::bundled_pattern(name);
    const auto back = pattern_from_json(pattern_to_json(p));
    CHECK(back == p);
  }
  const auto plain = json::parse(R"({"curves":["a","b","c"],"intersections":[["a","b"],["c","b"]]})");
  const auto p = pattern_from_json(plain);
  CHECK(p.crossing_count() == 2);
  CHECK(p.vertices().empty());
  CHECK_THROWS_AS(pattern_from_json(json::parse(R"({"curves":["a","a"],"intersections":[["a","a"]]})")), InvalidInput);
  CHECK_THROWS_AS(pattern_from_json(json::parse(R"({"curves":["a","b"],"intersections":[["a"]]})")), InvalidInput);
  CHECK_THROWS_AS(pattern_from_json(json::parse(R"({"curves":["a","b"]})")), InvalidInput);
  CHECK_THROWS_AS(pattern_from_json(json::parse(R"({"curves":["a","b"],"intersections":[["a","z"]]})")), InvalidInput);
}

TEST_CASE("witness round trip") {
  std::mt19937 rng(4);
  const auto p = canonical::bundled_pattern("twelve");
  for (int t = 0; t < 20; ++t) {
    auto r = default_structure(p);
    for (auto& o : r.visit_order) std::shuffle(o.begin(), o.end(), rng);
    for (auto& b : r.crossing_bits) b = rng() & 1u;
    r.canonicalize();
    const auto j = structure_to_json(p, r);
    CHECK(structure_from_json(p, j) == r);
    CHECK(surface_of(p, structure_from_json(p, j)).total_genus() == surface_of(p, r).total_genus());
  }
  const auto pair = canonical::bundled_pattern("pair");
  auto r = default_structure(pair);
  r.crossing_bits[0] = 1;
  auto j = structure_to_json(pair, r);
  // naming the pair in reverse flips the bit
  j["bits"][0]["pair"] = {pair.label(1), pair.label(0)};
  j["bits"][0]["bit"] = 0;
  CHECK(structure_from_json(pair, j) == r);
  j["bits"][0]["bit"] = 2;
  CHECK_THROWS_AS(structure_from_json(pair, j), InvalidInput);
  j["bits"] = json::array();
  CHECK_THROWS_AS(structure_from_json(pair, j), InvalidInput);
}

TEST_CASE("result and manifest documents") {
  const auto p = canonical::bundled_pattern("chain7");
  const auto r = min_genus(p, 5);
  const auto j = result_to_json(p, r);
  CHECK(j["verdict"] == "Exact");
  CHECK(j["genus"] == 3);
  CHECK(surface_of(p, structure_from_json(p, j["witness"])).total_genus() == 3);
  CHECK(surface_to_json(surface_of(p, *r.witness))["genus"] == 3);
  CHECK(result_to_json(p, min_genus(p, 1))["witness"].is_null());

  RunManifest m;
  m.command = "realize min-genus";
  m.parameters["budget"] = 5;
  m.input_hashes["pattern"] = content_hash(pattern_to_json(p));
  const auto mj = manifest_to_json(m);
  CHECK(mj["toolkit_version"] == std::string(version()));
  CHECK(mj["input_hashes"]["pattern"].get<std::string>().size() == 16);
  CHECK(content_hash(json::parse(R"({"a":1,"b":2})")) == content_hash(json::parse(R"({"b":2,"a":1})")));
}

#include "cubmon_tools/pipeline.hpp"

#include <algorithm>
#include <sstream>

#include "cubmon/artin_graph.hpp"
#include "cubmon/canonical.hpp"
#include "cubmon/errors.hpp"
#include "cubmon/milnor_lattice.hpp"
#include "cubmon/ribbon.hpp"
#include "cubmon/serialization.hpp"
#include "cubmon/symplectic_rep.hpp"

namespace cubmon::pipeline {

bool Outcome::all_pass() const {
  return !inconclusive && std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
}

std::vector<std::pair<std::string, SearchConfig>> u_placement_models() {
  std::vector<std::pair<std::string, SearchConfig>> out;
  SearchConfig first;
  first.fixed_cyclic_orders["a"] = {"b", "u", "h"};
  out.emplace_back("u between b and h", first);
  SearchConfig second;
  second.fixed_cyclic_orders["a"] = {"b", "h", "u"};
  out.emplace_back("u between h and b", second);
  return out;
}

namespace {

std::string str(auto... parts) {
  std::ostringstream s;
  (s << ... << parts);
  return s.str();
}

class Board {
 public:
  void add(const std::string& group, const std::string& name, bool pass, const std::string& detail = {}) {
    rows.push_back({group, name, pass, detail});
  }
  // Exceptions from a check count as failures of that row only.
  template <typename F>
  void check(const std::string& group, const std::string& name, F&& f) {
    try {
      auto [pass, detail] = f();
      add(group, name, pass, detail);
    } catch (const std::exception& e) {
      add(group, name, false, str("error: ", e.what()));
    }
  }
  std::vector<Row> rows;
};

SearchConfig with_cache(SearchConfig c, const Options& o, const std::string& tag, const CurvePattern& p, int budget) {
  c.threads = o.threads;
  if (o.cache_dir) {
    c.cache_path = *o.cache_dir / str(tag, "-", budget, "-", content_hash(pattern_to_json(p)), ".jsonl");
    c.resume = true;
  }
  return c;
}

std::string verdict_text(const MinGenusResult& r) { return str(to_string(r.verdict), "(", r.genus, ")"); }

}  // namespace

Outcome run(const Options& options) {
  Board b;
  Outcome outcome;

  const std::string G = "Artin graph";
  const ArtinGraph g4(4), g3(3);
  b.check(G, "gamma(4) has 16 vertices and 65 edges", [&] {
    return std::pair{g4.size() == 16 && g4.edge_count() == 65, str(g4.size(), " vertices, ", g4.edge_count(), " edges")};
  });
  b.check(G, "extremal vertices are 0000 and 1111, adjacent to all others", [&] {
    const auto ex = extremal_vertices(g4);
    bool ok = ex.size() == 2 && ex[0].str() == "0000" && ex[1].str() == "1111";
    for (const auto& v : ex) ok = ok && g4.degree(g4.index_of(v)) == 15;
    return std::pair{ok, str(ex.size(), " extremal")};
  });
  b.check(G, "sign-pair and comparability edge rules agree for k <= 5", [&] {
    std::size_t pairs = 0;
    bool ok = true;
    for (unsigned k = 1; k <= 5; ++k)
      for (std::uint32_t x = 0; x < (1u << k); ++x)
        for (std::uint32_t y = 0; y < (1u << k); ++y, ++pairs)
          ok = ok && edge_by_sign_pairs(BitVertex(k, x), BitVertex(k, y)) == edge_by_comparability(BitVertex(k, x), BitVertex(k, y));
    return std::pair{ok, str(pairs, " ordered pairs")};
  });
  b.check(G, "gamma(3) has 8 vertices and 19 edges", [&] {
    return std::pair{g3.size() == 8 && g3.edge_count() == 19, str(g3.size(), " vertices, ", g3.edge_count(), " edges")};
  });

  const std::string L = "Vanishing lattice";
  const SkewLattice lat = gram_matrix(4);
  const QuotientLattice q = quotient_lattice(lat);
  b.check(L, "Gram matrix has rank 10 with a rank 6 radical", [&] {
    const auto r = rank(lat.gram);
    const auto rad = radical(lat).size();
    return std::pair{r == 10 && rad == 6, str("rank ", r, ", radical ", rad)};
  });
  b.check(L, "the 14 non-extremal classes span rank 10", [&] {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g4.size(); ++i)
      if (!is_extremal(g4, g4.vertex(i))) idx.push_back(i);
    const auto r = sublattice_rank(q, idx);
    return std::pair{idx.size() == 14 && r == 10, str(idx.size(), " classes, rank ", r)};
  });
  b.check(L, "quotient pairing reproduces the Gram matrix", [&] {
    std::size_t bad = 0, pairs = 0;
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t j = i + 1; j < 16; ++j, ++pairs)
        if (q.pair(q.class_map[i], q.class_map[j]) != lat.gram(i, j)) ++bad;
    return std::pair{bad == 0, str(pairs, " pairs, ", bad, " mismatches")};
  });
  b.check(L, "induced form is unimodular", [&] {
    const auto d = determinant(q.induced_gram);
    return std::pair{d == 1 || d == -1, str("det ", d)};
  });

  const std::string R = "Transvection representation";
  for (int sign : {1, -1}) {
    const std::string s = sign > 0 ? " (+)" : " (-)";
    const TransvectionRep rep(q, sign);
    RelationReport rel;
    b.check(R, "braid and commutation relations match gamma" + s, [&] {
      rel = verify_all_relations(rep, g4);
      std::size_t pair_failures = 0;
      for (const auto& f : rel.failures) pair_failures += f.vertices.size() == 2;
      return std::pair{rel.pairs_checked == 120 && pair_failures == 0, str(rel.pairs_checked, " pairs, ", pair_failures, " failures")};
    });
    b.check(R, "triangle identities hold" + s, [&] {
      std::size_t tri_failures = 0;
      for (const auto& f : rel.failures) tri_failures += f.vertices.size() == 3;
      return std::pair{rel.triangles_checked > 0 && tri_failures == 0, str(rel.triangles_checked, " triangles, ", tri_failures, " failures")};
    });
    b.check(R, "all generators are conjugate via verified witnesses" + s, [&] {
      const auto ws = conjugacy_witnesses(rep, g4);
      const auto ok = std::count_if(ws.begin(), ws.end(), [](const auto& w) { return w.verified; });
      return std::pair{ws.size() == 16 && ok == 16, str(ok, "/", ws.size(), " verified")};
    });
    b.check(R, "each generator is a transvection fixing a hyperplane" + s, [&] {
      std::size_t ok = 0;
      for (std::size_t v = 0; v < 16; ++v) {
        const auto sh = transvection_shape(rep, v);
        ok += sh.deviation_rank == 1 && sh.square_zero && sh.fixed_dimension == 9 && sh.direction_primitive && sh.direction_is_class;
      }
      return std::pair{ok == 16, str(ok, "/16 generators")};
    });
    b.check(R, "generators preserve a quadratic refinement with q(a_v) = 1" + s, [&] {
      const auto qr = quadratic_refinement(q);
      bool ok = refinement_is_quadratic(q, qr);
      for (const auto& a : q.class_map) ok = ok && qr.value(mod2_vector(a)) == 1;
      // The refinement does not depend on the sign; invariance is checked on this sign's generators.
      std::size_t moved = 0;
      for (std::size_t v = 0; v < 16; ++v) {
        const auto& t = rep.generator(v).entries();
        for (std::uint32_t x = 0; x < qr.values().size(); ++x) {
          IntVector vx(q.rank);
          for (std::size_t i = 0; i < q.rank; ++i) vx[i] = (x >> i) & 1u;
          if (qr.value(mod2_vector(t * vx)) != qr.value(x)) ++moved;
        }
      }
      return std::pair{ok && moved == 0, str(qr.values().size(), " vectors, ", moved, " violations")};
    });
    b.check(R, "invariant span of any single generator direction is 10" + s, [&] {
      std::size_t ok = 0;
      for (std::size_t v = 0; v < 16; ++v) ok += invariant_span_closure(rep, {q.class_map[v]}) == 10;
      return std::pair{ok == 16, str(ok, "/16 seeds")};
    });
  }
  b.check(R, "a1 + a3 + a5 + a7 is nonzero and pairs oddly with a(0111)", [&] {
    const auto cp = chain_parity_check(q);
    return std::pair{cp.nonzero && cp.parity == 1, str("nonzero ", cp.nonzero, ", parity ", cp.parity)};
  });

  const std::string C = "Chains";
  b.check(C, "the seven-vertex chain is an induced path (Br8)", [&] {
    const auto rep = verify_chain(g4, canonical::braid_chain());
    return std::pair{rep.is_chain, str(rep.violations.size(), " violations")};
  });
  b.check(C, "adding 1001 closes an induced 8-cycle (affine braid group)", [&] {
    return std::pair{verify_induced_cycle(g4, canonical::affine_cycle()), std::string{}};
  });
  b.check(C, "commuting partners exist exactly for the non-extremal vertices", [&] {
    std::size_t with = 0, extremal_with = 0;
    for (const auto& v : g4.vertices()) {
      const bool has = commuting_partner_witness(g4, canonical::braid_chain(), v).has_value();
      if (is_extremal(g4, v)) extremal_with += has;
      else with += has;
    }
    return std::pair{with == 14 && extremal_with == 0, str(with, "/14 non-extremal, ", extremal_with, "/2 extremal")};
  });

  const std::string S = "Curve realizability (small)";
  const auto pair = canonical::bundled_pattern("pair");
  const auto chain = canonical::bundled_pattern("chain7");
  const auto ten = canonical::bundled_pattern("ten");
  const auto eleven = canonical::bundled_pattern("eleven");
  const auto twelve = canonical::bundled_pattern("twelve");
  b.check(S, "two curves meeting once have minimal genus 1", [&] {
    const auto r = min_genus(pair, 5);
    return std::pair{r.verdict == Verdict::Exact && r.genus == 1, verdict_text(r)};
  });
  b.check(S, "the A7 chain has minimal genus 3", [&] {
    const auto r = min_genus(chain, 5);
    return std::pair{r.verdict == Verdict::Exact && r.genus == 3, verdict_text(r)};
  });
  b.check(S, "F2 genus bounds are 1, 3, 5 for pair, chain, twelve curves", [&] {
    const int a = f2_genus_lower_bound(pair), c = f2_genus_lower_bound(chain), t = f2_genus_lower_bound(twelve);
    return std::pair{a == 1 && c == 3 && t == 5, str(a, ", ", c, ", ", t, " (F2 rank of twelve: ", f2_rank(twelve), ")")};
  });
  b.check(S, "minimal genus is additive over components", [&] {
    std::vector<std::string> labels{"p", "q"};
    for (const auto& l : chain.curves()) labels.push_back(l);
    std::vector<std::pair<std::string, std::string>> pairs{{"p", "q"}};
    for (const auto& [x, y] : chain.crossings()) pairs.emplace_back(chain.label(x), chain.label(y));
    const auto r = min_genus(CurvePattern::from_pairs(labels, pairs), 6);
    return std::pair{r.verdict == Verdict::Exact && r.genus == 4, verdict_text(r)};
  });
  b.check(S, "minimal genus is independent of insertion order", [&] {
    SearchConfig degree;
    degree.order = InsertionOrder::DegreeDescending;
    const auto a = min_genus(ten, 5), d = min_genus(ten, 5, degree);
    return std::pair{a.verdict == d.verdict && a.genus == d.genus, verdict_text(a) + " / " + verdict_text(d)};
  });

  if (options.include_main) {
    const std::string M = "Curve realizability (main)";
    auto searched = [&](const std::string& name, auto&& f) {
      b.check(M, name, [&]() -> std::pair<bool, std::string> {
        try {
          return f();
        } catch (const Inconclusive& e) {
          outcome.inconclusive = true;
          return {false, str("inconclusive: ", e.what())};
        }
      });
    };
    searched("curves a..h, u, v fit on genus 5 with a traced witness", [&] {
      const auto r = is_realizable(ten, 5, with_cache({}, options, "ten", ten, 5));
      const bool traced = r.witness && surface_of(ten, *r.witness).total_genus() <= 5;
      return std::pair{r.realizable && traced, verdict_text(r.search)};
    });
    searched("the twelve-curve pattern does not fit on genus 5", [&] {
      const auto r = min_genus(twelve, 5, with_cache({}, options, "twelve", twelve, 5));
      return std::pair{r.verdict == Verdict::Exceeds && r.genus == 5 && r.exhausted, verdict_text(r)};
    });
    const auto models = u_placement_models();
    for (std::size_t m = 0; m < models.size(); ++m)
      searched("eleven curves with " + models[m].first + ": search exhausts", [&] {
        const auto r = min_genus(eleven, 5, with_cache(models[m].second, options, str("eleven-model", m), eleven, 5));
        return std::pair{r.exhausted, verdict_text(r)};
      });
  }
  outcome.rows = std::move(b.rows);
  return outcome;
}

nlohmann::json rows_to_json(const std::vector<Row>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : rows) out.push_back({{"group", r.group}, {"check", r.name}, {"pass", r.pass}, {"detail", r.detail}});
  return out;
}

std::string scoreboard(const std::vector<Row>& rows) {
  std::ostringstream s;
  std::string group;
  for (const auto& r : rows) {
    if (r.group != group) {
      group = r.group;
      s << "\n" << group << "\n";
    }
    s << "  [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name;
    if (!r.detail.empty()) s << "  -- " << r.detail;
    s << "\n";
  }
  const auto passed = std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.pass; });
  s << "\n" << passed << "/" << rows.size() << " checks passed\n";
  return s.str();
}

}  // namespace cubmon::pipeline

#include "cubmon/serialization.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cubmon/errors.hpp"
#include "cubmon/search_cache.hpp"

namespace cubmon {

std::string_view version() { return CUBMON_VERSION; }

namespace {

std::string vertex_label(const ArtinGraph& g, std::size_t i) { return g.vertex(i).str(); }

json word_to_json(const GeneratorWord& w, const ArtinGraph& g) {
  json out = json::array();
  for (auto v : w) out.push_back(vertex_label(g, v));
  return out;
}

template <typename F>
auto parse_guard(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

json graph_to_json(const ArtinGraph& g) {
  json j;
  j["k"] = g.k();
  j["vertices"] = json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back(v.str());
  j["edges"] = json::array();
  for (const auto& [a, b] : g.edges()) j["edges"].push_back({a, b});
  return j;
}

ArtinGraph graph_from_json(const json& j) {
  return parse_guard("graph", [&] {
    const ArtinGraph g(j.at("k").get<unsigned>());
    const auto vs = j.at("vertices").get<std::vector<std::string>>();
    if (vs.size() != g.size()) throw InvalidInput("graph JSON has the wrong vertex count");
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (BitVertex::parse(vs[i]) != g.vertex(i)) throw InvalidInput("graph JSON vertices are not in lexicographic order");
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : j.at("edges")) {
      auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
      if (a >= g.size() || b >= g.size()) throw InvalidInput("graph JSON edge index out of range");
      edges.emplace(std::min(a, b), std::max(a, b));
    }
    const auto expect = g.edges();
    if (edges != std::set<std::pair<std::size_t, std::size_t>>(expect.begin(), expect.end()))
      throw InvalidInput("graph JSON edge list disagrees with the comparability rule");
    return g;
  });
}

std::string graph_to_dot(const ArtinGraph& g) {
  std::ostringstream s;
  s << "graph gamma" << g.k() << " {\n";
  for (std::size_t i = 0; i < g.size(); ++i) s << "  v" << i << " [label=\"" << g.vertex(i).str() << "\"];\n";
  for (const auto& [a, b] : g.edges()) s << "  v" << a << " -- v" << b << ";\n";
  s << "}\n";
  return s.str();
}

json matrix_to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(m.row_vector(i));
  return out;
}

IntMatrix matrix_from_json(const json& j) {
  return parse_guard("matrix", [&] {
    const auto rows = j.get<std::vector<IntVector>>();
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
      if (r.size() != cols) throw InvalidInput("matrix JSON rows have different lengths");
    return IntMatrix::from_rows(rows, cols);
  });
}

json lattice_to_json(const SkewLattice& l) {
  const ArtinGraph g(l.k);
  json j;
  j["k"] = l.k;
  j["basis"] = json::array();
  for (const auto& v : g.vertices()) j["basis"].push_back(v.str());
  j["gram"] = matrix_to_json(l.gram);
  j["rank"] = rank(l.gram);
  return j;
}

json quotient_to_json(const QuotientLattice& q) {
  json j;
  j["rank"] = q.rank;
  j["induced_gram"] = matrix_to_json(q.induced_gram);
  j["determinant"] = determinant(q.induced_gram);
  j["class_map"] = q.class_map;
  j["radical_basis"] = q.radical_basis;
  j["projection"] = matrix_to_json(q.projection);
  try {
    j["symplectic_basis"] = symplectic_basis(q);
  } catch (const DegenerateForm&) {
    j["symplectic_basis"] = nullptr;
  }
  return j;
}

json relation_report_to_json(const RelationReport& r, const ArtinGraph& g) {
  json j;
  j["sign"] = r.sign;
  j["pairs_checked"] = r.pairs_checked;
  j["triangles_checked"] = r.triangles_checked;
  j["triangles_both_orientations"] = r.triangles_both_orientations;
  j["failures"] = json::array();
  for (const auto& f : r.failures) j["failures"].push_back({{"vertices", word_to_json(f.vertices, g)}, {"relation", f.relation}});
  j["ok"] = r.ok();
  return j;
}

json witnesses_to_json(const std::vector<ConjugacyWitness>& ws, const ArtinGraph& g) {
  json out = json::array();
  for (const auto& w : ws)
    out.push_back({{"vertex", vertex_label(g, w.vertex)}, {"word", word_to_json(w.word, g)}, {"verified", w.verified}});
  return out;
}

json refinement_to_json(const QuadraticRefinement& qr, const ArtinGraph& g) {
  json j;
  j["rank"] = qr.rank();
  j["basis_vertices"] = json::array();
  for (auto v : qr.basis_vertices()) j["basis_vertices"].push_back(vertex_label(g, v));
  j["values"] = qr.values();
  return j;
}

json representation_to_json(const TransvectionRep& rep, const ArtinGraph& g) {
  json j;
  j["sign"] = rep.sign();
  j["transvections"] = json::object();
  for (std::size_t v = 0; v < rep.generator_count(); ++v)
    j["transvections"][vertex_label(g, v)] = matrix_to_json(rep.generator(v).entries());
  return j;
}

json pattern_to_json(const CurvePattern& p) {
  json j;
  j["curves"] = p.curves();
  j["intersections"] = json::array();
  for (const auto& [a, b] : p.crossings()) j["intersections"].push_back({p.label(a), p.label(b)});
  if (!p.vertices().empty()) {
    j["vertices"] = json::object();
    for (const auto& [l, v] : p.vertices()) j["vertices"][l] = v.str();
  }
  return j;
}

CurvePattern pattern_from_json(const json& j) {
  return parse_guard("pattern", [&] {
    auto curves = j.at("curves").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& e : j.at("intersections")) {
      if (!e.is_array() || e.size() != 2) throw InvalidInput("each intersection must be a pair of labels");
      pairs.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    }
    std::set<std::string> distinct(curves.begin(), curves.end());
    if (distinct.size() != curves.size()) throw InvalidInput("pattern JSON repeats a curve label");
    CurvePattern p = CurvePattern::from_pairs(std::move(curves), pairs);
    if (j.contains("vertices"))
      for (const auto& [l, v] : j.at("vertices").items()) {
        p.index(l);
        p.set_vertex(l, BitVertex::parse(v.get<std::string>()));
      }
    return p;
  });
}

json structure_to_json(const CurvePattern& p, const RibbonStructure& r) {
  require_consistent(p, r);
  json j;
  j["orders"] = json::object();
  for (std::size_t x = 0; x < p.size(); ++x) {
    json order = json::array();
    for (auto y : r.visit_order[x]) order.push_back(p.label(y));
    j["orders"][p.label(x)] = order;
  }
  j["bits"] = json::array();
  const auto cr = p.crossings();
  for (std::size_t c = 0; c < cr.size(); ++c)
    j["bits"].push_back({{"pair", {p.label(cr[c].first), p.label(cr[c].second)}}, {"bit", r.crossing_bits[c]}});
  return j;
}

RibbonStructure structure_from_json(const CurvePattern& p, const json& j) {
  return parse_guard("witness", [&] {
    RibbonStructure r;
    r.visit_order.resize(p.size());
    for (const auto& [l, order] : j.at("orders").items())
      for (const auto& y : order) r.visit_order[p.index(l)].push_back(p.index(y.get<std::string>()));
    const auto cr = p.crossings();
    r.crossing_bits.assign(cr.size(), 0);
    std::vector<char> seen(cr.size(), 0);
    for (const auto& b : j.at("bits")) {
      const std::size_t x = p.index(b.at("pair").at(0).get<std::string>());
      const std::size_t y = p.index(b.at("pair").at(1).get<std::string>());
      const auto key = std::make_pair(std::min(x, y), std::max(x, y));
      const auto it = std::find(cr.begin(), cr.end(), key);
      if (it == cr.end()) throw InvalidInput("witness bit names a non-crossing pair");
      const auto c = static_cast<std::size_t>(it - cr.begin());
      int bit = b.at("bit").get<int>();
      if (bit != 0 && bit != 1) throw InvalidInput("witness bits must be 0 or 1");
      if (x > y) bit ^= 1;
      r.crossing_bits[c] = static_cast<std::uint8_t>(bit);
      seen[c] = 1;
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw InvalidInput("witness is missing crossing bits");
    require_consistent(p, r);
    r.canonicalize();
    return r;
  });
}

json surface_to_json(const RibbonSurface& s) {
  json j;
  j["components"] = json::array();
  for (const auto& c : s.components)
    j["components"].push_back({{"euler_char", c.euler_char}, {"boundary_count", c.boundary_count}, {"genus", c.genus}, {"crossings", c.crossings}});
  j["genus"] = s.total_genus();
  j["boundary_count"] = s.total_boundary();
  j["euler_char"] = s.total_euler_char();
  return j;
}

json result_to_json(const CurvePattern& p, const MinGenusResult& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["genus"] = r.genus;
  j["budget"] = r.budget;
  j["lower_bound"] = r.lower_bound;
  j["exhausted"] = r.exhausted;
  j["nodes_explored"] = r.nodes_explored;
  j["tasks"] = r.tasks;
  j["tasks_from_cache"] = r.tasks_from_cache;
  j["wall_seconds"] = r.wall_seconds;
  j["witness"] = r.witness ? structure_to_json(p, *r.witness) : json(nullptr);
  return j;
}

json manifest_to_json(const RunManifest& m) {
  json j;
  j["command"] = m.command;
  j["parameters"] = m.parameters;
  j["toolkit_version"] = m.toolkit_version;
  j["input_hashes"] = m.input_hashes;
  j["wall_seconds"] = m.wall_seconds;
  j["verdicts"] = m.verdicts;
  return j;
}

std::string content_hash(const json& j) { return fnv1a_hex(j.dump()); }

}  // namespace cubmon

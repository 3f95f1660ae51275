#include "cubmon_tools/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "cubmon/artin_graph.hpp"
#include "cubmon/canonical.hpp"
#include "cubmon/errors.hpp"
#include "cubmon/milnor_lattice.hpp"
#include "cubmon/realizability.hpp"
#include "cubmon/ribbon.hpp"
#include "cubmon/serialization.hpp"
#include "cubmon/symplectic_rep.hpp"
#include "cubmon_tools/pipeline.hpp"

namespace cubmon::cli {

namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Common {
  bool json = false;
  unsigned k = 4;
  int sign = 1;
};

struct SearchOpts {
  std::string pattern;
  int budget = 5;
  unsigned threads = 1;
  std::string cache;
  bool resume = false;
  std::uint64_t node_limit = 0;
  std::uint64_t time_limit_ms = 0;
  std::string order = "given";
  std::vector<std::string> fix_orders;
  std::vector<std::string> fix_bits;
  std::string witness_out;
  std::string witness_in;
  std::optional<int> genus;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

json read_json_file(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw InvalidInput("cannot open " + p.string());
  const json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw InvalidInput(p.string() + " is not valid JSON");
  return j;
}

CurvePattern load_pattern(const std::string& source) {
  if (source.empty()) throw InvalidInput("--pattern is required");
  if (fs::exists(source)) return pattern_from_json(read_json_file(source));
  const std::string stem = fs::path(source).stem().string();
  const fs::path bundled = fs::path(CUBMON_DATA_DIR) / (stem + ".json");
  if (fs::exists(bundled)) return pattern_from_json(read_json_file(bundled));
  const auto names = canonical::bundled_pattern_names();
  if (std::find(names.begin(), names.end(), stem) != names.end()) return canonical::bundled_pattern(stem);
  throw InvalidInput("no pattern file or bundled pattern named " + source);
}

std::vector<BitVertex> parse_vertices(const std::string& csv, unsigned k) {
  std::vector<BitVertex> out;
  for (const auto& s : split(csv, ',')) {
    out.push_back(BitVertex::parse(s));
    if (out.back().k() != k) throw InvalidInput("vertex " + s + " does not have length " + std::to_string(k));
  }
  return out;
}

std::string bits_of(const std::vector<BitVertex>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : ",") + v.str();
  return s;
}

SearchConfig search_config(const SearchOpts& o) {
  SearchConfig c;
  c.threads = std::max(1u, o.threads);
  if (o.order == "degree") c.order = InsertionOrder::DegreeDescending;
  else if (o.order != "given") c.custom_order = split(o.order, ',');
  c.node_limit = o.node_limit;
  if (o.time_limit_ms) c.time_limit = std::chrono::milliseconds(o.time_limit_ms);
  for (const auto& item : o.fix_orders) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidInput("--fix-order expects CURVE:P1,P2,P3");
    c.fixed_cyclic_orders[item.substr(0, colon)] = split(item.substr(colon + 1), ',');
  }
  for (const auto& item : o.fix_bits) {
    const auto eq = item.find('=');
    const auto parts = split(item.substr(0, eq), ',');
    if (eq == std::string::npos || parts.size() != 2) throw InvalidInput("--fix-bit expects X,Y=BIT");
    c.fixed_bits[{parts[0], parts[1]}] = std::stoi(item.substr(eq + 1));
  }
  return c;
}

void attach_cache(SearchConfig& c, const SearchOpts& o, const CurvePattern& p) {
  if (!o.cache.empty()) {
    c.cache_path = o.cache;
  } else if (const char* dir = std::getenv("CUBMON_CACHE_DIR"); dir && *dir) {
    json key = pattern_to_json(p);
    key["budget"] = o.budget;
    c.cache_path = fs::path(dir) / ("search-" + content_hash(key) + ".jsonl");
  }
  c.resume = o.resume;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  // Prints either the text or the JSON form (with manifest) and returns the exit code.
  int emit(const std::string& command, const json& params, const json& result, const std::string& text, int code,
           const json& verdicts = json::object(), std::map<std::string, std::string> hashes = {}) {
    if (common.json) {
      RunManifest m;
      m.command = command;
      m.parameters = params;
      m.input_hashes = std::move(hashes);
      m.wall_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
      m.verdicts = verdicts;
      out_ << json{{"manifest", manifest_to_json(m)}, {"result", result}, {"exit_code", code}}.dump(2) << '\n';
    } else {
      out_ << text;
      if (!text.empty() && text.back() != '\n') out_ << '\n';
    }
    return code;
  }

  Common common;
  SearchOpts search;
  std::ostream& out_;
  std::ostream& err_;
  Clock::time_point start_ = Clock::now();
};

void add_search_options(CLI::App* sub, SearchOpts& s, bool full) {
  sub->add_option("--pattern", s.pattern, "pattern JSON file or bundled name (pair, chain7, cycle8, ten, eleven, twelve)")->required();
  if (!full) return;
  sub->add_option("--budget", s.budget, "genus budget");
  sub->add_option("--threads", s.threads, "worker threads");
  sub->add_option("--cache", s.cache, "search cache file (default: $CUBMON_CACHE_DIR/search-<hash>.jsonl)");
  sub->add_flag("--resume", s.resume, "reuse finished tasks from the cache");
  sub->add_option("--node-limit", s.node_limit, "stop after this many nodes (0 = none)");
  sub->add_option("--time-limit-ms", s.time_limit_ms, "stop after this many milliseconds (0 = none)");
  sub->add_option("--order", s.order, "insertion order: given, degree, or a comma-separated label list");
  sub->add_option("--fix-order", s.fix_orders, "CURVE:P1,P2,P3 cyclic sub-order constraint (repeatable)");
  sub->add_option("--fix-bit", s.fix_bits, "X,Y=BIT crossing constraint (repeatable)");
  sub->add_option("--witness-out", s.witness_out, "write the witness structure as JSON");
}

json search_params(const SearchOpts& s) {
  return {{"pattern", s.pattern}, {"budget", s.budget}, {"threads", s.threads}, {"cache", s.cache}, {"resume", s.resume},
          {"node_limit", s.node_limit}, {"time_limit_ms", s.time_limit_ms}, {"order", s.order},
          {"fix_order", s.fix_orders}, {"fix_bit", s.fix_bits}};
}

std::string format_surface(const RibbonSurface& s) {
  std::ostringstream t;
  t << "genus " << s.total_genus() << ", boundary components " << s.total_boundary() << ", euler characteristic "
    << s.total_euler_char() << "\n";
  for (std::size_t i = 0; i < s.components.size(); ++i) {
    const auto& c = s.components[i];
    t << "  component " << i << ": crossings " << c.crossings << ", chi " << c.euler_char << ", b " << c.boundary_count
      << ", g " << c.genus << "\n";
  }
  return t.str();
}

std::string format_structure(const CurvePattern& p, const RibbonStructure& r) {
  std::ostringstream t;
  for (std::size_t x = 0; x < p.size(); ++x) {
    t << "  " << p.label(x) << ":";
    for (auto y : r.visit_order[x]) t << ' ' << p.label(y);
    t << "\n";
  }
  t << "  bits:";
  const auto cr = p.crossings();
  for (std::size_t c = 0; c < cr.size(); ++c) t << ' ' << p.label(cr[c].first) << '-' << p.label(cr[c].second) << '=' << int(r.crossing_bits[c]);
  t << "\n";
  return t.str();
}

void write_witness(const std::string& path, const CurvePattern& p, const RibbonStructure& r) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw InvalidInput("cannot write " + path);
  f << structure_to_json(p, r).dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner r(out, err);
  CLI::App app{"cubmon: Artin graph, vanishing lattice, transvection and curve-realizability checks"};
  app.name("cubmon");
  app.require_subcommand(1);
  app.add_flag("--json", r.common.json, "emit JSON with a run manifest");
  app.set_version_flag("--version", std::string(version()));

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> f) {
    sub->add_flag("--json", r.common.json, "emit JSON with a run manifest");
    sub->callback([&action, f] { action = f; });
  };
  auto with_k = [&](CLI::App* sub) { sub->add_option("--k", r.common.k, "dimension of the bit tuples")->check(CLI::Range(1, 8)); };

  // gamma
  auto* gamma = app.add_subcommand("gamma", "the comparability graph on {0,1}^k");
  gamma->require_subcommand(1);
  std::string format = "json";
  auto* gexport = gamma->add_subcommand("export", "JSON or DOT export");
  with_k(gexport);
  gexport->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  on(gexport, [&] {
    const ArtinGraph g(r.common.k);
    if (format == "dot" && !r.common.json) return r.emit("gamma export", {}, {}, graph_to_dot(g), kOk);
    return r.emit("gamma export", {{"k", r.common.k}}, graph_to_json(g), graph_to_json(g).dump(), kOk);
  });
  auto* gstats = gamma->add_subcommand("stats", "vertex, edge and extremal counts");
  with_k(gstats);
  on(gstats, [&] {
    const ArtinGraph g(r.common.k);
    const auto ex = extremal_vertices(g);
    bool agree = true;
    for (const auto& u : g.vertices())
      for (const auto& v : g.vertices()) agree = agree && edge_by_sign_pairs(u, v) == edge_by_comparability(u, v);
    json degrees = json::object();
    for (std::size_t i = 0; i < g.size(); ++i) degrees[g.vertex(i).str()] = g.degree(i);
    json res{{"k", g.k()}, {"vertices", g.size()}, {"edges", g.edge_count()}, {"extremal", bits_of(ex)}, {"rules_agree", agree}, {"degrees", degrees}};
    std::ostringstream t;
    t << "k = " << g.k() << ": " << g.size() << " vertices, " << g.edge_count() << " edges\n"
      << "extremal: " << bits_of(ex) << "\nedge rules agree: " << (agree ? "yes" : "no") << "\n";
    return r.emit("gamma stats", {{"k", r.common.k}}, res, t.str(), agree ? kOk : kCheckFailed);
  });

  // lattice
  auto* lattice = app.add_subcommand("lattice", "the skew vanishing-cycle lattice and its quotient");
  lattice->require_subcommand(1);
  auto* lgram = lattice->add_subcommand("gram", "the skew Gram matrix");
  with_k(lgram);
  on(lgram, [&] {
    const auto l = gram_matrix(r.common.k);
    std::ostringstream t;
    for (std::size_t i = 0; i < l.gram.rows(); ++i) {
      for (std::size_t j = 0; j < l.gram.cols(); ++j) t << (j ? " " : "") << (l.gram(i, j) >= 0 ? " " : "") << l.gram(i, j);
      t << "\n";
    }
    t << "rank " << rank(l.gram) << "\n";
    return r.emit("lattice gram", {{"k", r.common.k}}, lattice_to_json(l), t.str(), kOk);
  });
  auto* lrad = lattice->add_subcommand("radical", "Hermite-reduced basis of the integer kernel");
  with_k(lrad);
  on(lrad, [&] {
    const auto rad = radical(gram_matrix(r.common.k));
    std::ostringstream t;
    t << "radical rank " << rad.size() << "\n";
    for (const auto& v : rad) t << "  " << json(v).dump() << "\n";
    return r.emit("lattice radical", {{"k", r.common.k}}, json{{"rank", rad.size()}, {"basis", rad}}, t.str(), kOk);
  });
  auto* lquot = lattice->add_subcommand("quotient", "quotient by the radical with class map and symplectic basis");
  with_k(lquot);
  on(lquot, [&] {
    const auto q = quotient_lattice(gram_matrix(r.common.k));
    const json j = quotient_to_json(q);
    std::ostringstream t;
    t << "quotient rank " << q.rank << ", det " << j["determinant"] << "\nclass map:\n";
    const ArtinGraph g(r.common.k);
    for (std::size_t v = 0; v < q.class_map.size(); ++v) t << "  " << g.vertex(v).str() << " -> " << json(q.class_map[v]).dump() << "\n";
    const auto det = j["determinant"].get<std::int64_t>();
    return r.emit("lattice quotient", {{"k", r.common.k}}, j, t.str(), (det == 1 || det == -1) ? kOk : kCheckFailed);
  });
  std::string subset;
  bool non_extremal = false;
  auto* lrank = lattice->add_subcommand("rank", "rank of the span of selected classes");
  with_k(lrank);
  lrank->add_option("--subset", subset, "comma-separated bit strings (default: all)");
  lrank->add_flag("--non-extremal", non_extremal, "use every non-extremal vertex");
  on(lrank, [&] {
    const ArtinGraph g(r.common.k);
    const auto q = quotient_lattice(gram_matrix(r.common.k));
    std::vector<std::size_t> idx;
    if (!subset.empty()) {
      for (const auto& v : parse_vertices(subset, r.common.k)) idx.push_back(g.index_of(v));
    } else {
      for (std::size_t i = 0; i < g.size(); ++i)
        if (!non_extremal || !is_extremal(g, g.vertex(i))) idx.push_back(i);
    }
    const auto rk = sublattice_rank(q, idx);
    return r.emit("lattice rank", {{"k", r.common.k}, {"subset", subset}, {"non_extremal", non_extremal}},
                  json{{"classes", idx.size()}, {"rank", rk}}, "rank " + std::to_string(rk) + " from " + std::to_string(idx.size()) + " classes\n", kOk);
  });

  // rep
  auto* rep = app.add_subcommand("rep", "the transvection representation on the quotient");
  rep->require_subcommand(1);
  auto with_sign = [&](CLI::App* sub) { sub->add_option("--sign", r.common.sign, "transvection sign, 1 or -1")->check(CLI::IsMember({1, -1})); };
  auto* rrel = rep->add_subcommand("check-relations", "braid/commutation relations on all pairs and triangle identities");
  with_sign(rrel);
  on(rrel, [&] {
    const ArtinGraph g(4);
    const auto q = quotient_lattice(gram_matrix(4));
    const TransvectionRep t(q, r.common.sign);
    const auto rel = verify_all_relations(t, g);
    std::ostringstream s;
    s << "sign " << rel.sign << ": " << rel.pairs_checked << " pairs, " << rel.triangles_checked << " triangles, "
      << rel.failures.size() << " failures\n";
    for (const auto& f : rel.failures) s << "  " << f.relation << "\n";
    return r.emit("rep check-relations", {{"sign", r.common.sign}}, relation_report_to_json(rel, g), s.str(), rel.ok() ? kOk : kCheckFailed);
  });
  auto* rwit = rep->add_subcommand("witnesses", "conjugacy witnesses along a spanning tree rooted at 0000");
  with_sign(rwit);
  on(rwit, [&] {
    const ArtinGraph g(4);
    const auto q = quotient_lattice(gram_matrix(4));
    const TransvectionRep t(q, r.common.sign);
    const auto ws = conjugacy_witnesses(t, g);
    bool ok = ws.size() == g.size();
    std::ostringstream s;
    for (const auto& w : ws) {
      ok = ok && w.verified;
      s << g.vertex(w.vertex).str() << (w.verified ? " ok  " : " BAD ") << "[";
      for (std::size_t i = 0; i < w.word.size(); ++i) s << (i ? " " : "") << g.vertex(w.word[i]).str();
      s << "]\n";
    }
    return r.emit("rep witnesses", {{"sign", r.common.sign}}, witnesses_to_json(ws, g), s.str(), ok ? kOk : kCheckFailed);
  });
  auto* rq = rep->add_subcommand("qform", "quadratic refinement preserved by every generator");
  with_sign(rq);
  on(rq, [&] {
    const ArtinGraph g(4);
    const auto q = quotient_lattice(gram_matrix(4));
    const auto qr = quadratic_refinement(q);
    const bool quadratic = refinement_is_quadratic(q, qr);
    const auto moved = refinement_violations(q, qr);
    bool ones = true;
    for (const auto& a : q.class_map) ones = ones && qr.value(mod2_vector(a)) == 1;
    json j = refinement_to_json(qr, g);
    j["quadratic"] = quadratic;
    j["vanishing_classes_one"] = ones;
    j["violating_generators"] = moved;
    std::ostringstream s;
    s << "q defined on " << qr.values().size() << " vectors; quadratic: " << (quadratic ? "yes" : "no")
      << "; q(a_v) = 1 for all v: " << (ones ? "yes" : "no") << "; generators moving q: " << moved.size() << "\n";
    return r.emit("rep qform", {}, j, s.str(), quadratic && ones && moved.empty() ? kOk : kCheckFailed);
  });
  std::string seed;
  auto* rirr = rep->add_subcommand("irreducible", "invariant span closure from generator directions");
  with_sign(rirr);
  rirr->add_option("--seed", seed, "comma-separated seed vertices (default: each vertex on its own)");
  on(rirr, [&] {
    const ArtinGraph g(4);
    const auto q = quotient_lattice(gram_matrix(4));
    const TransvectionRep t(q, r.common.sign);
    json res = json::object();
    bool ok = true;
    std::ostringstream s;
    if (!seed.empty()) {
      std::vector<IntVector> seeds;
      for (const auto& v : parse_vertices(seed, 4)) seeds.push_back(q.class_map[g.index_of(v)]);
      const auto d = invariant_span_closure(t, seeds);
      res[seed] = d;
      ok = d == q.rank;
      s << "closure of {" << seed << "}: " << d << "\n";
    } else {
      for (std::size_t v = 0; v < g.size(); ++v) {
        const auto d = invariant_span_closure(t, {q.class_map[v]});
        res[g.vertex(v).str()] = d;
        ok = ok && d == q.rank;
        s << g.vertex(v).str() << ": " << d << "\n";
      }
    }
    return r.emit("rep irreducible", {{"sign", r.common.sign}, {"seed", seed}}, res, s.str(), ok ? kOk : kCheckFailed);
  });
  auto* rpar = rep->add_subcommand("parity", "a1 + a3 + a5 + a7 along the braid chain paired with a(0111)");
  on(rpar, [&] {
    const auto q = quotient_lattice(gram_matrix(4));
    const auto cp = chain_parity_check(q);
    json j{{"nonzero", cp.nonzero}, {"parity", cp.parity}, {"sum", cp.sum}};
    std::ostringstream s;
    s << "nonzero: " << (cp.nonzero ? "true" : "false") << ", parity: " << cp.parity << "\n";
    return r.emit("rep parity", {}, j, s.str(), cp.nonzero && cp.parity == 1 ? kOk : kCheckFailed);
  });

  // chains
  auto* chains = app.add_subcommand("chains", "induced chains and cycles in the graph");
  chains->require_subcommand(1);
  std::string seq;
  bool cycle = false;
  auto* cver = chains->add_subcommand("verify", "check a vertex sequence is an induced path (or cycle)");
  with_k(cver);
  cver->add_option("--seq", seq, "comma-separated bit strings")->required();
  cver->add_flag("--cycle", cycle, "check an induced cycle instead");
  on(cver, [&] {
    const ArtinGraph g(r.common.k);
    const auto vs = parse_vertices(seq, r.common.k);
    if (cycle) {
      const bool ok = verify_induced_cycle(g, vs);
      return r.emit("chains verify", {{"seq", seq}, {"cycle", true}}, json{{"is_induced_cycle", ok}},
                    std::string("is_induced_cycle=") + (ok ? "true" : "false"), ok ? kOk : kCheckFailed);
    }
    const auto rep = verify_chain(g, vs);
    json viol = json::array();
    std::ostringstream s;
    s << "is_chain=" << (rep.is_chain ? "true" : "false") << "\n";
    for (const auto& v : rep.violations) {
      viol.push_back({{"pair", {v.first, v.second}}, {"reason", std::string(to_string(v.kind))}});
      s << "  " << to_string(v.kind) << " (" << v.first << "," << v.second << ")\n";
    }
    return r.emit("chains verify", {{"seq", seq}}, json{{"sequence", seq}, {"is_chain", rep.is_chain}, {"violations", viol}}, s.str(),
                  rep.is_chain ? kOk : kCheckFailed);
  });
  std::size_t length = 7;
  bool avoid = false;
  auto* cenum = chains->add_subcommand("enumerate", "all induced paths with a given number of vertices");
  with_k(cenum);
  cenum->add_option("--length", length, "number of vertices")->check(CLI::PositiveNumber);
  cenum->add_flag("--avoid-extremal", avoid, "skip paths through extremal vertices");
  on(cenum, [&] {
    const ArtinGraph g(r.common.k);
    const auto paths = enumerate_induced_paths(g, length, avoid);
    json j = json::array();
    std::ostringstream s;
    for (const auto& p : paths) {
      j.push_back(bits_of(p));
      s << bits_of(p) << "\n";
    }
    s << paths.size() << " paths\n";
    return r.emit("chains enumerate", {{"k", r.common.k}, {"length", length}, {"avoid_extremal", avoid}}, json{{"count", paths.size()}, {"paths", j}},
                  s.str(), kOk);
  });
  std::string chain_seq;
  auto* cwit = chains->add_subcommand("witnesses", "commuting partners along the braid chain for every vertex");
  cwit->add_option("--chain", chain_seq, "chain to use (default: the seven-vertex braid chain)");
  on(cwit, [&] {
    const ArtinGraph g(4);
    const auto chain = chain_seq.empty() ? canonical::braid_chain() : parse_vertices(chain_seq, 4);
    json j = json::object();
    std::ostringstream s;
    bool ok = true;
    for (const auto& v : g.vertices()) {
      const auto w = commuting_partner_witness(g, chain, v);
      const bool extremal = is_extremal(g, v);
      ok = ok && (w.has_value() != extremal);
      j[v.str()] = w ? json(*w) : json(nullptr);
      s << v.str() << ": " << (w ? "position " + std::to_string(*w) + " (" + chain.at(*w - 1).str() + ")" : std::string("none")) << "\n";
    }
    return r.emit("chains witnesses", {{"chain", bits_of(chain)}}, j, s.str(), ok ? kOk : kCheckFailed);
  });

  // realize
  auto* realize = app.add_subcommand("realize", "curve patterns and their minimal neighbourhood genus");
  realize->require_subcommand(1);
  auto* rval = realize->add_subcommand("validate", "check a pattern is usable");
  add_search_options(rval, r.search, false);
  on(rval, [&] {
    const auto p = load_pattern(r.search.pattern);
    const auto issues = validate_pattern(p);
    json j = json::array();
    std::ostringstream s;
    for (const auto& i : issues) {
      json e{{"message", i.message}};
      if (i.row) e["row"] = *i.row;
      if (i.col) e["col"] = *i.col;
      j.push_back(e);
      s << i.message << "\n";
    }
    if (issues.empty()) s << "ok: " << p.size() << " curves, " << p.crossing_count() << " crossings\n";
    return r.emit("realize validate", {{"pattern", r.search.pattern}}, json{{"ok", issues.empty()}, {"issues", j}}, s.str(),
                  issues.empty() ? kOk : kInvalidInput, {}, {{"pattern", content_hash(pattern_to_json(p))}});
  });
  auto* rbound = realize->add_subcommand("bound", "F2 rank lower bound on the genus");
  add_search_options(rbound, r.search, false);
  on(rbound, [&] {
    const auto p = load_pattern(r.search.pattern);
    require_valid(p);
    const auto rk = f2_rank(p);
    const int lb = f2_genus_lower_bound(p);
    return r.emit("realize bound", {{"pattern", r.search.pattern}}, json{{"f2_rank", rk}, {"lower_bound", lb}},
                  "F2 rank " + std::to_string(rk) + ", genus >= " + std::to_string(lb) + "\n", kOk, {},
                  {{"pattern", content_hash(pattern_to_json(p))}});
  });
  auto* rmin = realize->add_subcommand("min-genus", "exact minimal genus, or a certified excess over the budget");
  add_search_options(rmin, r.search, true);
  on(rmin, [&] {
    const auto p = load_pattern(r.search.pattern);
    SearchConfig c = search_config(r.search);
    attach_cache(c, r.search, p);
    const auto res = min_genus(p, r.search.budget, c);
    if (res.witness) write_witness(r.search.witness_out, p, *res.witness);
    std::ostringstream s;
    s << to_string(res.verdict) << "(" << res.genus << ")  exhausted=" << (res.exhausted ? "true" : "false")
      << "  lower_bound=" << res.lower_bound << "  nodes=" << res.nodes_explored << "  tasks=" << res.tasks
      << " (cached " << res.tasks_from_cache << ")\n";
    if (res.witness) s << "witness:\n" << format_structure(p, *res.witness);
    return r.emit("realize min-genus", search_params(r.search), result_to_json(p, res), s.str(), kOk,
                  json{{"min_genus", to_string(res.verdict) + "(" + std::to_string(res.genus) + ")"}},
                  {{"pattern", content_hash(pattern_to_json(p))}});
  });
  auto* rcheck = realize->add_subcommand("check", "trace a witness, or decide realizability on a genus");
  add_search_options(rcheck, r.search, true);
  rcheck->add_option("--witness", r.search.witness_in, "witness JSON to trace");
  rcheck->add_option("--genus", r.search.genus, "target genus");
  on(rcheck, [&] {
    const auto p = load_pattern(r.search.pattern);
    require_valid(p);
    json params = search_params(r.search);
    params["witness"] = r.search.witness_in;
    params["genus"] = r.search.genus ? json(*r.search.genus) : json(nullptr);
    if (!r.search.witness_in.empty()) {
      const auto w = structure_from_json(p, read_json_file(r.search.witness_in));
      const auto surf = surface_of(p, w);
      const bool fits = !r.search.genus || surf.total_genus() <= *r.search.genus;
      json j = surface_to_json(surf);
      j["fits"] = fits;
      return r.emit("realize check", params, j, format_surface(surf), fits ? kOk : kCheckFailed, {},
                    {{"pattern", content_hash(pattern_to_json(p))}});
    }
    if (!r.search.genus) throw InvalidInput("realize check needs --witness or --genus");
    SearchConfig c = search_config(r.search);
    r.search.budget = *r.search.genus;
    attach_cache(c, r.search, p);
    const auto res = is_realizable(p, *r.search.genus, c);
    if (res.witness) write_witness(r.search.witness_out, p, *res.witness);
    json j{{"realizable", res.realizable}, {"search", result_to_json(p, res.search)}};
    std::ostringstream s;
    s << "realizable on genus " << *r.search.genus << ": " << (res.realizable ? "true" : "false") << "\n";
    if (res.witness) s << "witness:\n" << format_structure(p, *res.witness);
    return r.emit("realize check", params, j, s.str(), kOk, json{{"realizable", res.realizable}},
                  {{"pattern", content_hash(pattern_to_json(p))}});
  });

  // verify-paper
  pipeline::Options popts;
  std::string cache_dir;
  bool skip_main = false;
  auto* vp = app.add_subcommand("verify-paper", "run every check in order and print a scoreboard");
  vp->add_option("--threads", popts.threads, "worker threads for the searches");
  vp->add_option("--cache-dir", cache_dir, "directory for resumable search caches (default: $CUBMON_CACHE_DIR)");
  vp->add_flag("--skip-main", skip_main, "skip the long realizability searches");
  on(vp, [&] {
    if (cache_dir.empty())
      if (const char* dir = std::getenv("CUBMON_CACHE_DIR"); dir && *dir) cache_dir = dir;
    if (!cache_dir.empty()) popts.cache_dir = cache_dir;
    popts.include_main = !skip_main;
    const auto outcome = pipeline::run(popts);
    const int code = outcome.all_pass() ? kOk : (outcome.inconclusive ? kInconclusive : kCheckFailed);
    json verdicts = json::object();
    for (const auto& row : outcome.rows) verdicts[row.name] = row.pass;
    return r.emit("verify-paper", {{"threads", popts.threads}, {"cache_dir", cache_dir}, {"skip_main", skip_main}},
                  json{{"checks", pipeline::rows_to_json(outcome.rows)}, {"all_pass", outcome.all_pass()}}, pipeline::scoreboard(outcome.rows),
                  code, verdicts);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  if (!action) {
    out << app.help();
    return kInvalidInput;
  }
  try {
    return action();
  } catch (const Inconclusive& e) {
    err << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const DegenerateForm& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const ConstructionFailed& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace cubmon::cli

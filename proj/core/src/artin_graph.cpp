#include "cubmon/artin_graph.hpp"

#include <algorithm>
#include <bit>

#include "cubmon/errors.hpp"

namespace cubmon {

BitVertex::BitVertex(unsigned k, std::uint32_t mask) : k_(k), mask_(mask) {
  if (k == 0 || k > 31) throw InvalidInput("bit vertex dimension out of range");
  if (mask >> k) throw InvalidInput("bit vertex mask exceeds dimension");
}

BitVertex BitVertex::parse(std::string_view bits) {
  if (bits.empty()) throw InvalidInput("empty bit string");
  std::uint32_t mask = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw InvalidInput("bit string must contain only 0 and 1: " + std::string(bits));
    mask = (mask << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BitVertex(static_cast<unsigned>(bits.size()), mask);
}

std::string BitVertex::str() const {
  std::string s(k_, '0');
  for (unsigned mu = 0; mu < k_; ++mu) s[mu] = static_cast<char>('0' + bit(mu));
  return s;
}

bool BitVertex::below_or_equal(const BitVertex& other) const { return (mask_ & ~other.mask_) == 0; }

namespace {

void require_same_dimension(const BitVertex& u, const BitVertex& v) {
  if (u.k() != v.k()) throw InvalidInput("bit vertices of different dimension: " + u.str() + ", " + v.str());
}

}  // namespace

bool edge_by_sign_pairs(const BitVertex& u, const BitVertex& v) {
  require_same_dimension(u, v);
  if (u == v) return false;
  for (unsigned mu = 0; mu < u.k(); ++mu)
    for (unsigned nu = 0; nu < u.k(); ++nu)
      if ((u.bit(mu) - v.bit(mu)) * (u.bit(nu) - v.bit(nu)) < 0) return false;
  return true;
}

bool edge_by_comparability(const BitVertex& u, const BitVertex& v) {
  require_same_dimension(u, v);
  return u != v && (u.below_or_equal(v) || v.below_or_equal(u));
}

ArtinGraph::ArtinGraph(unsigned k) : k_(k) {
  if (k < 1 || k > kMaxDimension) throw InvalidInput("k must lie in [1, 8]");
  const std::size_t n = std::size_t{1} << k;
  vertices_.reserve(n);
  for (std::uint32_t m = 0; m < n; ++m) vertices_.emplace_back(k, m);
  adj_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj_[i * n + j] = edge_by_comparability(vertices_[i], vertices_[j]);
}

std::size_t ArtinGraph::index_of(const BitVertex& v) const {
  if (v.k() != k_) throw InvalidInput("vertex " + v.str() + " does not belong to the graph on {0,1}^" + std::to_string(k_));
  return v.mask();
}

bool ArtinGraph::is_edge(const BitVertex& u, const BitVertex& v) const { return adjacent(index_of(u), index_of(v)); }

std::size_t ArtinGraph::degree(std::size_t i) const {
  const std::size_t n = size();
  return static_cast<std::size_t>(std::count(adj_.begin() + static_cast<std::ptrdiff_t>(i * n),
                                             adj_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n), 1));
}

std::vector<std::pair<std::size_t, std::size_t>> ArtinGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

std::size_t ArtinGraph::edge_count() const { return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2; }

std::vector<BitVertex> extremal_vertices(const ArtinGraph& g) {
  std::vector<BitVertex> out;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.degree(i) + 1 == g.size()) out.push_back(g.vertex(i));
  return out;
}

bool is_extremal(const ArtinGraph& g, const BitVertex& v) { return g.degree(g.index_of(v)) + 1 == g.size(); }

std::string_view to_string(ChainViolationKind kind) {
  switch (kind) {
    case ChainViolationKind::MissingEdge: return "missing-edge";
    case ChainViolationKind::Chord: return "chord";
    case ChainViolationKind::Repeat: return "repeat";
  }
  return "unknown";
}

ChainReport verify_chain(const ArtinGraph& g, const std::vector<BitVertex>& seq) {
  ChainReport report{seq, false, {}};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const std::size_t a = g.index_of(seq[i]);
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      const std::size_t b = g.index_of(seq[j]);
      if (a == b) {
        report.violations.push_back({i, j, ChainViolationKind::Repeat});
      } else if (j == i + 1 && !g.adjacent(a, b)) {
        report.violations.push_back({i, j, ChainViolationKind::MissingEdge});
      } else if (j > i + 1 && g.adjacent(a, b)) {
        report.violations.push_back({i, j, ChainViolationKind::Chord});
      }
    }
  }
  report.is_chain = report.violations.empty();
  return report;
}

bool verify_induced_cycle(const ArtinGraph& g, const std::vector<BitVertex>& seq) {
  const std::size_t n = seq.size();
  if (n < 3) throw InvalidInput("an induced cycle needs at least 3 vertices");
  std::vector<std::size_t> idx;
  for (const auto& v : seq) idx.push_back(g.index_of(v));
  auto sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InvalidInput("cycle vertices must be distinct");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
      if (g.adjacent(idx[i], idx[j]) != consecutive) return false;
    }
  return true;
}

namespace {

void extend_paths(const ArtinGraph& g, std::size_t length, const std::vector<char>& allowed,
                  std::vector<std::size_t>& path, std::vector<char>& used,
                  std::vector<std::vector<std::size_t>>& out) {
  if (path.size() == length) {
    if (path.front() <= path.back()) out.push_back(path);
    return;
  }
  const std::size_t last = path.back();
  for (std::size_t w = 0; w < g.size(); ++w) {
    if (!allowed[w] || used[w] || !g.adjacent(last, w)) continue;
    bool induced = true;
    for (std::size_t t = 0; t + 1 < path.size(); ++t)
      if (g.adjacent(path[t], w)) {
        induced = false;
        break;
      }
    if (!induced) continue;
    path.push_back(w);
    used[w] = 1;
    extend_paths(g, length, allowed, path, used, out);
    used[w] = 0;
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<BitVertex>> enumerate_induced_paths(const ArtinGraph& g, std::size_t length,
                                                            bool avoid_extremal) {
  if (length == 0) throw InvalidInput("path length must be at least 1");
  std::vector<char> allowed(g.size(), 1);
  if (avoid_extremal)
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g.degree(i) + 1 == g.size()) allowed[i] = 0;

  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> path;
  std::vector<char> used(g.size(), 0);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (!allowed[s]) continue;
    path.assign(1, s);
    used[s] = 1;
    extend_paths(g, length, allowed, path, used, found);
    used[s] = 0;
  }
  std::sort(found.begin(), found.end());
  std::vector<std::vector<BitVertex>> out;
  out.reserve(found.size());
  for (const auto& p : found) {
    std::vector<BitVertex> vs;
    for (auto i : p) vs.push_back(g.vertex(i));
    out.push_back(std::move(vs));
  }
  return out;
}

std::optional<std::size_t> commuting_partner_witness(const ArtinGraph& g, const std::vector<BitVertex>& chain,
                                                     const BitVertex& v, const std::vector<std::size_t>& positions) {
  const std::size_t vi = g.index_of(v);
  auto sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t pos : sorted) {
    if (pos == 0 || pos > chain.size()) continue;
    const std::size_t ci = g.index_of(chain[pos - 1]);
    if (ci != vi && !g.adjacent(vi, ci)) return pos;
  }
  return std::nullopt;
}

}  // namespace cubmon

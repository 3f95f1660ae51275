#include "cubmon/ribbon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "cubmon/errors.hpp"

namespace cubmon {

void RibbonStructure::canonicalize() {
  for (auto& order : visit_order) {
    if (order.empty()) continue;
    auto lowest = std::min_element(order.begin(), order.end());
    std::rotate(order.begin(), lowest, order.end());
  }
}

int RibbonSurface::total_genus() const {
  int g = 0;
  for (const auto& c : components) g += c.genus;
  return g;
}

int RibbonSurface::total_boundary() const {
  int b = 0;
  for (const auto& c : components) b += c.boundary_count;
  return b;
}

int RibbonSurface::total_euler_char() const {
  int e = 0;
  for (const auto& c : components) e += c.euler_char;
  return e;
}

void require_consistent(const CurvePattern& p, const RibbonStructure& r) {
  if (r.visit_order.size() != p.size()) throw InvalidInput("ribbon structure has the wrong number of curves");
  if (r.crossing_bits.size() != p.crossing_count()) throw InvalidInput("ribbon structure has the wrong number of crossing bits");
  for (auto b : r.crossing_bits)
    if (b > 1) throw InvalidInput("crossing bits must be 0 or 1");
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::vector<std::size_t> expect;
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.intersection(x, y) != 0) expect.push_back(y);
    auto got = r.visit_order[x];
    std::sort(got.begin(), got.end());
    if (got != expect) throw InvalidInput("visit order of curve " + p.label(x) + " is not a permutation of its crossings");
  }
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

RibbonSurface surface_of(const CurvePattern& p, const RibbonStructure& r) {
  require_consistent(p, r);
  const auto cr = p.crossings();
  const std::size_t nc = cr.size();
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> cid;
  for (std::size_t c = 0; c < nc; ++c) cid[cr[c]] = c;
  auto crossing_of = [&](std::size_t x, std::size_t y) { return cid.at({std::min(x, y), std::max(x, y)}); };
  // half-edge = 4c + 2*role + dir; role 0 = lower-index curve, dir 0 = in, 1 = out
  auto half = [&](std::size_t c, std::size_t curve, int dir) {
    const std::size_t role = (cr[c].first == curve) ? 0 : 1;
    return 4 * c + 2 * role + static_cast<std::size_t>(dir);
  };

  std::vector<std::size_t> arc(4 * nc), rot(4 * nc);
  UnionFind uf(nc);
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto& order = r.visit_order[x];
    for (std::size_t t = 0; t < order.size(); ++t) {
      const std::size_t c0 = crossing_of(x, order[t]);
      const std::size_t c1 = crossing_of(x, order[(t + 1) % order.size()]);
      const std::size_t out = half(c0, x, 1);
      const std::size_t in = half(c1, x, 0);
      arc[out] = in;
      arc[in] = out;
      uf.unite(c0, c1);
    }
  }
  for (std::size_t c = 0; c < nc; ++c) {
    const std::size_t xi = 4 * c, xo = 4 * c + 1, yi = 4 * c + 2, yo = 4 * c + 3;
    const std::size_t cyc0[4] = {xo, yo, xi, yi};
    const std::size_t cyc1[4] = {xo, yi, xi, yo};
    const std::size_t* cyc = r.crossing_bits[c] ? cyc1 : cyc0;
    for (int t = 0; t < 4; ++t) rot[cyc[t]] = cyc[(t + 1) % 4];
  }

  std::map<std::size_t, SurfaceComponent> comps;  // keyed by union-find root
  std::map<std::size_t, std::size_t> first_curve;
  for (std::size_t c = 0; c < nc; ++c) {
    auto& comp = comps[uf.find(c)];
    ++comp.crossings;
    auto [it, inserted] = first_curve.emplace(uf.find(c), cr[c].first);
    if (!inserted) it->second = std::min(it->second, cr[c].first);
  }
  std::vector<char> seen(4 * nc, 0);
  for (std::size_t h = 0; h < 4 * nc; ++h) {
    if (seen[h]) continue;
    ++comps[uf.find(h / 4)].boundary_count;
    for (std::size_t x = h; !seen[x]; x = rot[arc[x]]) seen[x] = 1;
  }

  std::vector<std::pair<std::size_t, SurfaceComponent>> ordered;
  for (auto& [root, comp] : comps) {
    comp.euler_char = -static_cast<int>(comp.crossings);  // V - E with E = 2V
    comp.genus = (2 - comp.euler_char - comp.boundary_count) / 2;
    ordered.emplace_back(first_curve[root], comp);
  }
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  RibbonSurface s;
  for (auto& [_, comp] : ordered) s.components.push_back(comp);
  return s;
}

RibbonStructure reversed(const RibbonStructure& r) {
  RibbonStructure out = r;
  for (auto& order : out.visit_order) std::reverse(order.begin(), order.end());
  out.canonicalize();
  return out;
}

RibbonStructure default_structure(const CurvePattern& p) {
  RibbonStructure r;
  for (std::size_t x = 0; x < p.size(); ++x) {
    std::vector<std::size_t> order;
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.intersection(x, y) != 0) order.push_back(y);
    r.visit_order.push_back(std::move(order));
  }
  r.crossing_bits.assign(p.crossing_count(), 0);
  return r;
}

RibbonStructure restrict_structure(const CurvePattern& p, const RibbonStructure& r, const std::vector<std::size_t>& keep) {
  std::vector<std::ptrdiff_t> new_index(p.size(), -1);
  for (std::size_t a = 0; a < keep.size(); ++a) new_index[keep[a]] = static_cast<std::ptrdiff_t>(a);
  RibbonStructure out;
  for (std::size_t a = 0; a < keep.size(); ++a) {
    std::vector<std::size_t> order;
    for (auto y : r.visit_order.at(keep[a]))
      if (new_index[y] >= 0) order.push_back(static_cast<std::size_t>(new_index[y]));
    out.visit_order.push_back(std::move(order));
  }
  const auto cr = p.crossings();
  const CurvePattern sub = p.restrict_to(keep);
  for (const auto& [i, j] : sub.crossings()) {
    const std::size_t x = keep[i], y = keep[j];
    const auto key = std::make_pair(std::min(x, y), std::max(x, y));
    const auto c = static_cast<std::size_t>(std::find(cr.begin(), cr.end(), key) - cr.begin());
    // Relabelling can swap which curve is the lower index; the rotation in
    // terms of (lower, upper) then changes to the other alternating one.
    std::uint8_t bit = r.crossing_bits.at(c);
    if (x > y) bit ^= 1;
    out.crossing_bits.push_back(bit);
  }
  out.canonicalize();
  return out;
}

}  // namespace cubmon

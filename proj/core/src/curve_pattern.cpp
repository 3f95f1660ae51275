#include "cubmon/curve_pattern.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cubmon/errors.hpp"

namespace cubmon {

CurvePattern::CurvePattern(std::vector<std::string> curves, std::vector<std::vector<int>> intersections)
    : curves_(std::move(curves)), inter_(std::move(intersections)) {
  if (inter_.size() != curves_.size()) throw InvalidInput("intersection matrix size does not match curve count");
  for (const auto& row : inter_)
    if (row.size() != curves_.size()) throw InvalidInput("intersection matrix is not square");
}

CurvePattern CurvePattern::from_pairs(std::vector<std::string> curves,
                                      const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::size_t n = curves.size();
  CurvePattern p(std::move(curves), std::vector<std::vector<int>>(n, std::vector<int>(n, 0)));
  for (const auto& [x, y] : pairs) {
    const std::size_t i = p.index(x);
    const std::size_t j = p.index(y);
    if (i == j) throw InvalidInput("curve " + x + " listed as intersecting itself");
    if (p.inter_[i][j] != 0) throw InvalidInput("intersection " + x + "-" + y + " listed twice");
    p.inter_[i][j] = p.inter_[j][i] = 1;
  }
  return p;
}

std::optional<std::size_t> CurvePattern::find(const std::string& label) const {
  auto it = std::find(curves_.begin(), curves_.end(), label);
  if (it == curves_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - curves_.begin());
}

std::size_t CurvePattern::index(const std::string& label) const {
  auto i = find(label);
  if (!i) throw InvalidInput("unknown curve label: " + label);
  return *i;
}

std::size_t CurvePattern::degree(std::size_t i) const {
  return static_cast<std::size_t>(std::count_if(inter_.at(i).begin(), inter_.at(i).end(), [](int x) { return x != 0; }));
}

std::vector<std::pair<std::size_t, std::size_t>> CurvePattern::crossings() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (inter_[i][j] != 0) out.emplace_back(i, j);
  return out;
}

CurvePattern CurvePattern::restrict_to(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> m(keep.size(), std::vector<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    labels.push_back(curves_.at(keep[a]));
    for (std::size_t b = 0; b < keep.size(); ++b) m[a][b] = inter_.at(keep[a]).at(keep[b]);
  }
  CurvePattern out(std::move(labels), std::move(m));
  for (const auto& l : out.curves_)
    if (auto it = vertices_.find(l); it != vertices_.end()) out.vertices_.emplace(l, it->second);
  return out;
}

std::vector<std::vector<std::size_t>> CurvePattern::components() const {
  std::vector<int> comp(size(), -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < size(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (std::size_t y = 0; y < size(); ++y)
        if (inter_[x][y] != 0 && comp[y] < 0) {
          comp[y] = id;
          stack.push_back(y);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

CurvePattern pattern_from_vertices(const ArtinGraph& g, const std::vector<std::pair<std::string, BitVertex>>& labels) {
  std::set<std::uint32_t> seen;
  std::vector<std::string> names;
  for (const auto& [name, v] : labels) {
    g.index_of(v);
    if (!seen.insert(v.mask()).second) throw InvalidInput("vertex " + v.str() + " used for more than one curve");
    names.push_back(name);
  }
  const std::size_t n = labels.size();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = g.is_edge(labels[i].second, labels[j].second) ? 1 : 0;
  CurvePattern p(std::move(names), std::move(m));
  for (const auto& [name, v] : labels) p.set_vertex(name, v);
  return p;
}

std::vector<PatternIssue> validate_pattern(const CurvePattern& p) {
  std::vector<PatternIssue> issues;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.label(i).empty()) issues.push_back({"empty curve label", i, std::nullopt});
    if (!labels.insert(p.label(i)).second) issues.push_back({"duplicate curve label " + p.label(i), i, std::nullopt});
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      const int x = p.intersection(i, j);
      if (i == j && x != 0) issues.push_back({"nonzero diagonal", i, j});
      else if (x != 0 && x != 1) issues.push_back({"unsupported multiplicity " + std::to_string(x), i, j});
      if (j > i && x != p.intersection(j, i)) issues.push_back({"asymmetric intersection", i, j});
    }
    bool isolated = true;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (j != i && p.intersection(i, j) != 0) isolated = false;
    if (isolated) issues.push_back({"isolated curve " + p.label(i), i, std::nullopt});
  }
  return issues;
}

void require_valid(const CurvePattern& p) {
  const auto issues = validate_pattern(p);
  if (issues.empty()) return;
  std::ostringstream os;
  os << "invalid curve pattern:";
  for (const auto& is : issues) {
    os << " [" << is.message;
    if (is.row) os << " at (" << *is.row << (is.col ? "," + std::to_string(*is.col) : std::string()) << ")";
    os << "]";
  }
  throw InvalidInput(os.str());
}

std::size_t f2_rank(const CurvePattern& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::uint8_t>> m(n, std::vector<std::uint8_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<std::uint8_t>(p.intersection(i, j) & 1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t piv = r;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = 0; i < n; ++i)
      if (i != r && m[i][c])
        for (std::size_t j = 0; j < n; ++j) m[i][j] ^= m[r][j];
    ++r;
  }
  return r;
}

int f2_genus_lower_bound(const CurvePattern& p) { return static_cast<int>((f2_rank(p) + 1) / 2); }

}  // namespace cubmon

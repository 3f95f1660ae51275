#pragma once

// Abstract intersection patterns of simple closed curves: labels plus a
// symmetric 0/1 geometric-intersection matrix.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubmon/artin_graph.hpp"

namespace cubmon {

class CurvePattern {
 public:
  CurvePattern() = default;
  /// Stores the data as given; call validate_pattern before searching.
  CurvePattern(std::vector<std::string> curves, std::vector<std::vector<int>> intersections);
  /// Builds a pattern from a list of intersecting label pairs.
  static CurvePattern from_pairs(std::vector<std::string> curves,
                                 const std::vector<std::pair<std::string, std::string>>& pairs);

  std::size_t size() const { return curves_.size(); }
  const std::vector<std::string>& curves() const { return curves_; }
  const std::string& label(std::size_t i) const { return curves_.at(i); }
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t index(const std::string& label) const;  // throws InvalidInput

  int intersection(std::size_t i, std::size_t j) const { return inter_.at(i).at(j); }
  const std::vector<std::vector<int>>& matrix() const { return inter_; }
  std::size_t degree(std::size_t i) const;
  /// Unordered intersecting pairs (i < j), lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> crossings() const;
  std::size_t crossing_count() const { return crossings().size(); }

  /// Subpattern on the given curve indices (in the given order).
  CurvePattern restrict_to(const std::vector<std::size_t>& keep) const;
  /// Connected components of the intersection graph, each sorted ascending.
  std::vector<std::vector<std::size_t>> components() const;
  bool connected() const { return components().size() <= 1; }

  /// Optional vertex of the Artin graph attached to each curve.
  const std::map<std::string, BitVertex>& vertices() const { return vertices_; }
  void set_vertex(const std::string& label, const BitVertex& v) { vertices_[label] = v; }

  friend bool operator==(const CurvePattern& a, const CurvePattern& b) = default;

 private:
  std::vector<std::string> curves_;
  std::vector<std::vector<int>> inter_;
  std::map<std::string, BitVertex> vertices_;
};

/// inter[x][y] = 1 iff the vertices of x and y are adjacent. Throws
/// InvalidInput on repeated vertices.
CurvePattern pattern_from_vertices(const ArtinGraph& g,
                                   const std::vector<std::pair<std::string, BitVertex>>& labels);

struct PatternIssue {
  std::string message;
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
};

/// Empty when the pattern is usable: entries in {0,1}, zero diagonal,
/// symmetric, no isolated curves, distinct non-empty labels.
std::vector<PatternIssue> validate_pattern(const CurvePattern& p);
/// Throws InvalidInput listing every issue.
void require_valid(const CurvePattern& p);

/// Rank of the intersection matrix over F_2.
std::size_t f2_rank(const CurvePattern& p);
/// ceil(f2_rank / 2): genus of any surface carrying the curves is at least this.
int f2_genus_lower_bound(const CurvePattern& p);

}  // namespace cubmon

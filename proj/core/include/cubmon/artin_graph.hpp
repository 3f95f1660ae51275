#pragma once

// The comparability graph on {0,1}^k whose Artin group carries the braid
// monodromy of the Fermat cubic. Vertices are bit tuples in lexicographic
// order; u ~ v iff u != v and u, v are coordinatewise comparable.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cubmon {

/// A bit tuple (b_1, ..., b_k). Stored as a mask whose most significant of the
/// k bits is b_1, so numeric order of the mask is lexicographic order.
class BitVertex {
 public:
  BitVertex() = default;
  BitVertex(unsigned k, std::uint32_t mask);

  /// Parses "0110" (k = length). Throws InvalidInput on other characters.
  static BitVertex parse(std::string_view bits);

  unsigned k() const { return k_; }
  std::uint32_t mask() const { return mask_; }
  /// Coordinate mu in 0..k-1 (mu = 0 is the leftmost character).
  int bit(unsigned mu) const { return static_cast<int>((mask_ >> (k_ - 1 - mu)) & 1u); }
  std::string str() const;

  /// Coordinatewise (product) order.
  bool below_or_equal(const BitVertex& other) const;

  friend bool operator==(const BitVertex&, const BitVertex&) = default;
  /// Lexicographic order; only meaningful for equal k.
  friend auto operator<=>(const BitVertex& a, const BitVertex& b) { return a.mask_ <=> b.mask_; }

 private:
  unsigned k_ = 0;
  std::uint32_t mask_ = 0;
};

/// Edge rule as stated on coordinate pairs: no (mu, nu) with opposite-sign differences.
bool edge_by_sign_pairs(const BitVertex& u, const BitVertex& v);
/// Edge rule as coordinatewise comparability.
bool edge_by_comparability(const BitVertex& u, const BitVertex& v);

class ArtinGraph {
 public:
  static constexpr unsigned kMaxDimension = 8;

  /// Throws InvalidInput unless 1 <= k <= kMaxDimension.
  explicit ArtinGraph(unsigned k);

  unsigned k() const { return k_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<BitVertex>& vertices() const { return vertices_; }
  const BitVertex& vertex(std::size_t i) const { return vertices_.at(i); }
  /// Index of v in the lexicographic vertex list; throws on dimension mismatch.
  std::size_t index_of(const BitVertex& v) const;

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * size() + j] != 0; }
  /// Throws InvalidInput when u or v has the wrong dimension.
  bool is_edge(const BitVertex& u, const BitVertex& v) const;
  std::size_t degree(std::size_t i) const;
  /// Unordered edges (i < j) in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;

 private:
  unsigned k_;
  std::vector<BitVertex> vertices_;
  std::vector<char> adj_;
};

/// Vertices adjacent to every other vertex.
std::vector<BitVertex> extremal_vertices(const ArtinGraph& g);
bool is_extremal(const ArtinGraph& g, const BitVertex& v);

enum class ChainViolationKind { MissingEdge, Chord, Repeat };

struct ChainViolation {
  std::size_t first;
  std::size_t second;
  ChainViolationKind kind;
  friend bool operator==(const ChainViolation&, const ChainViolation&) = default;
};

struct ChainReport {
  std::vector<BitVertex> sequence;
  bool is_chain = false;
  std::vector<ChainViolation> violations;
};

std::string_view to_string(ChainViolationKind kind);

ChainReport verify_chain(const ArtinGraph& g, const std::vector<BitVertex>& seq);

/// Consecutive (cyclically) pairs adjacent, all other pairs non-adjacent.
/// Throws InvalidInput for fewer than 3 vertices or repeated vertices.
bool verify_induced_cycle(const ArtinGraph& g, const std::vector<BitVertex>& seq);

/// Every induced path on `length` vertices, each listed once with its first
/// endpoint lexicographically below its last, sorted lexicographically.
std::vector<std::vector<BitVertex>> enumerate_induced_paths(const ArtinGraph& g, std::size_t length,
                                                            bool avoid_extremal);

/// Positions (1-based) of the braid chain searched for a commuting partner.
inline const std::vector<std::size_t> kDefaultWitnessPositions{1, 3, 4, 5, 6, 7};

/// Smallest 1-based position i from `positions` such that chain[i] != v and
/// chain[i] is not adjacent to v. Positions beyond the chain are ignored.
std::optional<std::size_t> commuting_partner_witness(
    const ArtinGraph& g, const std::vector<BitVertex>& chain, const BitVertex& v,
    const std::vector<std::size_t>& positions = kDefaultWitnessPositions);

}  // namespace cubmon

#pragma once

// Ribbon structures on a curve pattern and the surfaces they determine.
//
// The union of the curves is a 4-valent graph: one vertex per crossing, one
// edge per arc between consecutive crossings along a curve. A ribbon
// structure fixes, for every curve, the cyclic order in which it visits its
// crossings, and for every crossing of curves x < y which of the two
// transverse rotations is used:
//   bit 0: (x_out, y_out, x_in, y_in)   bit 1: (x_out, y_in, x_in, y_out)
// Boundary components of the regular neighbourhood are the orbits of
// rotation-after-arc on half-edges.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cubmon/curve_pattern.hpp"

namespace cubmon {

struct RibbonStructure {
  /// For each curve, its partners (curve indices) in visiting order.
  std::vector<std::vector<std::size_t>> visit_order;
  /// One bit per crossing, in the order of CurvePattern::crossings().
  std::vector<std::uint8_t> crossing_bits;

  /// Rotates each visit order to start at its lowest partner.
  void canonicalize();
  friend bool operator==(const RibbonStructure&, const RibbonStructure&) = default;
};

struct SurfaceComponent {
  int euler_char = 0;
  int boundary_count = 0;
  int genus = 0;
  std::size_t crossings = 0;
  friend bool operator==(const SurfaceComponent&, const SurfaceComponent&) = default;
};

struct RibbonSurface {
  std::vector<SurfaceComponent> components;
  int total_genus() const;
  int total_boundary() const;
  int total_euler_char() const;
};

/// Throws InvalidInput when the structure does not fit the pattern.
void require_consistent(const CurvePattern& p, const RibbonStructure& r);

/// Traces boundary cycles. Components are the connected components of the
/// crossing graph, ordered by their lowest curve index.
RibbonSurface surface_of(const CurvePattern& p, const RibbonStructure& r);

/// Every visit order reversed (the mirror-image orientation of every curve).
RibbonStructure reversed(const RibbonStructure& r);

/// The structure with all bits zero and every visit order ascending by
/// partner index.
RibbonStructure default_structure(const CurvePattern& p);

/// Restriction to a sub-pattern given by curve indices of `p` (in order).
RibbonStructure restrict_structure(const CurvePattern& p, const RibbonStructure& r, const std::vector<std::size_t>& keep);

}  // namespace cubmon

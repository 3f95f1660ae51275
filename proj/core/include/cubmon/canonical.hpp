#pragma once

// Fixed configurations on {0,1}^4: the seven-vertex braid chain, the vertex
// closing it to an induced 8-cycle, and the labelled curve systems built on
// them.

#include <string>
#include <utility>
#include <vector>

#include "cubmon/artin_graph.hpp"
#include "cubmon/curve_pattern.hpp"

namespace cubmon::canonical {

/// (0001) (0101) (0100) (0110) (0010) (1010) (1000)
std::vector<BitVertex> braid_chain();
/// (1001), adjacent to both ends of the braid chain.
BitVertex cycle_closer();
/// braid_chain() followed by cycle_closer().
std::vector<BitVertex> affine_cycle();

/// Curve labels a..h, u, v, w+, w- with their vertices, in insertion order.
std::vector<std::pair<std::string, BitVertex>> curve_labels();

/// Labelled vertex sets of the bundled patterns:
///   pair    : a, b
///   chain7  : a..g
///   cycle8  : a..h
///   ten     : a..h, u, v
///   eleven  : a..h, u, v, w+
///   twelve  : a..h, u, v, w+, w-
std::vector<std::pair<std::string, BitVertex>> labelled_vertices(const std::string& name);
std::vector<std::string> bundled_pattern_names();
CurvePattern bundled_pattern(const std::string& name);

}  // namespace cubmon::canonical

#pragma once

// Exact minimal neighbourhood genus of a curve pattern.
//
// A ribbon structure of neighbourhood genus h yields curves with the given
// intersection pattern on any closed surface of genus >= h, and any
// realization on a surface of genus g restricts to a ribbon structure of
// genus <= g. Essentialness and non-isotopy are not modelled.
//
// The search inserts curves one at a time. After each insertion the traced
// genus of the partial system is a lower bound for every completion, since
// its neighbourhood is a subsurface of theirs. Two symmetries are factored
// out: reversing a curve together with flipping its crossing bits (fixed by
// orienting the first three crossings of each curve of degree >= 3), and
// the global mirror (fixed by the bit of the first crossing).

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubmon/curve_pattern.hpp"
#include "cubmon/ribbon.hpp"

namespace cubmon {

enum class InsertionOrder { AsGiven, DegreeDescending };

struct SearchConfig {
  InsertionOrder order = InsertionOrder::AsGiven;
  /// Explicit insertion order by label; overrides `order` when non-empty.
  std::vector<std::string> custom_order;
  bool orientation_reduction = true;
  bool mirror_reduction = true;
  unsigned threads = 1;
  /// Number of top-level tasks the tree is split into. Independent of
  /// `threads`, so results do not depend on the thread count.
  std::size_t target_tasks = 256;
  /// 0 = unlimited. Hitting a cap without a certified answer throws Inconclusive.
  std::uint64_t node_limit = 0;
  std::optional<std::chrono::milliseconds> time_limit;
  /// curve -> partner labels whose crossings must appear in this cyclic order.
  std::map<std::string, std::vector<std::string>> fixed_cyclic_orders;
  /// (x, y) -> bit with x as the reference strand; converted when x has the
  /// higher index in the pattern.
  std::map<std::pair<std::string, std::string>, int> fixed_bits;
  /// Per-task results are appended here; with `resume` they are reused.
  std::optional<std::filesystem::path> cache_path;
  bool resume = false;
};

enum class Verdict { Exact, Exceeds };

struct MinGenusResult {
  Verdict verdict = Verdict::Exceeds;
  /// Minimal genus when Exact; the budget when Exceeds.
  int genus = 0;
  int budget = 0;
  int lower_bound = 0;
  std::optional<RibbonStructure> witness;
  std::uint64_t nodes_explored = 0;
  bool exhausted = false;
  std::size_t tasks = 0;
  std::size_t tasks_from_cache = 0;
  double wall_seconds = 0.0;
};

/// Throws InvalidInput for invalid patterns or constraints, Inconclusive when
/// a resource cap is hit first. Disconnected patterns are solved per component
/// and summed.
MinGenusResult min_genus(const CurvePattern& p, int budget, const SearchConfig& config = {});

struct RealizabilityResult {
  bool realizable = false;
  std::optional<RibbonStructure> witness;
  MinGenusResult search;
};

/// True with a witness iff some ribbon structure has total genus <= genus.
RealizabilityResult is_realizable(const CurvePattern& p, int genus, const SearchConfig& config = {});

std::string to_string(Verdict v);

/// Insertion sequence (curve indices) the search will use for `p`.
std::vector<std::size_t> insertion_sequence(const CurvePattern& p, const SearchConfig& config);

}  // namespace cubmon

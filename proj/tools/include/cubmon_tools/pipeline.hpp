#pragma once

// The full verification pipeline behind `cubmon verify-paper`.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cubmon/curve_pattern.hpp"
#include "cubmon/realizability.hpp"

namespace cubmon::pipeline {

struct Row {
  std::string group;
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Options {
  unsigned threads = 1;
  std::optional<std::filesystem::path> cache_dir;
  bool include_main = true;
};

struct Outcome {
  std::vector<Row> rows;
  bool inconclusive = false;
  bool all_pass() const;
};

/// Placement models for u on the affine cycle: a meets b, h and u, and the
/// two sides of h give the two cyclic orders of (b, u, h) along a.
std::vector<std::pair<std::string, SearchConfig>> u_placement_models();

Outcome run(const Options& options);

nlohmann::json rows_to_json(const std::vector<Row>& rows);
std::string scoreboard(const std::vector<Row>& rows);

}  // namespace cubmon::pipeline

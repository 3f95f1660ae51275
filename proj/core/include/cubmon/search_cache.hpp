#pragma once

// Versioned on-disk store of finished search tasks. The first line names the
// format version and a key derived from everything that shapes the search
// tree; on any mismatch the file is treated as empty and rewritten.

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "cubmon/ribbon.hpp"

namespace cubmon {

inline constexpr int kSearchCacheVersion = 1;

struct CachedTask {
  std::optional<int> best;
  int cutoff = 0;
  std::uint64_t nodes = 0;
  std::optional<RibbonStructure> witness;
};

class SearchCache {
 public:
  /// Opens `path`; loads entries when `resume` and the header matches `key`,
  /// otherwise truncates and writes a fresh header.
  SearchCache(std::filesystem::path path, std::string key, bool resume);

  const std::map<std::size_t, CachedTask>& entries() const { return entries_; }
  bool invalidated() const { return invalidated_; }
  void record(std::size_t task, const CachedTask& t);

 private:
  std::filesystem::path path_;
  std::string key_;
  std::map<std::size_t, CachedTask> entries_;
  bool invalidated_ = false;
  std::mutex mu_;
};

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& data);

}  // namespace cubmon

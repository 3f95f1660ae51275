#include "cubmon/search_cache.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>

namespace cubmon {

using nlohmann::json;

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

json header(const std::string& key) {
  return json{{"format", "cubmon-search-cache"}, {"version", kSearchCacheVersion}, {"key", key}};
}

json entry_json(std::size_t task, const CachedTask& t) {
  json j{{"task", task}, {"cutoff", t.cutoff}, {"nodes", t.nodes}};
  j["best"] = t.best ? json(*t.best) : json(nullptr);
  if (t.witness) j["witness"] = {{"orders", t.witness->visit_order}, {"bits", t.witness->crossing_bits}};
  else j["witness"] = nullptr;
  return j;
}

}  // namespace

SearchCache::SearchCache(std::filesystem::path path, std::string key, bool resume)
    : path_(std::move(path)), key_(std::move(key)) {
  bool reuse = false;
  if (resume && std::filesystem::exists(path_)) {
    std::ifstream in(path_);
    std::string line;
    if (std::getline(in, line)) {
      const json h = json::parse(line, nullptr, false);
      reuse = !h.is_discarded() && h == header(key_);
    }
    if (reuse) {
      while (std::getline(in, line)) {
        const json j = json::parse(line, nullptr, false);
        // A torn final line from an interrupted run is simply dropped.
        if (j.is_discarded() || !j.is_object() || !j.contains("task")) continue;
        try {
          CachedTask t;
          if (!j.at("best").is_null()) t.best = j.at("best").get<int>();
          t.cutoff = j.at("cutoff").get<int>();
          t.nodes = j.at("nodes").get<std::uint64_t>();
          if (!j.at("witness").is_null()) {
            RibbonStructure r;
            r.visit_order = j.at("witness").at("orders").get<std::vector<std::vector<std::size_t>>>();
            r.crossing_bits = j.at("witness").at("bits").get<std::vector<std::uint8_t>>();
            t.witness = std::move(r);
          }
          if (t.best.has_value() != t.witness.has_value()) continue;
          entries_[j.at("task").get<std::size_t>()] = std::move(t);
        } catch (const json::exception&) {
        }
      }
    } else {
      invalidated_ = true;
    }
  }
  if (!reuse) {
    if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
    std::ofstream out(path_, std::ios::trunc);
    out << header(key_).dump() << '\n';
    for (const auto& [task, t] : entries_) out << entry_json(task, t).dump() << '\n';
  }
}

void SearchCache::record(std::size_t task, const CachedTask& t) {
  std::lock_guard lock(mu_);
  entries_[task] = t;
  std::ofstream out(path_, std::ios::app);
  out << entry_json(task, t).dump() << '\n';
}

}  // namespace cubmon

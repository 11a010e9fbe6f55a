#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>

#include <json.hpp>

#include "nilprob/nilprob.hpp"
#include "nilprob/verify.hpp"

namespace nilprob {

inline constexpr int kCacheSchema = 1;
inline constexpr const char* kCacheFileName = "results.jsonl";

/// FNV-1a over the parent order and the sorted element list.
std::uint64_t subgroup_fingerprint(const SubgroupRef& h);

/// Append-only JSON-lines store. Each line is
///   {"schema": 1, "key": "...", "value": {...}}
/// Lines with another schema or that fail to parse are counted and ignored.
/// Later lines win. All members lock, so one instance can be shared by
/// worker threads; it is the only writer of its file.
class ResultsCache {
 public:
  /// Memory only.
  ResultsCache() = default;
  /// Creates dir if needed and loads dir/results.jsonl.
  explicit ResultsCache(const std::filesystem::path& dir);

  /// kind|table fingerprint|subgroup fingerprint|shifts|k
  static std::string key(std::string_view kind, const GroupTable& g, const SubgroupRef& h,
                         std::span<const Element> shifts, std::uint32_t k);

  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& value);

  std::size_t size() const;
  std::size_t ignored_lines() const { return ignored_; }
  const std::filesystem::path& file() const { return file_; }
  bool persistent() const { return !file_.empty(); }

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, nlohmann::json> entries_;
  std::filesystem::path file_;
  std::ofstream out_;
  std::size_t ignored_ = 0;
};

/// --no-cache wins, then --cache-dir, NILPROB_CACHE_DIR, $XDG_CACHE_HOME/nilprob
/// and $HOME/.cache/nilprob. nullopt means memory only.
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag_dir, bool no_cache);

NpResult np_result_from_json(const nlohmann::json& j);
SupResult sup_result_from_json(const nlohmann::json& j);

/// np through the cache; `hit` reports whether it was found.
NpResult cached_np(ResultsCache& cache, const GroupTable& g, const SubgroupRef& h,
                   std::span<const Element> shifts, Method method, const Budgets& budgets,
                   bool* hit = nullptr);
SupResult cached_np_sup(ResultsCache& cache, const GroupTable& g, const SubgroupRef& h,
                        std::uint32_t k, const Budgets& budgets, bool* hit = nullptr);

/// Adapter for CorpusConfig::sup_cache.
class ResultsSupCache : public SupCache {
 public:
  explicit ResultsSupCache(ResultsCache& cache) : cache_(cache) {}
  std::optional<SupResult> find(const GroupTable& g, const SubgroupRef& h, std::uint32_t k) override;
  void store(const GroupTable& g, const SubgroupRef& h, std::uint32_t k, const SupResult& sup) override;

 private:
  ResultsCache& cache_;
};

}  // namespace nilprob

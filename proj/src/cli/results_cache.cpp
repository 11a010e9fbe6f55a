#include "nilprob/results_cache.hpp"

#include <cstdlib>
#include <cstdio>

#include "nilprob/errors.hpp"

namespace nilprob {

using nlohmann::json;

std::uint64_t subgroup_fingerprint(const SubgroupRef& h) {
  std::uint64_t x = 0xcbf29ce484222325ULL;
  auto mix = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
      x ^= (v >> (8 * i)) & 0xff;
      x *= 0x100000001b3ULL;
    }
  };
  mix(h.parent_order());
  mix(h.size());
  for (Element e : h.elements()) mix(e);
  return x;
}

ResultsCache::ResultsCache(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error("cannot create cache directory " + dir.string() + ": " + ec.message());
  file_ = dir / kCacheFileName;
  if (std::ifstream in{file_}) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const json j = json::parse(line, nullptr, false);
      if (j.is_discarded() || !j.is_object() || j.value("schema", -1) != kCacheSchema ||
          !j.contains("key") || !j["key"].is_string() || !j.contains("value")) {
        ++ignored_;
        continue;
      }
      entries_[j["key"].get<std::string>()] = j["value"];
    }
  }
  out_.open(file_, std::ios::app);
  if (!out_) throw Error("cannot write cache file " + file_.string());
}

std::string ResultsCache::key(std::string_view kind, const GroupTable& g, const SubgroupRef& h,
                              std::span<const Element> shifts, std::uint32_t k) {
  char buf[40];
  std::string out(kind);
  std::snprintf(buf, sizeof buf, "|%016llx", static_cast<unsigned long long>(g.fingerprint()));
  out += buf;
  std::snprintf(buf, sizeof buf, "|%016llx|", static_cast<unsigned long long>(subgroup_fingerprint(h)));
  out += buf;
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(shifts[i]);
  }
  out += '|';
  out += std::to_string(k);
  return out;
}

std::optional<json> ResultsCache::get(const std::string& key) const {
  std::lock_guard lock(mu_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultsCache::put(const std::string& key, const json& value) {
  std::lock_guard lock(mu_);
  entries_[key] = value;
  if (out_.is_open()) {
    out_ << json{{"schema", kCacheSchema}, {"key", key}, {"value", value}}.dump() << '\n';
    out_.flush();
  }
}

std::size_t ResultsCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag_dir, bool no_cache) {
  if (no_cache) return std::nullopt;
  if (!flag_dir.empty()) return std::filesystem::path(flag_dir);
  auto env = [](const char* name) -> std::string {
    const char* v = std::getenv(name);
    return v ? v : "";
  };
  if (auto d = env("NILPROB_CACHE_DIR"); !d.empty()) return std::filesystem::path(d);
  if (auto d = env("XDG_CACHE_HOME"); !d.empty()) return std::filesystem::path(d) / "nilprob";
  if (auto d = env("HOME"); !d.empty()) return std::filesystem::path(d) / ".cache" / "nilprob";
  return std::nullopt;
}

NpResult np_result_from_json(const json& j) {
  NpResult r;
  r.value = ExactProb::parse(j.at("value").get<std::string>());
  r.method = j.at("method").get<std::string>() == to_string(Method::brute_force) ? Method::brute_force
                                                                                 : Method::dp;
  r.counted = BigInt(j.at("counted").get<std::string>());
  r.total = BigInt(j.at("total").get<std::string>());
  return r;
}

SupResult sup_result_from_json(const json& j) {
  SupResult r;
  r.value = ExactProb::parse(j.at("value").get<std::string>());
  r.witness = j.at("witness").get<ShiftTuple>();
  r.first_k_value = ExactProb::parse(j.at("first_k_value").get<std::string>());
  r.first_k_witness = j.at("first_k_witness").get<ShiftTuple>();
  r.tuples_evaluated = j.at("tuples").get<std::uint64_t>();
  return r;
}

namespace {

// A corrupt entry is treated as a miss and overwritten.
template <class T, class Parse>
std::optional<T> lookup(const ResultsCache& cache, const std::string& key, Parse parse) {
  auto j = cache.get(key);
  if (!j) return std::nullopt;
  try {
    return parse(*j);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

NpResult cached_np(ResultsCache& cache, const GroupTable& g, const SubgroupRef& h,
                   std::span<const Element> shifts, Method method, const Budgets& budgets, bool* hit) {
  const std::string key =
      ResultsCache::key(method == Method::dp ? "np" : "np_bf", g, h, shifts,
                        static_cast<std::uint32_t>(shifts.size()) - 1);
  if (auto r = lookup<NpResult>(cache, key, np_result_from_json)) {
    if (hit) *hit = true;
    return *r;
  }
  if (hit) *hit = false;
  NpResult r = method == Method::dp ? np_fast(g, h, shifts, budgets) : np_bruteforce(g, h, shifts, budgets);
  cache.put(key, to_json(r));
  return r;
}

SupResult cached_np_sup(ResultsCache& cache, const GroupTable& g, const SubgroupRef& h, std::uint32_t k,
                        const Budgets& budgets, bool* hit) {
  const std::string key = ResultsCache::key("sup", g, h, {}, k);
  if (auto r = lookup<SupResult>(cache, key, sup_result_from_json)) {
    if (hit) *hit = true;
    return *r;
  }
  if (hit) *hit = false;
  SupResult r = np_sup(g, h, k, budgets);
  cache.put(key, to_json(r));
  return r;
}

std::optional<SupResult> ResultsSupCache::find(const GroupTable& g, const SubgroupRef& h, std::uint32_t k) {
  return lookup<SupResult>(cache_, ResultsCache::key("sup", g, h, {}, k), sup_result_from_json);
}

void ResultsSupCache::store(const GroupTable& g, const SubgroupRef& h, std::uint32_t k, const SupResult& sup) {
  cache_.put(ResultsCache::key("sup", g, h, {}, k), to_json(sup));
}

}  // namespace nilprob

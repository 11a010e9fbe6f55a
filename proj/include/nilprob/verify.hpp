#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nilprob/exact_prob.hpp"
#include "nilprob/group_table.hpp"
#include "nilprob/nilprob.hpp"
#include "nilprob/structure.hpp"

namespace nilprob {

namespace check_id {
inline constexpr const char* npleqcp = "npleqcp";
inline constexpr const char* center_recursion = "2_4n";
inline constexpr const char* nocamn = "nocamn";
inline constexpr const char* gap_bound_derived = "gap_bound_derived";
inline constexpr const char* gap_bound_stated = "gap_bound_stated";
inline constexpr const char* submultiplicativity = "submultiplicativity";
inline constexpr const char* mtvv_monotonicity = "mtvv_monotonicity";
inline constexpr const char* series_bound_derived = "series_bound_derived";
inline constexpr const char* series_bound_stated = "series_bound_stated";
}  // namespace check_id

/// Every check id, in report order.
const std::vector<std::string>& all_check_ids();

/// Checks whose failure is a violation. The others only produce findings.
bool is_must_hold(std::string_view check);

/// 1 - 3/2^(k+1)
ExactProb stated_gap_constant(std::uint32_t k);
/// 1 - 3/2^(k+2)
ExactProb derived_gap_constant(std::uint32_t k);

struct CheckOutcome {
  std::string check;
  std::string group;
  std::uint32_t k = 0;
  nlohmann::json params = nlohmann::json::object();
  std::string lhs;
  std::string rhs;
  std::string relation = "<=";
  bool holds = true;
  bool must_hold = true;
  bool skipped = false;
  std::string skip_reason;
  // lhs == rhs with rhs < 1
  bool sharp = false;
  nlohmann::json witness;
  // Checks that range over shift tuples report the tuple with the least slack.
  std::uint64_t cases = 1;
  std::uint64_t violations = 0;
  std::uint64_t sharp_cases = 0;

  bool is_violation() const { return !skipped && must_hold && !holds; }
  bool is_finding() const { return !skipped && !must_hold && !holds; }
};
nlohmann::json to_json(const CheckOutcome& o);

/// Called once per shift tuple with both sides of the inequality lhs <= rhs.
using TupleVisitor =
    std::function<void(std::span<const Element> shifts, const ExactProb& lhs, const ExactProb& rhs)>;

/// np(H; x, y) <= cp(H) over coset-representative pairs.
void visit_npleqcp(const GroupTable& g, const SubgroupRef& h, const Budgets& budgets,
                   const TupleVisitor& visit);
std::vector<CheckOutcome> check_npleqcp(const GroupTable& g, const SubgroupRef& h,
                                        const Budgets& budgets = {});

/// np(H; x_1..x_{k+1}) <= (1 + np(H/K; x_1..x_k mod K)) / 2 with K = Z(G) ∩ H.
/// The right side is evaluated in G/K so shifts outside H keep their image.
void visit_2_4n(const GroupTable& g, const SubgroupRef& h, std::uint32_t k, const Budgets& budgets,
                const TupleVisitor& visit);
std::vector<CheckOutcome> check_2_4n(const GroupTable& g, const SubgroupRef& h, std::uint32_t k,
                                     const Budgets& budgets = {});

/// np(N; x_1..x_{k+1}) <= np(N; 1..1) for N normal in G.
void visit_mtvv(const GroupTable& g, const SubgroupRef& n, std::uint32_t k, const Budgets& budgets,
                const TupleVisitor& visit);
std::vector<CheckOutcome> check_mtvv_monotonicity(const GroupTable& g, const SubgroupRef& n,
                                                  std::uint32_t k, const Budgets& budgets = {});

/// np_sup(G, H, k) == 1 iff H has class at most k.
CheckOutcome check_nocamn(const GroupTable& g, const SubgroupRef& h, std::uint32_t k,
                          const Budgets& budgets = {});
CheckOutcome check_nocamn(const SupResult& sup, const GroupTable& g, const SubgroupRef& h,
                          std::uint32_t k);

/// np_sup against the derived and the stated constant. Both outcomes are
/// skipped when H has class at most k.
std::pair<CheckOutcome, CheckOutcome> check_gap_bound(const GroupTable& g, const SubgroupRef& h,
                                                      std::uint32_t k, const Budgets& budgets = {});
std::pair<CheckOutcome, CheckOutcome> check_gap_bound(const SupResult& sup, const GroupTable& g,
                                                      const SubgroupRef& h, std::uint32_t k);

/// np_sup(G, H) <= np_sup(G/N, H/N) * np_sup(G, N). Requires N normal and N ⊆ H.
CheckOutcome check_submultiplicativity(const GroupTable& g, const SubgroupRef& n,
                                       const SubgroupRef& h, std::uint32_t k,
                                       const Budgets& budgets = {});

struct SeriesResult {
  // Factor count minus one; -1 when no series has a factor of class > k.
  int r = -1;
  std::vector<SubgroupRef> chain;  // G = chain[0] > ... > chain.back() = 1
  std::uint32_t factors() const { return r < 0 ? 0u : static_cast<std::uint32_t>(r) + 1; }
};

/// Longest normal series 1 = G_{r+1} < ... < G_0 = G in which every factor
/// has class > k. Throws OrderExceeded past the normal-subgroup cap.
SeriesResult max_bad_series_length(const GroupTable& g, std::uint32_t k,
                                   std::uint32_t cap = kDefaultNormalSubgroupCap);

/// r < ln np_k(G) / ln c for the derived and the stated constant c. Decided
/// exactly as c^r > np_k(G); the logarithmic bound is reported as a real.
/// Skipped for the trivial group.
std::pair<CheckOutcome, CheckOutcome> check_series_bound(const GroupTable& g, std::uint32_t k,
                                                         const Budgets& budgets = {});

struct CorpusEntry {
  std::string label;
  std::function<GroupTable()> load;  // may throw nilprob::Error
};

/// Catalog entries for the given names; loading applies max_order.
std::vector<CorpusEntry> catalog_corpus(const std::vector<std::string>& names,
                                        std::uint32_t max_order = kDefaultOrderCap);

/// Memo for np_sup values that outlives one run. Called from several
/// threads at once.
class SupCache {
 public:
  virtual ~SupCache() = default;
  virtual std::optional<SupResult> find(const GroupTable& g, const SubgroupRef& h,
                                        std::uint32_t k) = 0;
  virtual void store(const GroupTable& g, const SubgroupRef& h, std::uint32_t k,
                     const SupResult& sup) = 0;
};

struct CorpusConfig {
  std::vector<std::uint32_t> ks{1, 2, 3};
  // k -> largest group order it runs on
  std::vector<std::pair<std::uint32_t, std::uint32_t>> k_order_limits{{3, 24}};
  Budgets budgets;
  // empty: every check
  std::set<std::string> checks;
  bool cyclic_subgroups = false;
  unsigned threads = 1;
  SupCache* sup_cache = nullptr;

  bool runs(std::string_view check) const;
  bool runs_k(std::uint32_t k, std::uint32_t order) const;
};

struct SkippedItem {
  std::string group;
  std::string check;  // empty when the whole group was skipped
  std::string reason;
};

struct VerificationReport {
  std::vector<CheckOutcome> outcomes;  // sorted by group, check, params
  std::vector<SkippedItem> skipped;
  double seconds = 0;

  std::uint64_t checks() const;
  std::uint64_t passed() const;
  std::uint64_t violations() const;
  std::vector<const CheckOutcome*> findings() const;
  std::vector<const CheckOutcome*> sharpness() const;
  bool ok() const { return violations() == 0; }
};

VerificationReport run_corpus(const std::vector<CorpusEntry>& corpus, const CorpusConfig& config);

/// Report schema: summary, outcomes, findings, sharpness, skipped, environment.
/// Contains no timing, so equal runs serialize identically.
nlohmann::json to_json(const VerificationReport& report, const CorpusConfig& config);

/// Columns: group,k,check,lhs,rhs,holds
void write_csv(std::ostream& out, const VerificationReport& report);
void write_table(std::ostream& out, const VerificationReport& report);

inline constexpr const char* kReportVersion = "nilprob-verify/1";

}  // namespace nilprob

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <map>
#include <thread>

#include "nilprob/catalog.hpp"
#include "nilprob/errors.hpp"
#include "nilprob/verify.hpp"

namespace nilprob {

bool CorpusConfig::runs(std::string_view check) const {
  return checks.empty() || checks.count(std::string(check)) > 0;
}

bool CorpusConfig::runs_k(std::uint32_t k, std::uint32_t order) const {
  for (const auto& [kk, limit] : k_order_limits)
    if (kk == k && order > limit) return false;
  return true;
}

std::vector<CorpusEntry> catalog_corpus(const std::vector<std::string>& names, std::uint32_t max_order) {
  std::vector<CorpusEntry> out;
  for (const auto& name : names) {
    const std::string label = canonical_catalog_name(name);
    out.push_back({label, [label, max_order] { return catalog_get(label, max_order); }});
  }
  return out;
}

std::uint64_t VerificationReport::checks() const {
  std::uint64_t n = 0;
  for (const auto& o : outcomes) n += !o.skipped;
  return n;
}

std::uint64_t VerificationReport::passed() const {
  std::uint64_t n = 0;
  for (const auto& o : outcomes) n += !o.skipped && o.holds;
  return n;
}

std::uint64_t VerificationReport::violations() const {
  std::uint64_t n = 0;
  for (const auto& o : outcomes) n += o.is_violation();
  return n;
}

std::vector<const CheckOutcome*> VerificationReport::findings() const {
  std::vector<const CheckOutcome*> out;
  for (const auto& o : outcomes)
    if (o.is_finding()) out.push_back(&o);
  return out;
}

std::vector<const CheckOutcome*> VerificationReport::sharpness() const {
  std::vector<const CheckOutcome*> out;
  for (const auto& o : outcomes)
    if (!o.skipped && o.sharp) out.push_back(&o);
  return out;
}

namespace {

struct GroupRun {
  std::vector<CheckOutcome> outcomes;
  std::vector<SkippedItem> skipped;
};

class GroupVerifier {
 public:
  GroupVerifier(const GroupTable& g, const CorpusConfig& config, GroupRun& out)
      : g_(g), config_(config), out_(out) {}

  void run() {
    normals_ = normal_subgroups(g_);
    for (std::size_t i = 0; i < normals_.size(); ++i) {
      sources_.push_back(normals_[i]);
      ids_.push_back("N" + std::to_string(i));
    }
    if (config_.cyclic_subgroups) {
      std::size_t c = 0;
      for (auto& h : cyclic_subgroups(g_)) {
        if (std::find(normals_.begin(), normals_.end(), h) != normals_.end()) continue;
        sources_.push_back(h);
        ids_.push_back("C" + std::to_string(c++));
      }
    }
    quotients_.resize(normals_.size());

    for (std::uint32_t k : config_.ks) {
      if (!config_.runs_k(k, g_.order())) continue;
      for (std::size_t i = 0; i < sources_.size(); ++i) per_subgroup(i, k);
      for (std::size_t n = 0; n < normals_.size(); ++n) per_normal(n, k);
      if (config_.runs(check_id::series_bound_derived) || config_.runs(check_id::series_bound_stated))
        guarded("series_bound", "k=" + std::to_string(k), [&] {
          auto [d, s] = check_series_bound(g_, k, config_.budgets);
          emit(std::move(d));
          emit(std::move(s));
        });
    }
  }

 private:
  template <class F>
  void guarded(const std::string& check, const std::string& where, F&& f) {
    try {
      f();
    } catch (const Error& e) {
      out_.skipped.push_back({g_.label(), check, where + ": " + e.what()});
    }
  }

  void emit(CheckOutcome o) {
    if (!config_.runs(o.check)) return;
    if (o.skipped) {
      std::string where = "k=" + std::to_string(o.k);
      if (o.params.contains("H")) where += " H=" + o.params["H"].get<std::string>();
      out_.skipped.push_back({o.group, o.check, where + ": " + o.skip_reason});
      return;
    }
    out_.outcomes.push_back(std::move(o));
  }

  void tag(CheckOutcome& o, std::size_t h) const {
    o.params["H"] = ids_[h];
    o.params["H_order"] = sources_[h].size();
  }

  SupResult cached_sup(const GroupTable& g, const SubgroupRef& h, std::uint32_t k) const {
    if (!config_.sup_cache) return np_sup(g, h, k, config_.budgets);
    if (auto hit = config_.sup_cache->find(g, h, k)) return std::move(*hit);
    SupResult s = np_sup(g, h, k, config_.budgets);
    config_.sup_cache->store(g, h, k, s);
    return s;
  }

  const SupResult& sup(std::size_t h, std::uint32_t k) {
    const auto key = std::make_pair(h, k);
    auto it = sups_.find(key);
    if (it == sups_.end()) it = sups_.emplace(key, cached_sup(g_, sources_[h], k)).first;
    return it->second;
  }

  const QuotientMap& quotient_by(std::size_t n) {
    if (!quotients_[n]) quotients_[n] = quotient(g_, normals_[n]);
    return *quotients_[n];
  }

  std::string where(std::size_t h, std::uint32_t k) const {
    return "k=" + std::to_string(k) + " H=" + ids_[h];
  }

  template <class Visit>
  void reduce(const char* id, std::size_t h, std::uint32_t k, Visit&& visit_fn) {
    if (!config_.runs(id)) return;
    guarded(id, where(h, k), [&] {
      CheckOutcome base;
      base.check = id;
      base.group = g_.label();
      base.k = k;
      base.must_hold = is_must_hold(id);
      tag(base, h);
      TupleReducerHandle r(std::move(base));
      visit_fn(r.visitor());
      emit(r.finish());
    });
  }

  // Thin wrapper so the reducer in checks.cpp stays private to that file.
  class TupleReducerHandle {
   public:
    explicit TupleReducerHandle(CheckOutcome base) : out_(std::move(base)) { out_.cases = 0; }
    TupleVisitor visitor() {
      return [this](std::span<const Element> s, const ExactProb& lhs, const ExactProb& rhs) {
        ++out_.cases;
        if (lhs > rhs) ++out_.violations;
        if (lhs == rhs && !rhs.is_one() && out_.sharp_cases++ == 0)
          sharp_ = std::vector<Element>(s.begin(), s.end());
        // least slack: maximize lhs - rhs, compared exactly
        const BigInt a = lhs.num() * rhs.den() - rhs.num() * lhs.den();
        const BigInt b = lhs.den() * rhs.den();
        if (out_.cases == 1 || a * worst_den_ > worst_num_ * b) {
          worst_num_ = a;
          worst_den_ = b;
          out_.lhs = lhs.to_string();
          out_.rhs = rhs.to_string();
          worst_.assign(s.begin(), s.end());
        }
      };
    }
    CheckOutcome finish() {
      out_.holds = out_.violations == 0;
      out_.sharp = out_.sharp_cases > 0;
      out_.witness = {{"shifts", worst_}};
      if (out_.sharp) out_.witness["sharp_shifts"] = sharp_;
      return std::move(out_);
    }

   private:
    CheckOutcome out_;
    BigInt worst_num_ = 0, worst_den_ = 1;
    std::vector<Element> worst_, sharp_;
  };

  void per_subgroup(std::size_t h, std::uint32_t k) {
    const SubgroupRef& sub = sources_[h];
    if (k == config_.ks.front())
      reduce(check_id::npleqcp, h, 1, [&](const TupleVisitor& v) { visit_npleqcp(g_, sub, config_.budgets, v); });
    reduce(check_id::center_recursion, h, k,
           [&](const TupleVisitor& v) { visit_2_4n(g_, sub, k, config_.budgets, v); });

    const bool wants_sup = config_.runs(check_id::nocamn) || config_.runs(check_id::gap_bound_derived) ||
                           config_.runs(check_id::gap_bound_stated);
    if (!wants_sup) return;
    guarded(check_id::nocamn, where(h, k), [&] {
      const SupResult& s = sup(h, k);
      CheckOutcome n = check_nocamn(s, g_, sub, k);
      tag(n, h);
      emit(std::move(n));
      auto [d, st] = check_gap_bound(s, g_, sub, k);
      tag(d, h);
      tag(st, h);
      emit(std::move(d));
      emit(std::move(st));
    });
  }

  void per_normal(std::size_t n, std::uint32_t k) {
    reduce(check_id::mtvv_monotonicity, n, k,
           [&](const TupleVisitor& v) { visit_mtvv(g_, normals_[n], k, config_.budgets, v); });
    if (!config_.runs(check_id::submultiplicativity)) return;
    for (std::size_t h = 0; h < sources_.size(); ++h) {
      if (!normals_[n].is_subset_of(sources_[h])) continue;
      guarded(check_id::submultiplicativity, where(h, k) + " N=" + ids_[n], [&] {
        const QuotientMap& q = quotient_by(n);
        const SupResult top = cached_sup(q.target, image(q, sources_[h]), k);
        const ExactProb lhs = sup(h, k).value;
        const ExactProb rhs = top.value * sup(n, k).value;
        CheckOutcome o;
        o.check = check_id::submultiplicativity;
        o.group = g_.label();
        o.k = k;
        o.must_hold = true;
        tag(o, h);
        o.params["N"] = ids_[n];
        o.params["N_order"] = normals_[n].size();
        o.lhs = lhs.to_string();
        o.rhs = rhs.to_string();
        o.holds = lhs <= rhs;
        o.violations = o.holds ? 0 : 1;
        o.sharp = lhs == rhs && !rhs.is_one();
        o.sharp_cases = o.sharp ? 1 : 0;
        o.witness = {{"quotient", top.value.to_string()}, {"kernel", sup(n, k).value.to_string()}};
        emit(std::move(o));
      });
    }
  }

  const GroupTable& g_;
  const CorpusConfig& config_;
  GroupRun& out_;
  std::vector<SubgroupRef> normals_;
  std::vector<SubgroupRef> sources_;
  std::vector<std::string> ids_;
  std::vector<std::optional<QuotientMap>> quotients_;
  std::map<std::pair<std::size_t, std::uint32_t>, SupResult> sups_;
};

GroupRun verify_entry(const CorpusEntry& entry, const CorpusConfig& config) {
  GroupRun run;
  try {
    const GroupTable g = entry.load().with_label(entry.label);
    GroupVerifier(g, config, run).run();
  } catch (const Error& e) {
    run.outcomes.clear();
    run.skipped.push_back({entry.label, "", e.what()});
  }
  return run;
}

int check_rank(const std::string& id) {
  const auto& ids = all_check_ids();
  return static_cast<int>(std::find(ids.begin(), ids.end(), id) - ids.begin());
}

}  // namespace

VerificationReport run_corpus(const std::vector<CorpusEntry>& corpus, const CorpusConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<GroupRun> runs(corpus.size());
  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(corpus.size())));
  if (threads <= 1) {
    for (std::size_t i = 0; i < corpus.size(); ++i) runs[i] = verify_entry(corpus[i], config);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < corpus.size();) runs[i] = verify_entry(corpus[i], config);
      });
  }

  VerificationReport report;
  for (auto& r : runs) {
    for (auto& o : r.outcomes) report.outcomes.push_back(std::move(o));
    for (auto& s : r.skipped) report.skipped.push_back(std::move(s));
  }
  std::stable_sort(report.outcomes.begin(), report.outcomes.end(), [](const auto& a, const auto& b) {
    if (a.group != b.group) return a.group < b.group;
    if (a.check != b.check) return check_rank(a.check) < check_rank(b.check);
    if (a.k != b.k) return a.k < b.k;
    return a.params.dump() < b.params.dump();
  });
  std::stable_sort(report.skipped.begin(), report.skipped.end(), [](const auto& a, const auto& b) {
    return std::tie(a.group, a.check, a.reason) < std::tie(b.group, b.check, b.reason);
  });
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const VerificationReport& report, const CorpusConfig& config) {
  nlohmann::json outcomes = nlohmann::json::array();
  for (const auto& o : report.outcomes) outcomes.push_back(to_json(o));
  nlohmann::json findings = nlohmann::json::array();
  for (const auto* o : report.findings()) findings.push_back(to_json(*o));
  nlohmann::json sharp = nlohmann::json::array();
  for (const auto* o : report.sharpness()) sharp.push_back(to_json(*o));
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& o : report.outcomes)
    if (o.is_violation()) violations.push_back(to_json(o));
  nlohmann::json skipped = nlohmann::json::array();
  for (const auto& s : report.skipped) skipped.push_back({{"group", s.group}, {"check", s.check}, {"reason", s.reason}});

  nlohmann::json limits = nlohmann::json::object();
  for (const auto& [k, n] : config.k_order_limits) limits[std::to_string(k)] = n;
  return {
      {"summary",
       {{"checks", report.checks()},
        {"passed", report.passed()},
        {"violations", report.violations()},
        {"findings", findings.size()},
        {"sharp", sharp.size()},
        {"skipped", report.skipped.size()},
        {"ok", report.ok()}}},
      {"outcomes", outcomes},
      {"violations", violations},
      {"findings", findings},
      {"sharpness", sharp},
      {"skipped", skipped},
      {"environment",
       {{"version", kReportVersion},
        {"seed", 0},
        {"ks", config.ks},
        {"k_order_limits", limits},
        {"cyclic_subgroups", config.cyclic_subgroups},
        {"checks", config.checks.empty() ? all_check_ids() : std::vector<std::string>(config.checks.begin(), config.checks.end())},
        {"budgets",
         {{"tuples", config.budgets.tuples},
          {"shifts", config.budgets.shifts},
          {"fast_ops", config.budgets.fast_ops},
          {"fast_order", config.budgets.fast_order}}}}},
  };
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& out, const VerificationReport& report) {
  out << "group,k,check,lhs,rhs,holds\n";
  for (const auto& o : report.outcomes)
    out << csv_field(o.group) << ',' << o.k << ',' << o.check << ',' << csv_field(o.lhs) << ','
        << csv_field(o.rhs) << ',' << (o.holds ? "true" : "false") << '\n';
}

void write_table(std::ostream& out, const VerificationReport& report) {
  struct Tally {
    std::uint64_t run = 0, passed = 0, failed = 0, sharp = 0, skipped = 0;
  };
  std::map<std::string, Tally> tally;
  for (const auto& id : all_check_ids()) tally[id];
  for (const auto& o : report.outcomes) {
    auto& t = tally[o.check];
    ++t.run;
    (o.holds ? t.passed : t.failed)++;
    t.sharp += o.sharp;
  }
  for (const auto& s : report.skipped)
    if (!s.check.empty() && tally.count(s.check)) ++tally[s.check].skipped;

  out << std::left << std::setw(24) << "check" << std::right << std::setw(10) << "run" << std::setw(10)
      << "passed" << std::setw(10) << "failed" << std::setw(10) << "sharp" << std::setw(10) << "skipped"
      << "  kind\n";
  for (const auto& id : all_check_ids()) {
    const auto& t = tally[id];
    out << std::left << std::setw(24) << id << std::right << std::setw(10) << t.run << std::setw(10)
        << t.passed << std::setw(10) << t.failed << std::setw(10) << t.sharp << std::setw(10) << t.skipped
        << "  " << (is_must_hold(id) ? "must hold" : "probe") << '\n';
  }

  auto line = [&](const CheckOutcome& o) {
    out << "  " << o.group << "  k=" << o.k << "  " << o.check << "  " << o.params.dump() << "  " << o.lhs << ' '
        << o.relation << ' ' << o.rhs;
    if (o.cases > 1) out << "  (" << o.violations << '/' << o.cases << " tuples fail)";
    out << '\n';
  };
  const auto findings = report.findings();
  out << "\nfindings: " << findings.size() << '\n';
  for (const auto* o : findings) line(*o);
  const auto sharp = report.sharpness();
  out << "\nequality cases: " << sharp.size() << '\n';
  for (const auto* o : sharp) line(*o);
  out << "\nviolations: " << report.violations() << '\n';
  std::size_t shown = 0;
  for (const auto& o : report.outcomes)
    if (o.is_violation() && shown++ < 50) line(o);
  if (report.violations() > 50) out << "  ... " << report.violations() - 50 << " more\n";
  std::size_t whole_group = 0;
  for (const auto& s : report.skipped) whole_group += s.check.empty();
  out << "\nskipped: " << report.skipped.size() << " (" << whole_group << " groups)\n";
  for (const auto& s : report.skipped)
    if (s.check.empty()) out << "  " << s.group << ": " << s.reason << '\n';
  out << "\nchecks " << report.checks() << ", passed " << report.passed() << ", violations "
      << report.violations() << ", findings " << findings.size() << ", " << std::fixed << std::setprecision(2)
      << report.seconds << " s\n";
  out.unsetf(std::ios::fixed);
}

}  // namespace nilprob

#include "nilprob/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilprob/bsgs.hpp"
#include "nilprob/catalog.hpp"
#include "nilprob/errors.hpp"
#include "nilprob/group_def.hpp"
#include "nilprob/montecarlo.hpp"
#include "nilprob/nilprob.hpp"
#include "nilprob/results_cache.hpp"
#include "nilprob/structure.hpp"
#include "nilprob/verify.hpp"

namespace nilprob {

using nlohmann::json;

namespace {

enum class Format { json, csv, table };

struct Globals {
  std::string format = "table";
  double budget_tuples = Budgets{}.tuples;
  double budget_shifts = Budgets{}.shifts;
  std::string cache_dir;
  bool no_cache = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint32_t max_order = kDefaultOrderCap;
  bool exhaustive_assoc = false;

  Format fmt() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::table;
  }
  Budgets budgets() const {
    Budgets b;
    b.tuples = budget_tuples;
    b.shifts = budget_shifts;
    b.fast_order = std::max(b.fast_order, max_order);
    return b;
  }
  BuildOptions build() const {
    BuildOptions o;
    o.max_order = max_order;
    o.force_exhaustive = exhaustive_assoc;
    return o;
  }
};

// One group given as a catalog name, a definition file or inline JSON.
struct GroupSource {
  std::string name;
  std::string file;
  std::string inline_json;

  void add_to(CLI::App* cmd) {
    auto* a = cmd->add_option("--group", name, "catalog name, e.g. \"S(3)\" or \"C(2)xQ8\"");
    auto* b = cmd->add_option("--group-file", file, "group-definition JSON file");
    auto* c = cmd->add_option("--group-json", inline_json, "inline group-definition JSON");
    a->excludes(b)->excludes(c);
    b->excludes(c);
  }

  GroupTable load(const BuildOptions& options) const {
    if (!name.empty()) return catalog_get(name, options.max_order);
    if (!file.empty()) return group_from_json(load_json_file(file), options);
    if (!inline_json.empty()) return group_from_json(parse_inline(inline_json), options);
    throw DefinitionError("no group given: use --group, --group-file or --group-json");
  }

  static json parse_inline(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DefinitionError("--group-json is not valid JSON");
    return j;
  }
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint32_t parse_u32(const std::string& s, const char* what) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw DefinitionError(std::string("bad ") + what + ": \"" + s + "\"");
  return v;
}

std::vector<Element> parse_elements(const GroupTable& g, const std::string& s, const char* what) {
  std::vector<Element> out;
  for (const auto& part : split(s, ',')) {
    const Element e = parse_u32(part, what);
    if (e >= g.order())
      throw DefinitionError(std::string(what) + " element " + part + " out of range for order " +
                            std::to_string(g.order()));
    out.push_back(e);
  }
  return out;
}

// G, 1, Z, N<i> (index into the sorted normal subgroups), a bare order when
// exactly one normal subgroup has it, or an explicit element list "0,3,4".
SubgroupRef resolve_normal(const GroupTable& g, const std::string& spec) {
  if (spec == "G") return SubgroupRef::whole(g);
  if (spec == "Z") return center(g);
  if (spec.find(',') != std::string::npos) {
    SubgroupRef h = SubgroupRef::from_elements(g, parse_elements(g, spec, "subgroup"));
    if (!is_normal(g, h)) throw NotNormal("subgroup " + spec + " is not normal");
    return h;
  }
  const auto normals = normal_subgroups(g);
  if (spec.size() > 1 && (spec[0] == 'N' || spec[0] == 'n')) {
    const std::uint32_t i = parse_u32(spec.substr(1), "normal subgroup index");
    if (i >= normals.size())
      throw DefinitionError("normal subgroup index " + spec + " out of range (" + std::to_string(normals.size()) +
                            " normal subgroups)");
    return normals[i];
  }
  const std::uint32_t order = parse_u32(spec, "subgroup spec");
  std::vector<const SubgroupRef*> hits;
  for (const auto& n : normals)
    if (n.size() == order) hits.push_back(&n);
  if (hits.empty()) throw DefinitionError("no normal subgroup of order " + spec);
  if (hits.size() > 1)
    throw DefinitionError(std::to_string(hits.size()) + " normal subgroups have order " + spec +
                          "; pick one with N<i> (see `describe`)");
  return *hits.front();
}

std::string join_elements(std::span<const Element> xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(w) + 2) << k << v << '\n';
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

std::unique_ptr<ResultsCache> open_cache(const Globals& gl, std::ostream& err) {
  const auto dir = resolve_cache_dir(gl.cache_dir, gl.no_cache);
  if (!dir) return std::make_unique<ResultsCache>();
  try {
    auto c = std::make_unique<ResultsCache>(*dir);
    if (c->ignored_lines())
      err << "note: ignored " << c->ignored_lines() << " stale or malformed cache lines in " << c->file().string()
          << '\n';
    return c;
  } catch (const Error& e) {
    err << "warning: " << e.what() << "; caching in memory only\n";
    return std::make_unique<ResultsCache>();
  }
}

// ---- np

struct NpArgs {
  GroupSource group;
  std::uint32_t k = 1;
  bool k_given = false;
  std::string normal;
  std::string cyclic;
  std::string elements;
  std::string shifts;
  bool cp = false;
  bool sup = false;
  std::string method = "dp";
};

int cmd_np(const Globals& gl, const NpArgs& a, std::ostream& out, std::ostream& err) {
  const GroupTable g = a.group.load(gl.build());
  const int chosen = !a.normal.empty() + !a.cyclic.empty() + !a.elements.empty();
  if (chosen > 1) throw DefinitionError("give at most one of --subgroup-normal, --subgroup-cyclic, --subgroup");
  SubgroupRef h = SubgroupRef::whole(g);
  std::string h_spec = "G";
  if (!a.normal.empty()) {
    h = resolve_normal(g, a.normal);
    h_spec = a.normal;
  } else if (!a.cyclic.empty()) {
    const Element x = parse_elements(g, a.cyclic, "generator").at(0);
    h = subgroup_closure(g, std::span<const Element>(&x, 1));
    h_spec = "<" + a.cyclic + ">";
  } else if (!a.elements.empty()) {
    h = SubgroupRef::from_elements(g, parse_elements(g, a.elements, "subgroup"));
    h_spec = "{" + a.elements + "}";
  }
  if (a.cp && a.sup) throw DefinitionError("--cp and --sup are exclusive");
  if (a.cp && !a.shifts.empty()) throw DefinitionError("--cp takes no shifts");
  if (a.sup && !a.shifts.empty()) throw DefinitionError("--sup maximizes over shifts; drop --shifts");

  const Budgets budgets = gl.budgets();
  auto cache = open_cache(gl, err);
  json j{{"group", g.label()}, {"order", g.order()}, {"subgroup", {{"spec", h_spec}, {"order", h.size()}}}};
  std::string quantity;
  std::uint32_t k = a.k;
  ShiftTuple shifts;
  bool hit = false;

  if (a.cp) {
    quantity = "cp";
    k = 1;
    const ExactProb v = cp(g, h);
    j["value"] = v.to_string();
    j["approx"] = v.to_double();
  } else if (a.sup) {
    quantity = "np_sup";
    const SupResult r = cached_np_sup(*cache, g, h, k, budgets, &hit);
    j.update(to_json(r));
    j["approx"] = r.value.to_double();
    shifts = r.witness;
  } else {
    quantity = "np";
    if (!a.shifts.empty()) {
      shifts = parse_elements(g, a.shifts, "shift");
      if (a.k_given && shifts.size() != k + 1)
        throw DefinitionError("--k " + std::to_string(k) + " needs " + std::to_string(k + 1) + " shifts, got " +
                              std::to_string(shifts.size()));
      k = static_cast<std::uint32_t>(shifts.size()) - 1;
    } else {
      shifts.assign(k + 1, kIdentity);
    }
    const Method m = a.method == "brute" ? Method::brute_force : Method::dp;
    const NpResult r = cached_np(*cache, g, h, shifts, m, budgets, &hit);
    j.update(to_json(r));
    j["approx"] = r.value.to_double();
  }
  j["quantity"] = quantity;
  j["k"] = k;
  if (!a.cp) j["shifts"] = shifts;
  j["cached"] = hit;

  switch (gl.fmt()) {
    case Format::json:
      out << j.dump(2) << '\n';
      break;
    case Format::csv:
      out << "group,k,quantity,subgroup,shifts,value\n"
          << csv_field(g.label()) << ',' << k << ',' << quantity << ',' << csv_field(h_spec) << ','
          << join_elements(shifts, ';') << ',' << j["value"].get<std::string>() << '\n';
      break;
    case Format::table: {
      std::vector<std::pair<std::string, std::string>> rows{
          {"group", g.label() + " (order " + std::to_string(g.order()) + ")"},
          {"subgroup", h_spec + " (order " + std::to_string(h.size()) + ")"},
          {"k", std::to_string(k)}};
      if (!a.cp) rows.emplace_back(a.sup ? "best shifts" : "shifts", join_elements(shifts, ','));
      rows.emplace_back(quantity, j["value"].get<std::string>() + "  (" + fixed(j["approx"].get<double>()) + ")");
      if (a.sup && j["readings_differ"].get<bool>())
        rows.emplace_back("last shift = 1", j["first_k_value"].get<std::string>());
      if (j.contains("method"))
        rows.emplace_back("method", j["method"].get<std::string>() + ", " + j["counted"].get<std::string>() + " of " +
                                        j["total"].get<std::string>() + " tuples");
      if (hit) rows.emplace_back("cache", "hit");
      print_rows(out, rows);
      break;
    }
  }
  return kExitOk;
}

// ---- estimate

struct EstimateArgs {
  std::string gens_file;
  std::string group;
  std::uint32_t k = 1;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  double z = kDefaultZ;
  std::uint64_t chunk_size = kDefaultChunkSize;
};

int cmd_estimate(const Globals& gl, const EstimateArgs& a, std::ostream& out, std::ostream& err) {
  if (a.samples == 0) {
    err << "error: --samples must be at least 1\n";
    return kExitError;
  }
  PermGenerators pg;
  std::string label;
  if (!a.gens_file.empty()) {
    const json doc = load_json_file(a.gens_file);
    pg = perm_gens_from_json(doc);
    label = doc.value("label", a.gens_file);
  } else if (!a.group.empty()) {
    pg = catalog_generators(a.group);
    label = canonical_catalog_name(a.group);
  } else {
    throw DefinitionError("no group given: use --gens-file or --group");
  }
  const PermGroupBSGS bsgs = PermGroupBSGS::schreier_sims(pg.gens);
  EstimateOptions opt;
  opt.k = a.k;
  opt.samples = a.samples;
  opt.seed = a.seed;
  opt.z = a.z;
  opt.chunk_size = a.chunk_size;
  opt.threads = gl.threads;
  const EstimateResult r = estimate_np(bsgs, opt);

  json j = to_json(r);
  j["group"] = label;
  j["order"] = bsgs.order().str();
  j["degree"] = bsgs.degree();
  switch (gl.fmt()) {
    case Format::json:
      out << j.dump(2) << '\n';
      break;
    case Format::csv:
      out << "group,k,samples,seed,hits,point,ci_low,ci_high,z\n"
          << csv_field(label) << ',' << r.k << ',' << r.samples << ',' << r.seed << ',' << r.hits << ','
          << fixed(r.point, 10) << ',' << fixed(r.ci_low, 10) << ',' << fixed(r.ci_high, 10) << ',' << r.z << '\n';
      break;
    case Format::table:
      print_rows(out, {{"group", label + " (order " + bsgs.order().str() + ", degree " + std::to_string(bsgs.degree()) + ")"},
                       {"k", std::to_string(r.k)},
                       {"samples", std::to_string(r.samples) + " (seed " + std::to_string(r.seed) + ")"},
                       {"hits", std::to_string(r.hits)},
                       {"estimate", fixed(r.point)},
                       {"wilson interval",
                        "[" + fixed(r.ci_low) + ", " + fixed(r.ci_high) + "]  z = " + fixed(r.z, 4)}});
      break;
  }
  return kExitOk;
}

// ---- verify

struct VerifyArgs {
  std::vector<std::string> groups;
  std::vector<std::string> files;
  std::vector<std::uint32_t> ks{1, 2, 3};
  std::vector<std::string> k_limits{"3:24"};
  std::vector<std::string> checks;
  bool cyclic = false;
  std::string report = "nilprob-report.json";
  std::uint32_t corpus_max_order = 64;
};

int cmd_verify(const Globals& gl, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  CorpusConfig config;
  config.ks = a.ks;
  config.k_order_limits.clear();
  for (const auto& lim : a.k_limits) {
    const auto parts = split(lim, ':');
    if (parts.size() != 2) throw DefinitionError("--k-limit takes K:ORDER, got \"" + lim + "\"");
    config.k_order_limits.emplace_back(parse_u32(parts[0], "k"), parse_u32(parts[1], "order"));
  }
  for (const auto& c : a.checks) {
    const auto& ids = all_check_ids();
    if (std::find(ids.begin(), ids.end(), c) == ids.end()) throw DefinitionError("unknown check: " + c);
    config.checks.insert(c);
  }
  config.cyclic_subgroups = a.cyclic;
  config.budgets = gl.budgets();
  config.threads = gl.threads;

  // Definition files and catalog names are resolved up front so a bad input
  // is an error rather than a skipped group.
  std::vector<CorpusEntry> corpus;
  const bool use_default = a.groups.empty() && a.files.empty();
  const std::vector<std::string> names = use_default ? default_corpus_names() : a.groups;
  for (const auto& n : names) catalog_generators(n);  // throws UnknownCatalogName
  corpus = catalog_corpus(names, use_default ? a.corpus_max_order : gl.max_order);
  for (const auto& f : a.files) {
    auto g = std::make_shared<GroupTable>(group_from_json(load_json_file(f), gl.build()));
    corpus.push_back({g->label().empty() ? f : g->label(), [g] { return *g; }});
  }

  auto cache = open_cache(gl, err);
  ResultsSupCache sups(*cache);
  config.sup_cache = &sups;

  const VerificationReport report = run_corpus(corpus, config);
  const json j = to_json(report, config);
  if (!a.report.empty()) {
    std::ofstream f(a.report);
    if (!f) throw Error("cannot write report " + a.report);
    f << j.dump(2) << '\n';
  }
  switch (gl.fmt()) {
    case Format::json:
      out << j.dump(2) << '\n';
      break;
    case Format::csv:
      write_csv(out, report);
      break;
    case Format::table:
      write_table(out, report);
      out << "elapsed " << fixed(report.seconds, 3) << " s";
      if (!a.report.empty()) out << ", report written to " << a.report;
      out << '\n';
      break;
  }
  if (!report.ok())
    err << report.violations() << " must-hold outcome(s) failed\n";
  return report.ok() ? kExitOk : kExitViolations;
}

// ---- describe

struct DescribeArgs {
  GroupSource group;
  bool emit_definition = false;
};

int cmd_describe(const Globals& gl, const DescribeArgs& a, std::ostream& out, std::ostream&) {
  const GroupTable g = a.group.load(gl.build());
  if (a.emit_definition) {
    out << group_to_definition(g).dump() << '\n';
    return kExitOk;
  }
  const ClassData classes = conjugacy_classes(g);
  const SubgroupRef z = center(g);
  const auto normals = normal_subgroups(g);
  const auto cls = nilpotency_class(g);
  std::vector<std::uint32_t> lcs;
  for (const auto& t : lower_central_series(g)) lcs.push_back(t.size());

  json j{{"group", g.label()},
         {"order", g.order()},
         {"classes", classes.count()},
         {"center_order", z.size()},
         {"normal_subgroups", normals.size()},
         {"normal_subgroup_orders", [&] {
            std::vector<std::uint32_t> v;
            for (const auto& n : normals) v.push_back(n.size());
            return v;
          }()},
         {"lower_central_series", lcs},
         {"fingerprint", g.fingerprint()}};
  if (cls)
    j["nilpotency_class"] = *cls;
  else
    j["nilpotency_class"] = "not nilpotent";
  const std::string cls_text = cls ? std::to_string(*cls) : "not nilpotent";
  auto series = [&](char sep) {
    std::string s;
    for (std::size_t i = 0; i < lcs.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(lcs[i]);
    return s;
  };

  switch (gl.fmt()) {
    case Format::json:
      out << j.dump(2) << '\n';
      break;
    case Format::csv:
      out << "group,order,classes,center_order,normal_subgroups,nilpotency_class,lower_central_series\n"
          << csv_field(g.label()) << ',' << g.order() << ',' << classes.count() << ',' << z.size() << ','
          << normals.size() << ',' << cls_text << ',' << series(';') << '\n';
      break;
    case Format::table: {
      std::string n_list;
      for (std::size_t i = 0; i < normals.size(); ++i)
        n_list += (i ? "  " : "") + std::string("N") + std::to_string(i) + ":" + std::to_string(normals[i].size());
      print_rows(out, {{"group", g.label()},
                       {"order", std::to_string(g.order())},
                       {"conjugacy classes", std::to_string(classes.count())},
                       {"center order", std::to_string(z.size())},
                       {"normal subgroups", std::to_string(normals.size()) + "  (" + n_list + ")"},
                       {"nilpotency class", cls_text},
                       {"lower central series", series(',')}});
      break;
    }
  }
  return kExitOk;
}

// ---- catalog

int cmd_catalog(const Globals& gl, bool corpus_only, std::ostream& out) {
  const auto fams = catalog_families();
  const auto names = default_corpus_names();
  switch (gl.fmt()) {
    case Format::json: {
      json f = json::array();
      for (const auto& c : fams)
        f.push_back({{"pattern", c.pattern}, {"description", c.description}, {"examples", c.examples}});
      json j{{"default_corpus", names}};
      if (!corpus_only) j["families"] = f;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::csv:
      if (corpus_only) {
        out << "name\n";
        for (const auto& n : names) out << csv_field(n) << '\n';
      } else {
        out << "pattern,description,examples\n";
        for (const auto& c : fams) {
          std::string ex;
          for (std::size_t i = 0; i < c.examples.size(); ++i) ex += (i ? ";" : "") + c.examples[i];
          out << csv_field(c.pattern) << ',' << csv_field(c.description) << ',' << csv_field(ex) << '\n';
        }
      }
      break;
    case Format::table:
      if (!corpus_only) {
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& c : fams) rows.emplace_back(c.pattern, c.description);
        print_rows(out, rows);
        out << "products: join factors with x, e.g. S(3)xC(2)\n\n";
      }
      out << "default verify corpus (" << names.size() << " groups):\n";
      for (std::size_t i = 0; i < names.size(); ++i) out << (i % 8 ? "  " : (i ? "\n  " : "  ")) << names[i];
      out << '\n';
      break;
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and sampled k-nilpotence probabilities of finite groups", "nilprob"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "help for every command");

  Globals gl;
  app.add_option("--format", gl.format, "output format")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--budget-tuples", gl.budget_tuples, "brute-force tuple budget")->check(CLI::PositiveNumber);
  app.add_option("--budget-shifts", gl.budget_shifts, "coset-tuple budget for sup computations")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", gl.cache_dir, "results cache directory (default $NILPROB_CACHE_DIR)");
  app.add_flag("--no-cache", gl.no_cache, "keep results in memory only");
  app.add_option("--threads", gl.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-order", gl.max_order, "largest group order to build")->check(CLI::PositiveNumber);
  app.add_flag("--exhaustive-assoc", gl.exhaustive_assoc, "check associativity on every triple");

  NpArgs np;
  auto* c_np = app.add_subcommand("np", "exact np_k, cp, np(H; shifts) or the sup over shifts");
  np.group.add_to(c_np);
  c_np->add_option("--k", np.k, "commutator length minus one")->check(CLI::Range(1u, 64u));
  c_np->add_option("--subgroup-normal", np.normal, "H: G, Z, N<i>, a unique order, or elements \"0,3,4\"");
  c_np->add_option("--subgroup-cyclic", np.cyclic, "H generated by this element index");
  c_np->add_option("--subgroup", np.elements, "H as an explicit element list");
  c_np->add_option("--shifts", np.shifts, "comma-separated element indices x_1..x_L");
  c_np->add_flag("--cp", np.cp, "commuting probability of H");
  c_np->add_flag("--sup", np.sup, "maximize over coset-representative shifts");
  c_np->add_option("--method", np.method, "dp or brute")->check(CLI::IsMember({"dp", "brute"}));

  EstimateArgs est;
  auto* c_est = app.add_subcommand("estimate", "Monte Carlo estimate of np_k with a Wilson interval");
  auto* gf = c_est->add_option("--gens-file", est.gens_file, "perm_gens, catalog or product definition");
  c_est->add_option("--group", est.group, "catalog name")->excludes(gf);
  c_est->add_option("--k", est.k)->check(CLI::Range(1u, 64u));
  c_est->add_option("--samples", est.samples);
  c_est->add_option("--seed", est.seed);
  c_est->add_option("--z", est.z, "interval critical value")->check(CLI::PositiveNumber);
  c_est->add_option("--chunk-size", est.chunk_size, "samples per random stream")->check(CLI::PositiveNumber);

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "run the inequality checks over a corpus");
  c_ver->add_option("--group", ver.groups, "catalog name (repeatable)");
  c_ver->add_option("--group-file", ver.files, "definition file (repeatable)");
  c_ver->add_option("--k", ver.ks, "values of k")->delimiter(',')->check(CLI::Range(1u, 64u));
  c_ver->add_option("--k-limit", ver.k_limits, "K:ORDER, run k only up to this group order (repeatable)")
      ->delimiter(',');
  c_ver->add_option("--check", ver.checks, "restrict to these check ids (repeatable)")->delimiter(',');
  c_ver->add_flag("--cyclic-subgroups", ver.cyclic, "also use non-normal cyclic subgroups as H");
  c_ver->add_option("--report", ver.report, "report JSON path; empty to skip");
  c_ver->add_option("--corpus-max-order", ver.corpus_max_order, "order cap for the default corpus");

  DescribeArgs desc;
  auto* c_desc = app.add_subcommand("describe", "structural summary of a group");
  desc.group.add_to(c_desc);
  c_desc->add_flag("--emit-definition", desc.emit_definition, "print a mul_table definition instead");

  bool corpus_only = false;
  auto* c_cat = app.add_subcommand("catalog", "list catalog families and the default corpus");
  c_cat->add_flag("--corpus", corpus_only, "only the default verify corpus");

  for (auto* sub : {c_np, c_est, c_ver, c_desc, c_cat}) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    np.k_given = c_np->count("--k") > 0;
    if (c_np->parsed()) return cmd_np(gl, np, out, err);
    if (c_est->parsed()) return cmd_estimate(gl, est, out, err);
    if (c_ver->parsed()) return cmd_verify(gl, ver, out, err);
    if (c_desc->parsed()) return cmd_describe(gl, desc, out, err);
    if (c_cat->parsed()) return cmd_catalog(gl, corpus_only, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n(try a larger budget, or `estimate` for a sampled value)\n";
    return kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace nilprob

#include "rcp/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "rcp/analysis.hpp"
#include "rcp/graph.hpp"
#include "rcp/resilience.hpp"
#include "rcp/supercore.hpp"

namespace rcp::cli {

namespace {

namespace fs = std::filesystem;

constexpr std::size_t kMemberListLimit = 10000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string attributes;
  std::string config;
  std::string format = "json";
  std::string output;
  std::optional<std::size_t> alpha;
  std::size_t beta = 3;
  std::string beta_range = "3:10";
  std::size_t threshold = 1000;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> centers;
  std::string buckets;
  std::string dataset;
  std::string network = "Friendship";
  bool emit_members = false;
  bool mutual = false;
  bool retain_isolated = false;
};

SocialGraph load_input(const Options& o, std::ostream& err) {
  LoadOptions lo;
  lo.mode = o.mutual ? LoadMode::kMutualOnly : LoadMode::kUndirected;
  lo.retain_isolated = o.retain_isolated;
  LoadReport report;
  try {
    auto g = load_edge_list_file(o.input, lo, &report);
    if (report.self_loops_dropped + report.duplicates_collapsed + report.unreciprocated_dropped >
        0) {
      err << fmt::format(
          "note: dropped {} self-loops, collapsed {} duplicates, dropped {} one-way links\n",
          report.self_loops_dropped, report.duplicates_collapsed, report.unreciprocated_dropped);
    }
    return g;
  } catch (const ParseError& e) {
    throw InputError(fmt::format("{}: {}", o.input, e.what()));
  } catch (const std::ios_base::failure& e) {
    throw InputError(fmt::format("{}: {}", o.input, e.what()));
  } catch (const std::runtime_error& e) {
    throw InputError(fmt::format("{}: {}", o.input, e.what()));
  }
}

// Writes to DIR/<name> when --output is set, otherwise to `out`.
void emit(const Options& o, const std::string& name, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  fs::create_directories(o.output);
  fs::path path = fs::path(o.output) / name;
  std::ofstream file(path);
  if (!file) throw InputError(fmt::format("cannot write {}", path.string()));
  file << text;
  out << path.string() << '\n';
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

void require_input(const Options& o) {
  if (o.input.empty()) throw UsageError("--input is required");
}

void reject_table(const Options& o, const char* command) {
  if (o.format == "table") {
    throw UsageError(fmt::format("--format table is only available for stats, not {}", command));
  }
}

RcpPolicy make_policy(std::size_t alpha, std::size_t beta) {
  try {
    return RcpPolicy(static_cast<std::uint32_t>(alpha), static_cast<std::uint32_t>(beta));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

BetaRange parse_betas(const Options& o) {
  try {
    return BetaRange::parse(o.beta_range);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_stats(const Options& o, std::ostream& out, std::ostream& err) {
  require_input(o);
  SocialGraph g = load_input(o, err);
  if (g.node_count() == 0) throw InputError(fmt::format("{}: graph has no nodes", o.input));
  GraphStats s = graph_stats(g);
  if (o.format == "json") {
    nlohmann::ordered_json j{{"nodes", s.node_count},
                             {"links", s.link_count},
                             {"avg_degree", round6(s.avg_degree)},
                             {"clustering_coefficient", round6(s.clustering_coefficient)}};
    emit(o, "stats.json", dump(j), out);
  } else if (o.format == "csv") {
    emit(o, "stats.csv",
         fmt::format("nodes,links,avg_degree,clustering_coefficient\n{},{},{},{}\n", s.node_count,
                     s.link_count, fixed6(s.avg_degree), fixed6(s.clustering_coefficient)),
         out);
  } else {
    std::string dataset = o.dataset.empty() ? fs::path(o.input).stem().string() : o.dataset;
    std::string text = "Dataset & Network & Nodes & Links & Avg deg & C.C. \\\\\n";
    text += fmt::format("{} & {} & {} & {} & {:.2f} & {:.3f} \\\\\n", dataset, o.network,
                        s.node_count, s.link_count, s.avg_degree, s.clustering_coefficient);
    emit(o, "stats.txt", text, out);
  }
  return kOk;
}

std::vector<NodeId> resolve_centers(const SocialGraph& g, const std::vector<std::string>& names) {
  std::vector<NodeId> ids;
  for (const auto& name : names) {
    if (auto v = g.find(name)) {
      ids.push_back(*v);
      continue;
    }
    auto close = near_matches(name, g.labels());
    std::string hint = close.empty() ? "" : fmt::format("; did you mean: {}?", fmt::join(close, ", "));
    throw UsageError(fmt::format("unknown center '{}'{}", name, hint));
  }
  return ids;
}

std::string join_labels(const SocialGraph& g, const NodeSet& nodes) {
  auto names = labels_of(g, nodes);
  std::sort(names.begin(), names.end());
  return fmt::format("{}", fmt::join(names, ";"));
}

int cmd_domains(const Options& o, std::ostream& out, std::ostream& err) {
  require_input(o);
  reject_table(o, "domains");
  RcpPolicy p = make_policy(o.alpha.value_or(o.beta + 1), o.beta);
  SocialGraph g = load_input(o, err);
  std::vector<NodeId> rows = o.centers.empty() ? std::vector<NodeId>{} : resolve_centers(g, o.centers);
  if (o.centers.empty()) {
    rows.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) rows[v] = v;
  }
  std::sort(rows.begin(), rows.end(),
            [&](NodeId a, NodeId b) { return g.label(a) < g.label(b); });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  const bool members = o.emit_members || g.node_count() <= kMemberListLimit;

  SupercorePipeline pipe(g, p);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["policy"] = {{"alpha", p.alpha()}, {"beta", p.beta()}};
    j["supercore_count"] = pipe.dag.supercores.size();
    j["dag_edges"] = pipe.dag.edge_count();
    auto list = nlohmann::ordered_json::array();
    for (NodeId v : rows) {
      nlohmann::ordered_json r{{"label", g.label(v)},
                               {"supercore", pipe.supercore_of(v)},
                               {"backbone_size", pipe.backbone_size(v)},
                               {"domain_size", pipe.domain_size(v)}};
      if (members) {
        auto b = labels_of(g, pipe.backbone_of(v));
        auto d = labels_of(g, pipe.domain_of(v));
        std::sort(b.begin(), b.end());
        std::sort(d.begin(), d.end());
        r["backbone"] = b;
        r["domain"] = d;
      }
      list.push_back(std::move(r));
    }
    j["nodes"] = std::move(list);
    emit(o, "domains.json", dump(j), out);
  } else {
    std::string text = members ? "label,supercore,backbone_size,domain_size,backbone,domain\n"
                               : "label,supercore,backbone_size,domain_size\n";
    for (NodeId v : rows) {
      text += fmt::format("{},{},{},{}", g.label(v), pipe.supercore_of(v), pipe.backbone_size(v),
                          pipe.domain_size(v));
      if (members) {
        text += fmt::format(",{},{}", join_labels(g, pipe.backbone_of(v)),
                            join_labels(g, pipe.domain_of(v)));
      }
      text += '\n';
    }
    emit(o, "domains.csv", text, out);
  }
  return kOk;
}

std::vector<DegreeBucket> parse_buckets(const std::string& text) {
  if (text.empty()) return {};
  std::vector<std::size_t> cuts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      cuts.push_back(std::stoull(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(fmt::format("bad bucket cut point '{}'", item));
    }
  }
  try {
    return buckets_from_edges(cuts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  require_input(o);
  reject_table(o, "sweep");
  BetaRange betas = parse_betas(o);
  if (o.alpha) make_policy(*o.alpha, betas.lo);
  auto buckets = parse_buckets(o.buckets);
  SocialGraph g = load_input(o, err);
  SweepResult r;
  try {
    r = sweep_domains(g, betas, o.threshold, o.alpha, buckets);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (o.format == "json") {
    emit(o, "sweep.json", dump(r.to_json()), out);
  } else {
    emit(o, "sweep.csv", r.to_csv(), out);
  }
  return kOk;
}

int cmd_puls(const Options& o, std::ostream& out, std::ostream& err) {
  require_input(o);
  reject_table(o, "puls");
  if (o.attributes.empty()) throw UsageError("--attributes is required");
  BetaRange betas = parse_betas(o);
  if (o.alpha) make_policy(*o.alpha, betas.lo);
  SocialGraph g = load_input(o, err);
  std::vector<std::pair<std::string, std::string>> attributes;
  try {
    attributes = load_attributes_file(o.attributes);
  } catch (const std::runtime_error& e) {
    throw InputError(fmt::format("{}: {}", o.attributes, e.what()));
  }
  PulsTable t;
  try {
    t = compute_puls(g, attributes, betas, o.alpha);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (!t.unknown_labels.empty()) {
    std::vector<std::string> shown(t.unknown_labels.begin(),
                                   t.unknown_labels.begin() +
                                       static_cast<std::ptrdiff_t>(std::min<std::size_t>(
                                           t.unknown_labels.size(), 10)));
    err << fmt::format("warning: skipped {} attribute rows naming unknown nodes: {}{}\n",
                       t.unknown_labels.size(), fmt::join(shown, ", "),
                       t.unknown_labels.size() > shown.size() ? ", ..." : "");
  }
  if (o.format == "json") {
    emit(o, "puls.json", dump(t.to_json()), out);
  } else {
    emit(o, "puls.csv", t.to_csv(), out);
  }
  return kOk;
}

struct SimulationConfig {
  PlantedConfig graph;
  std::uint64_t base_seed = 1;
  std::size_t seed_count = 50;
  std::vector<RcpPolicy> policies{RcpPolicy(4, 3)};
  std::size_t baseline_hops = 2;
  bool negative_control = false;
  std::optional<AttackSpec> attack;
};

SimulationConfig parse_simulation_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open config {}", path));
  SimulationConfig c;
  try {
    auto j = nlohmann::json::parse(in);
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    static const std::vector<std::string> known{"graph",           "seeds",  "policies",
                                                "baseline_hops",   "attack", "negative_control"};
    for (const auto& [key, value] : j.items()) {
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        throw std::invalid_argument(fmt::format("unknown config key '{}'", key));
      }
    }
    if (j.contains("graph")) c.graph = PlantedConfig::from_json(j.at("graph"));
    if (j.contains("seeds")) {
      c.base_seed = j.at("seeds").value("base", c.base_seed);
      c.seed_count = j.at("seeds").value("count", c.seed_count);
    }
    if (j.contains("policies")) {
      c.policies.clear();
      for (const auto& p : j.at("policies")) {
        c.policies.emplace_back(p.at("alpha").get<std::uint32_t>(), p.at("beta").get<std::uint32_t>());
      }
    }
    c.baseline_hops = j.value("baseline_hops", c.baseline_hops);
    c.negative_control = j.value("negative_control", false);
    if (j.contains("attack")) c.attack = AttackSpec::from_json(j.at("attack"));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(fmt::format("{}: {}", path, e.what()));
  }
  if (c.seed_count == 0 || c.policies.empty()) {
    throw InputError(fmt::format("{}: need at least one seed and one policy", path));
  }
  return c;
}

struct SeedResult {
  std::uint64_t seed = 0;
  nlohmann::ordered_json json;
  std::vector<ResilienceReport> reports;
  bool assumptions_ok = true;
};

// Runs fn(i) for i in [0, n) on a small pool; results are stored by index.
template <typename Fn>
void parallel_for(std::size_t n, Fn fn) {
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_lock);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

SeedResult simulate_seed(const SimulationConfig& c, std::uint64_t seed) {
  SeedResult r;
  r.seed = seed;
  PlantedGraph pg = generate_planted_graph(c.graph, seed);
  if (c.negative_control) pg = inject_strong_bad_tie(pg, seed);
  AssumptionReport a = verify_assumptions(pg);
  r.assumptions_ok = a.all_ok();
  r.json["seed"] = seed;
  r.json["nodes"] = pg.graph.node_count();
  r.json["edges"] = pg.graph.edge_count();
  r.json["bad"] = pg.bad_count();
  r.json["repair"] = {{"cross_sampled", pg.repair.cross_sampled},
                      {"a2_removed", pg.repair.a2_removed},
                      {"a3_removed", pg.repair.a3_removed}};
  auto aj = a.to_json(pg.graph);
  aj["mean_bad_fraction"] = round6(a.mean_bad_fraction);
  for (auto& w : aj["worst_a1"]) w["bad_fraction"] = round6(w["bad_fraction"].get<double>());
  r.json["assumptions"] = std::move(aj);
  auto reports = nlohmann::ordered_json::array();
  for (const auto& p : c.policies) {
    r.reports.push_back(measure_domain_resilience(pg, p));
    auto rj = r.reports.back().to_json(pg.graph, false);
    for (const char* key : {"mean_domain_bad_fraction", "standard_error", "max_analytic_bound"}) {
      rj[key] = round6(rj[key].get<double>());
    }
    reports.push_back(std::move(rj));
  }
  r.json["policies"] = std::move(reports);
  auto base = friend_of_friend_baseline(pg, c.baseline_hops).to_json();
  base["mean_bad_fraction"] = round6(base["mean_bad_fraction"].get<double>());
  r.json["baseline"] = std::move(base);
  if (c.attack) {
    AttackSpec spec = *c.attack;
    spec.seed += seed;
    auto outcome = mass_infiltration_attack(pg, spec, c.policies.front());
    r.json["attack"] = {
        {"cross_attempted", outcome.cross_attempted},
        {"cross_accepted", outcome.cross_accepted},
        {"purity_violations_before", outcome.before.purity_violations()},
        {"purity_violations_after", outcome.after.purity_violations()},
        {"mean_bad_fraction_before", round6(outcome.before.mean)},
        {"mean_bad_fraction_after", round6(outcome.after.mean)},
        {"baseline_mean_bad_fraction_before", round6(outcome.baseline_before.mean_bad_fraction)},
        {"baseline_mean_bad_fraction_after", round6(outcome.baseline_after.mean_bad_fraction)}};
    if (outcome.after.guaranteed && outcome.after.purity_violations() > 0) {
      r.reports.push_back(outcome.after);
    }
  }
  return r;
}

double mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

double standard_error(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1) / static_cast<double>(xs.size()));
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.config.empty()) throw UsageError("--config is required");
  reject_table(o, "simulate");
  SimulationConfig c = parse_simulation_config(o.config);
  if (o.seed) c.base_seed = *o.seed;

  std::vector<SeedResult> results(c.seed_count);
  try {
    parallel_for(c.seed_count, [&](std::size_t i) {
      results[i] = simulate_seed(c, c.base_seed + i);
    });
  } catch (const std::invalid_argument& e) {
    throw InputError(fmt::format("{}: {}", o.config, e.what()));
  }

  bool failed = false;
  auto offenders = nlohmann::ordered_json::array();
  auto summary = nlohmann::ordered_json::array();
  std::string csv =
      "seed,alpha,beta,guaranteed,purity_violations,mean_domain_bad_fraction,standard_error,"
      "max_analytic_bound\n";
  for (const auto& r : results) {
    if (!r.assumptions_ok) {
      failed = true;
      offenders.push_back({{"seed", r.seed}, {"assumptions", r.json["assumptions"]}});
    }
    for (std::size_t k = 0; k < r.reports.size(); ++k) {
      const auto& rep = r.reports[k];
      if (rep.guaranteed && rep.purity_violations() > 0) {
        failed = true;
        offenders.push_back({{"seed", r.seed},
                             {"policy", {{"alpha", rep.policy.alpha()}, {"beta", rep.policy.beta()}}},
                             {"purity_violations", rep.purity_violations()},
                             {"after_attack", k >= c.policies.size()}});
      }
      if (k >= c.policies.size()) continue;
      csv += fmt::format("{},{},{},{},{},{},{},{}\n", r.seed, rep.policy.alpha(), rep.policy.beta(),
                         rep.guaranteed ? 1 : 0, rep.purity_violations(), fixed6(rep.mean),
                         fixed6(rep.standard_error), fixed6(rep.max_bound));
    }
  }
  for (std::size_t k = 0; k < c.policies.size(); ++k) {
    std::vector<double> means;
    std::size_t violations = 0;
    double max_bound = 0.0;
    for (const auto& r : results) {
      means.push_back(r.reports[k].mean);
      violations += r.reports[k].purity_violations();
      max_bound = std::max(max_bound, r.reports[k].max_bound);
    }
    double m = mean(means);
    double se = standard_error(means);
    summary.push_back({{"alpha", c.policies[k].alpha()},
                       {"beta", c.policies[k].beta()},
                       {"guaranteed", results.front().reports[k].guaranteed},
                       {"seeds", results.size()},
                       {"purity_violations", violations},
                       {"mean_domain_bad_fraction", round6(m)},
                       {"standard_error", round6(se)},
                       {"upper_3se", round6(m + 3 * se)},
                       {"r", c.graph.params.r},
                       {"below_r", m + 3 * se < c.graph.params.r},
                       {"max_analytic_bound", round6(max_bound)}});
  }

  nlohmann::ordered_json report;
  report["status"] = failed ? "invariant_failure" : "ok";
  report["config"] = {{"graph", c.graph.to_json()},
                      {"seeds", {{"base", c.base_seed}, {"count", c.seed_count}}},
                      {"negative_control", c.negative_control}};
  report["summary"] = std::move(summary);
  report["offenders"] = offenders;
  auto per_seed = nlohmann::ordered_json::array();
  for (auto& r : results) per_seed.push_back(std::move(r.json));
  report["seeds"] = std::move(per_seed);

  if (!o.output.empty()) {
    emit(o, "simulation.json", dump(report), out);
    emit(o, "simulation.csv", csv, out);
  } else if (o.format == "json") {
    out << dump(report);
  } else {
    out << csv;
  }
  if (failed) {
    err << fmt::format("invariant failure: {} offending entries\n", offenders.size());
    err << offenders.dump(2) << '\n';
    return kInvariant;
  }
  return kOk;
}

}  // namespace

std::vector<std::string> near_matches(const std::string& query,
                                      const std::vector<std::string>& labels, std::size_t limit) {
  auto distance = [](const std::string& a, const std::string& b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
      std::size_t diag = row[0];
      row[0] = i;
      for (std::size_t j = 1; j <= b.size(); ++j) {
        std::size_t up = row[j];
        row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] != b[j - 1])});
        diag = up;
      }
    }
    return row[b.size()];
  };
  const std::size_t cap = std::max<std::size_t>(2, query.size() / 3);
  std::vector<std::pair<std::size_t, std::string>> scored;
  for (const auto& l : labels) {
    std::size_t d = distance(query, l);
    if (d <= cap) scored.emplace_back(d, l);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (std::size_t i = 0; i < scored.size() && i < limit; ++i) out.push_back(scored[i].second);
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Responsible-citizen percolation domains for social graphs"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"json", "csv", "table"};

  auto add_graph_flags = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "Edge list: two node labels per line");
    sub->add_flag("--mutual", o.mutual, "Keep only reciprocated links");
    sub->add_flag("--retain-isolated", o.retain_isolated, "Keep nodes without links");
  };
  auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json, csv or table")->check(CLI::IsMember(formats));
    sub->add_option("--output", o.output, "Write report files into this directory");
  };

  auto* stats = app.add_subcommand("stats", "Node and link counts, average degree, clustering");
  add_graph_flags(stats);
  add_output_flags(stats);
  stats->add_option("--dataset", o.dataset, "Dataset name for the table row");
  stats->add_option("--network", o.network, "Network kind for the table row");

  auto* domains = app.add_subcommand("domains", "Backbone and domain size per node");
  add_graph_flags(domains);
  add_output_flags(domains);
  domains->add_option("--alpha", o.alpha, "Sentinel count (default beta + 1)");
  domains->add_option("--beta", o.beta, "Strong-tie threshold");
  domains->add_option("--center", o.centers, "Restrict output to these node labels");
  domains->add_flag("--emit-members", o.emit_members, "List members even on large graphs");

  auto* sweep = app.add_subcommand("sweep", "Share of nodes with large domains per degree bucket");
  add_graph_flags(sweep);
  add_output_flags(sweep);
  sweep->add_option("--beta-range", o.beta_range, "Inclusive range A:B");
  sweep->add_option("--alpha", o.alpha, "Fixed sentinel count (default beta + 1)");
  sweep->add_option("--threshold", o.threshold, "Minimum domain size");
  sweep->add_option("--buckets", o.buckets, "Degree cut points, e.g. 2,8,32");

  auto* puls = app.add_subcommand("puls", "Share of each group inside the largest supercore");
  add_graph_flags(puls);
  add_output_flags(puls);
  puls->add_option("--attributes", o.attributes, "TSV: node label, group label");
  puls->add_option("--beta-range", o.beta_range, "Inclusive range A:B");
  puls->add_option("--alpha", o.alpha, "Fixed sentinel count (default beta + 1)");

  auto* simulate = app.add_subcommand("simulate", "Planted good/bad citizen experiments");
  simulate->add_option("--config", o.config, "Experiment JSON");
  simulate->add_option("--seed", o.seed, "Override the base seed");
  add_output_flags(simulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*stats) return cmd_stats(o, out, err);
    if (*domains) return cmd_domains(o, out, err);
    if (*sweep) return cmd_sweep(o, out, err);
    if (*puls) return cmd_puls(o, out, err);
    return cmd_simulate(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kParse;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"rcp"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace rcp::cli

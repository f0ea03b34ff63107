#include "rcp/resilience.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_set>

#include <fmt/format.h>

namespace rcp {

namespace {

using Adjacency = std::vector<std::vector<NodeId>>;

std::uint64_t pack(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (std::uint64_t{u} << 32) | v;
}

Adjacency to_adjacency(const SocialGraph& g) {
  Adjacency adj(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto nb = g.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  return adj;
}

SocialGraph from_adjacency(const Adjacency& adj, std::vector<std::string> labels) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < adj.size(); ++u) {
    for (NodeId v : adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return SocialGraph::from_edges(adj.size(), edges, std::move(labels));
}

void add_edge(Adjacency& adj, NodeId u, NodeId v) {
  adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
  adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

bool has_edge(const Adjacency& adj, NodeId u, NodeId v) {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::string> planted_labels(std::size_t n_good, std::size_t n_bad) {
  std::vector<std::string> labels;
  labels.reserve(n_good + n_bad);
  for (std::size_t i = 0; i < n_good; ++i) labels.push_back(fmt::format("h{}", i));
  for (std::size_t i = 0; i < n_bad; ++i) labels.push_back(fmt::format("b{}", i));
  return labels;
}

// Components of the subgraph induced by `nodes`; returns them largest first.
template <typename Neighbors>
std::vector<std::vector<NodeId>> induced_components(const std::vector<NodeId>& nodes,
                                                    Neighbors neighbors,
                                                    std::vector<std::uint32_t>& stamp,
                                                    std::uint32_t& token) {
  ++token;
  for (NodeId v : nodes) stamp[v] = token;
  ++token;
  std::vector<std::vector<NodeId>> comps;
  for (NodeId s : nodes) {
    if (stamp[s] != token - 1) continue;
    std::vector<NodeId> comp{s};
    stamp[s] = token;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (NodeId w : neighbors(comp[head])) {
        if (stamp[w] == token - 1) {
          stamp[w] = token;
          comp.push_back(w);
        }
      }
    }
    comps.push_back(std::move(comp));
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return comps;
}

double mean_of(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double standard_error_of(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  double var = ss / static_cast<double>(xs.size() - 1);
  return std::sqrt(var / static_cast<double>(xs.size()));
}

}  // namespace

nlohmann::ordered_json PlantedConfig::to_json() const {
  return {{"n_good", n_good},
          {"n_bad", n_bad},
          {"r", params.r},
          {"x", params.x},
          {"y", params.y},
          {"good_model", good_model},
          {"clustered", clustered.to_json()},
          {"er_degree", er_degree},
          {"bad_density", bad_density},
          {"cross_scale", cross_scale}};
}

PlantedConfig PlantedConfig::from_json(const nlohmann::json& j) {
  PlantedConfig c;
  c.n_good = j.value("n_good", c.n_good);
  c.n_bad = j.value("n_bad", c.n_bad);
  c.params = BehaviorParams::make(j.value("r", c.params.r), j.value("x", c.params.x),
                                  j.value("y", c.params.y));
  c.good_model = j.value("good_model", c.good_model);
  if (j.contains("clustered")) c.clustered = ClusteredGraphConfig::from_json(j.at("clustered"));
  c.er_degree = j.value("er_degree", c.er_degree);
  c.bad_density = j.value("bad_density", c.bad_density);
  c.cross_scale = j.value("cross_scale", c.cross_scale);
  return c;
}

std::vector<NodeId> PlantedGraph::good_nodes() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < labels.size(); ++v) {
    if (labels[v] == Citizen::kGood) out.push_back(v);
  }
  return out;
}

std::size_t PlantedGraph::bad_count() const {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), Citizen::kBad));
}

PlantedGraph make_planted_graph(SocialGraph graph, std::vector<Citizen> labels,
                                BehaviorParams params, std::uint64_t seed) {
  if (labels.size() != graph.node_count()) {
    throw std::invalid_argument("one citizen label per node is required");
  }
  PlantedGraph pg;
  pg.graph = std::move(graph);
  pg.labels = std::move(labels);
  pg.params = params;
  pg.seed = seed;
  return pg;
}

PlantedGraph generate_planted_graph(const PlantedConfig& config, std::uint64_t seed) {
  if (config.n_good < 1) throw std::invalid_argument("n_good must be at least 1");
  if (config.cross_scale < 0.0 || config.bad_density < 0.0 || config.bad_density > 1.0) {
    throw std::invalid_argument("cross_scale must be >= 0 and bad_density in [0, 1]");
  }
  const std::size_t n_good = config.n_good;
  const std::size_t n_bad = config.n_bad;
  const std::size_t n = n_good + n_bad;
  std::mt19937_64 rng(seed);

  std::vector<Edge> edges;
  if (config.good_model == "clique_overlap") {
    ClusteredGraphConfig cc = config.clustered;
    cc.nodes = n_good;
    cc.communities = std::min(cc.communities, n_good);
    edges = clustered_edges(cc, rng);
  } else if (config.good_model == "erdos_renyi") {
    double density = n_good > 1 ? config.er_degree / static_cast<double>(n_good - 1) : 0.0;
    edges = random_edges(n_good, density, rng);
  } else {
    throw std::invalid_argument(fmt::format("unknown good model '{}'", config.good_model));
  }
  const SocialGraph good_only = SocialGraph::from_edges(n_good, edges);

  auto bad_edges = random_edges(n_bad, config.bad_density, rng, static_cast<NodeId>(n_good));
  edges.insert(edges.end(), bad_edges.begin(), bad_edges.end());

  // Cross ties: each good-good tie of i brings i a bad friend w.p. r * scale.
  RepairStats repair;
  std::vector<Edge> cross;
  if (n_bad > 0) {
    const double q = std::min(1.0, config.params.r * config.cross_scale);
    std::uniform_int_distribution<std::size_t> pick_bad(0, n_bad - 1);
    std::vector<NodeId> chosen;
    for (NodeId i = 0; i < n_good; ++i) {
      std::binomial_distribution<std::size_t> count(good_only.degree(i), q);
      std::size_t k = std::min(count(rng), n_bad);
      chosen.clear();
      while (chosen.size() < k) {
        auto b = static_cast<NodeId>(n_good + pick_bad(rng));
        if (std::find(chosen.begin(), chosen.end(), b) == chosen.end()) chosen.push_back(b);
      }
      for (NodeId b : chosen) cross.emplace_back(i, b);
    }
  }
  repair.cross_sampled = cross.size();

  std::vector<Citizen> labels(n, Citizen::kGood);
  std::fill(labels.begin() + static_cast<std::ptrdiff_t>(n_good), labels.end(), Citizen::kBad);

  // A2 repair: drop every cross tie with >= x common friends. Deletions only
  // lower common-friend counts, so one pass settles it.
  std::vector<Edge> all = edges;
  all.insert(all.end(), cross.begin(), cross.end());
  SocialGraph g = SocialGraph::from_edges(n, all);
  Adjacency adj = to_adjacency(g);
  std::unordered_set<std::uint64_t> removed;
  for (const auto& [i, b] : cross) {
    if (count_common(g.neighbors(i), g.neighbors(b)) >= config.params.x) {
      if (removed.insert(pack(i, b)).second) ++repair.a2_removed;
    }
  }
  auto erase_edge = [&](NodeId u, NodeId v) {
    auto& au = adj[u];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
    auto& av = adj[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
  };
  for (std::uint64_t key : removed) {
    erase_edge(static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffu));
  }

  // A3 repair: while a bad node's good friends contain a connected group of
  // size >= y, cut its tie to the best-connected member of that group.
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t token = 0;
  auto good_neighbors = [&](NodeId v) -> const std::vector<NodeId>& { return adj[v]; };
  for (NodeId b = static_cast<NodeId>(n_good); b < n; ++b) {
    while (true) {
      std::vector<NodeId> friends;
      for (NodeId w : adj[b]) {
        if (labels[w] == Citizen::kGood) friends.push_back(w);
      }
      auto comps = induced_components(friends, good_neighbors, stamp, token);
      if (comps.empty() || comps.front().size() < config.params.y) break;
      const auto& comp = comps.front();
      std::vector<NodeId> sorted_comp(comp.begin(), comp.end());
      std::sort(sorted_comp.begin(), sorted_comp.end());
      NodeId cut = sorted_comp.front();
      std::size_t best = 0;
      for (NodeId v : sorted_comp) {
        std::size_t inside = count_common(adj[v], sorted_comp);
        if (inside > best) {
          best = inside;
          cut = v;
        }
      }
      erase_edge(b, cut);
      ++repair.a3_removed;
    }
  }

  PlantedGraph pg;
  pg.graph = from_adjacency(adj, planted_labels(n_good, n_bad));
  pg.labels = std::move(labels);
  pg.params = config.params;
  pg.seed = seed;
  pg.repair = repair;
  return pg;
}

nlohmann::ordered_json AssumptionReport::to_json(const SocialGraph& g) const {
  nlohmann::ordered_json j;
  j["a1_ok"] = a1_ok;
  j["a2_ok"] = a2_ok;
  j["a3_ok"] = a3_ok;
  j["mean_bad_fraction"] = mean_bad_fraction;
  auto worst = nlohmann::ordered_json::array();
  for (const auto& [v, f] : worst_a1) worst.push_back({{"node", g.label(v)}, {"bad_fraction", f}});
  j["worst_a1"] = std::move(worst);
  auto a2 = nlohmann::ordered_json::array();
  for (const auto& [e, c] : a2_offenders) {
    a2.push_back({{"good", g.label(e.first)}, {"bad", g.label(e.second)}, {"common", c}});
  }
  j["a2_offenders"] = std::move(a2);
  auto a3 = nlohmann::ordered_json::array();
  for (const auto& [b, size] : a3_offenders) {
    a3.push_back({{"bad", g.label(b)}, {"good_group", size}});
  }
  j["a3_offenders"] = std::move(a3);
  return j;
}

AssumptionReport verify_assumptions(const PlantedGraph& pg) {
  const SocialGraph& g = pg.graph;
  AssumptionReport rep;
  std::vector<std::pair<NodeId, double>> fractions;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (pg.is_bad(v) || g.degree(v) == 0) continue;
    std::size_t bad = 0;
    for (NodeId w : g.neighbors(v)) bad += pg.is_bad(w);
    fractions.emplace_back(v, static_cast<double>(bad) / static_cast<double>(g.degree(v)));
  }
  double total = 0.0;
  for (const auto& [v, f] : fractions) total += f;
  rep.mean_bad_fraction = fractions.empty() ? 0.0 : total / static_cast<double>(fractions.size());
  rep.a1_ok = rep.mean_bad_fraction <= pg.params.r;
  std::stable_sort(fractions.begin(), fractions.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  fractions.resize(std::min<std::size_t>(fractions.size(), 5));
  rep.worst_a1 = std::move(fractions);

  std::vector<std::uint32_t> stamp(g.node_count(), 0);
  std::uint32_t token = 0;
  auto neighbors = [&](NodeId v) { return g.neighbors(v); };
  for (NodeId b = 0; b < g.node_count(); ++b) {
    if (!pg.is_bad(b)) continue;
    std::vector<NodeId> friends;
    for (NodeId w : g.neighbors(b)) {
      if (pg.is_bad(w)) continue;
      friends.push_back(w);
      std::size_t common = count_common(g.neighbors(w), g.neighbors(b));
      if (common >= pg.params.x) rep.a2_offenders.push_back({{w, b}, common});
    }
    auto comps = induced_components(friends, neighbors, stamp, token);
    if (!comps.empty() && comps.front().size() >= pg.params.y) {
      rep.a3_offenders.emplace_back(b, comps.front().size());
    }
  }
  rep.a2_ok = rep.a2_offenders.empty();
  rep.a3_ok = rep.a3_offenders.empty();
  return rep;
}

std::size_t PurityReport::total_bad() const {
  return std::accumulate(bad_counts.begin(), bad_counts.end(), std::size_t{0});
}

std::vector<NodeId> PurityReport::offending_centers() const {
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (bad_counts[i] > 0) out.push_back(centers[i]);
  }
  return out;
}

PurityReport measure_backbone_purity(const PlantedGraph& pg, const RcpPolicy& p) {
  PurityReport rep;
  rep.guaranteed = validate_policy_alignment(p, pg.params);
  rep.centers = pg.good_nodes();
  BackboneComposer composer(pg.graph, p);
  auto batch = composer.compose_all(rep.centers);
  std::vector<std::size_t> per_backbone;
  for (const auto& members : batch.backbones) {
    std::size_t bad = 0;
    for (NodeId v : members) bad += pg.is_bad(v);
    per_backbone.push_back(bad);
  }
  for (std::size_t i = 0; i < rep.centers.size(); ++i) {
    rep.bad_counts.push_back(per_backbone[batch.index[i]]);
  }
  return rep;
}

double analytic_bound(const SocialGraph& g, std::span<const NodeId> backbone, double r) {
  if (backbone.empty()) throw std::invalid_argument("bound needs a nonempty backbone");
  double friends = 0.0;
  for (NodeId m : backbone) friends += static_cast<double>(g.degree(m));
  return r * friends / (friends + static_cast<double>(backbone.size()));
}

std::size_t ResilienceReport::purity_violations() const {
  return static_cast<std::size_t>(
      std::count_if(backbone_bad.begin(), backbone_bad.end(), [](std::size_t c) { return c > 0; }));
}

nlohmann::ordered_json ResilienceReport::to_json(const SocialGraph& g, bool per_center) const {
  nlohmann::ordered_json j;
  j["policy"] = {{"alpha", policy.alpha()}, {"beta", policy.beta()}};
  j["guaranteed"] = guaranteed;
  j["r"] = r;
  j["good_centers"] = centers.size();
  j["purity_violations"] = purity_violations();
  j["backbone_bad_total"] =
      std::accumulate(backbone_bad.begin(), backbone_bad.end(), std::size_t{0});
  j["mean_domain_bad_fraction"] = mean;
  j["standard_error"] = standard_error;
  j["max_analytic_bound"] = max_bound;
  if (per_center) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < centers.size(); ++i) {
      rows.push_back({{"center", g.label(centers[i])},
                      {"backbone_bad", backbone_bad[i]},
                      {"domain_bad_fraction", domain_bad_fraction[i]},
                      {"bound", bound[i]}});
    }
    j["centers"] = std::move(rows);
  }
  return j;
}

ResilienceReport measure_domain_resilience(const PlantedGraph& pg, const RcpPolicy& p) {
  const SocialGraph& g = pg.graph;
  ResilienceReport rep;
  rep.guaranteed = validate_policy_alignment(p, pg.params);
  rep.r = pg.params.r;
  rep.policy = p;
  rep.centers = pg.good_nodes();
  BackboneComposer composer(g, p);
  auto batch = composer.compose_all(rep.centers);

  struct Summary {
    std::size_t backbone_bad;
    double fraction;
    double bound;
  };
  std::vector<Summary> summaries;
  for (const auto& members : batch.backbones) {
    Summary s{0, 0.0, analytic_bound(g, members, pg.params.r)};
    for (NodeId v : members) s.backbone_bad += pg.is_bad(v);
    Domain d = compose_complete_domain(g, Backbone{members.front(), members});
    std::size_t bad = 0;
    for (NodeId v : d.members) bad += pg.is_bad(v);
    s.fraction = static_cast<double>(bad) / static_cast<double>(d.members.size());
    summaries.push_back(s);
  }
  for (std::size_t i = 0; i < rep.centers.size(); ++i) {
    const auto& s = summaries[batch.index[i]];
    rep.backbone_bad.push_back(s.backbone_bad);
    rep.domain_bad_fraction.push_back(s.fraction);
    rep.bound.push_back(s.bound);
    rep.max_bound = std::max(rep.max_bound, s.bound);
  }
  rep.mean = mean_of(rep.domain_bad_fraction);
  rep.standard_error = standard_error_of(rep.domain_bad_fraction);
  return rep;
}

nlohmann::ordered_json BaselineReport::to_json() const {
  return {{"hops", hops},
          {"mean_bad_fraction", mean_bad_fraction},
          {"centers_with_bad", centers_with_bad},
          {"max_bad", max_bad}};
}

BaselineReport friend_of_friend_baseline(const PlantedGraph& pg, std::size_t hops) {
  const SocialGraph& g = pg.graph;
  BaselineReport rep;
  rep.hops = hops;
  std::vector<std::uint32_t> depth(g.node_count(), 0);
  std::vector<std::uint32_t> stamp(g.node_count(), 0);
  std::uint32_t token = 0;
  std::vector<double> fractions;
  std::vector<NodeId> frontier;
  for (NodeId c : pg.good_nodes()) {
    ++token;
    frontier.assign(1, c);
    stamp[c] = token;
    depth[c] = 0;
    std::size_t bad = 0;
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      NodeId v = frontier[head];
      bad += pg.is_bad(v);
      if (depth[v] == hops) continue;
      for (NodeId w : g.neighbors(v)) {
        if (stamp[w] != token) {
          stamp[w] = token;
          depth[w] = depth[v] + 1;
          frontier.push_back(w);
        }
      }
    }
    fractions.push_back(static_cast<double>(bad) / static_cast<double>(frontier.size()));
    rep.centers_with_bad += bad > 0;
    rep.max_bad = std::max(rep.max_bad, bad);
  }
  rep.mean_bad_fraction = mean_of(fractions);
  return rep;
}

AttackSpec AttackSpec::from_json(const nlohmann::json& j) {
  AttackSpec s;
  s.bots = j.value("bots", s.bots);
  s.bot_density = j.value("bot_density", s.bot_density);
  s.cross_budget = j.value("cross_budget", s.cross_budget);
  s.strategy = j.value("strategy", s.strategy);
  s.seed = j.value("seed", s.seed);
  s.baseline_hops = j.value("baseline_hops", s.baseline_hops);
  return s;
}

nlohmann::ordered_json AttackOutcome::to_json() const {
  return {{"cross_attempted", cross_attempted},
          {"cross_accepted", cross_accepted},
          {"before", before.to_json(attacked.graph, false)},
          {"after", after.to_json(attacked.graph, false)},
          {"baseline_before", baseline_before.to_json()},
          {"baseline_after", baseline_after.to_json()}};
}

AttackOutcome mass_infiltration_attack(const PlantedGraph& pg, const AttackSpec& spec,
                                       const RcpPolicy& p) {
  if (spec.strategy != "uniform" && spec.strategy != "hubs") {
    throw std::invalid_argument(fmt::format("unknown attack strategy '{}'", spec.strategy));
  }
  if (spec.bot_density < 0.0 || spec.bot_density > 1.0) {
    throw std::invalid_argument("bot_density must lie in [0, 1]");
  }
  const std::size_t n0 = pg.graph.node_count();
  const std::size_t n = n0 + spec.bots;
  std::mt19937_64 rng(spec.seed);

  Adjacency adj = to_adjacency(pg.graph);
  adj.resize(n);
  std::vector<Citizen> labels = pg.labels;
  labels.resize(n, Citizen::kBad);
  std::vector<std::string> names = pg.graph.labels();
  for (std::size_t k = 0; k < spec.bots; ++k) names.push_back(fmt::format("bot{}", k));

  // New bots tie among themselves only, so no existing cross tie gains a
  // common friend here.
  std::bernoulli_distribution bot_tie(spec.bot_density);
  for (NodeId u = static_cast<NodeId>(n0); u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (bot_tie(rng)) {
        adj[u].push_back(v);
        adj[v].push_back(u);
      }
    }
  }

  std::vector<NodeId> good, bad;
  for (NodeId v = 0; v < n; ++v) (labels[v] == Citizen::kGood ? good : bad).push_back(v);

  AttackOutcome outcome;
  const auto& params = pg.params;
  auto bad_friends = [&](NodeId v) {
    std::size_t c = 0;
    for (NodeId w : adj[v]) c += labels[w] == Citizen::kBad;
    return c;
  };
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t token = 0;

  // Cross tie (g, b) is admissible when every assumption still holds after
  // adding it; only pairs touching both g and b can change.
  auto admissible = [&](NodeId g, NodeId b) {
    if (has_edge(adj, g, b)) return false;
    double frac = static_cast<double>(bad_friends(g) + 1) / static_cast<double>(adj[g].size() + 1);
    if (frac > params.r) return false;
    if (count_common(adj[g], adj[b]) >= params.x) return false;
    std::vector<NodeId> shared;
    std::set_intersection(adj[g].begin(), adj[g].end(), adj[b].begin(), adj[b].end(),
                          std::back_inserter(shared));
    for (NodeId w : shared) {
      if (labels[w] == Citizen::kBad) {
        if (count_common(adj[g], adj[w]) + 1 >= params.x) return false;
      } else if (count_common(adj[w], adj[b]) + 1 >= params.x) {
        return false;
      }
    }
    std::vector<NodeId> friends{g};
    for (NodeId w : adj[b]) {
      if (labels[w] == Citizen::kGood) friends.push_back(w);
    }
    auto comps = induced_components(
        friends, [&](NodeId v) -> const std::vector<NodeId>& { return adj[v]; }, stamp, token);
    for (const auto& comp : comps) {
      if (std::find(comp.begin(), comp.end(), g) != comp.end()) return comp.size() < params.y;
    }
    return true;
  };

  if (!good.empty() && !bad.empty()) {
    std::uniform_int_distribution<std::size_t> any_good(0, good.size() - 1);
    std::uniform_int_distribution<std::size_t> any_bad(0, bad.size() - 1);
    std::vector<double> weights;
    for (NodeId v : good) weights.push_back(static_cast<double>(adj[v].size()) + 1.0);
    std::discrete_distribution<std::size_t> by_degree(weights.begin(), weights.end());
    for (std::size_t attempt = 0; attempt < spec.cross_budget; ++attempt) {
      NodeId g = good[spec.strategy == "hubs" ? by_degree(rng) : any_good(rng)];
      NodeId b = bad[any_bad(rng)];
      ++outcome.cross_attempted;
      if (admissible(g, b)) {
        add_edge(adj, g, b);
        ++outcome.cross_accepted;
      }
    }
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());

  outcome.attacked.graph = from_adjacency(adj, std::move(names));
  outcome.attacked.labels = std::move(labels);
  outcome.attacked.params = pg.params;
  outcome.attacked.seed = pg.seed;
  outcome.attacked.repair = pg.repair;
  outcome.before = measure_domain_resilience(pg, p);
  outcome.after = measure_domain_resilience(outcome.attacked, p);
  outcome.baseline_before = friend_of_friend_baseline(pg, spec.baseline_hops);
  outcome.baseline_after = friend_of_friend_baseline(outcome.attacked, spec.baseline_hops);
  return outcome;
}

PlantedGraph inject_strong_bad_tie(const PlantedGraph& pg, std::uint64_t seed) {
  const SocialGraph& g = pg.graph;
  std::vector<NodeId> bad;
  std::vector<NodeId> hosts;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (pg.is_bad(v)) {
      bad.push_back(v);
      continue;
    }
    std::size_t good_friends = 0;
    for (NodeId w : g.neighbors(v)) good_friends += !pg.is_bad(w);
    if (good_friends >= pg.params.x) hosts.push_back(v);
  }
  if (bad.empty() || hosts.empty()) {
    throw std::invalid_argument("negative control needs a bad node and a well-connected good node");
  }
  std::mt19937_64 rng(seed);
  NodeId host = hosts[std::uniform_int_distribution<std::size_t>(0, hosts.size() - 1)(rng)];
  std::vector<NodeId> free_bad;
  for (NodeId b : bad) {
    if (!g.has_edge(host, b)) free_bad.push_back(b);
  }
  if (free_bad.empty()) throw std::invalid_argument("host is already tied to every bad node");
  NodeId b = free_bad[std::uniform_int_distribution<std::size_t>(0, free_bad.size() - 1)(rng)];

  Adjacency adj = to_adjacency(g);
  add_edge(adj, host, b);
  std::size_t tied = 0;
  for (NodeId w : g.neighbors(host)) {
    if (tied == pg.params.x) break;
    if (pg.is_bad(w)) continue;
    if (!has_edge(adj, w, b)) add_edge(adj, w, b);
    ++tied;
  }
  PlantedGraph out = pg;
  out.graph = from_adjacency(adj, g.labels());
  return out;
}

}  // namespace rcp

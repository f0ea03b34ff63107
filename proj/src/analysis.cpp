#include "rcp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include <fmt/format.h>

#include "rcp/policy.hpp"
#include "rcp/supercore.hpp"

namespace rcp {

namespace {

std::size_t parse_count(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (s.empty() || pos != s.size() || s.front() == '-') {
    throw std::invalid_argument(fmt::format("'{}' is not a non-negative integer", s));
  }
  return static_cast<std::size_t>(v);
}

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

RcpPolicy policy_for(std::size_t beta, std::optional<std::size_t> alpha) {
  return RcpPolicy(alpha.value_or(beta + 1), beta);
}

}  // namespace

BetaRange BetaRange::parse(const std::string& text) {
  BetaRange r;
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    r.lo = r.hi = parse_count(text);
  } else {
    r.lo = parse_count(text.substr(0, colon));
    r.hi = parse_count(text.substr(colon + 1));
  }
  if (r.lo < 1 || r.hi < r.lo) {
    throw std::invalid_argument(fmt::format("beta range '{}' must satisfy 1 <= A <= B", text));
  }
  return r;
}

std::vector<std::size_t> BetaRange::values() const {
  std::vector<std::size_t> out;
  for (std::size_t b = lo; b <= hi; ++b) out.push_back(b);
  return out;
}

std::string DegreeBucket::name() const {
  if (hi == kUnbounded) return fmt::format("[{},inf)", lo);
  return fmt::format("[{},{})", lo, hi);
}

std::vector<DegreeBucket> power_of_two_buckets(std::size_t max_degree) {
  std::vector<DegreeBucket> out{{0, 1}};
  std::size_t lo = 1;
  while (lo <= max_degree) {
    out.push_back({lo, 2 * lo});
    lo *= 2;
  }
  return out;
}

std::vector<DegreeBucket> buckets_from_edges(const std::vector<std::size_t>& cuts) {
  if (!std::is_sorted(cuts.begin(), cuts.end()) ||
      std::adjacent_find(cuts.begin(), cuts.end()) != cuts.end() ||
      (!cuts.empty() && cuts.front() == 0)) {
    throw std::invalid_argument("bucket cut points must be positive and strictly ascending");
  }
  std::vector<DegreeBucket> out;
  std::size_t lo = 0;
  for (std::size_t c : cuts) {
    out.push_back({lo, c});
    lo = c;
  }
  out.push_back({lo, kUnbounded});
  return out;
}

std::string fixed6(double v) { return fmt::format("{:.6f}", v); }

double round6(double v) { return std::round(v * 1e6) / 1e6; }

nlohmann::ordered_json SweepResult::to_json() const {
  nlohmann::ordered_json j;
  j["threshold"] = threshold;
  auto list = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    list.push_back({{"beta", r.beta},
                    {"alpha", r.alpha},
                    {"bucket", r.bucket.name()},
                    {"nodes", r.nodes},
                    {"qualifying", r.qualifying},
                    {"fraction", round6(r.fraction())}});
  }
  j["rows"] = std::move(list);
  return j;
}

std::string SweepResult::to_csv() const {
  std::string out = "beta,alpha,degree_lo,degree_hi,nodes,qualifying,fraction\n";
  for (const auto& r : rows) {
    std::string hi = r.bucket.hi == kUnbounded ? "inf" : std::to_string(r.bucket.hi);
    out += fmt::format("{},{},{},{},{},{},{}\n", r.beta, r.alpha, r.bucket.lo, hi, r.nodes,
                       r.qualifying, fixed6(r.fraction()));
  }
  return out;
}

SweepResult sweep_domains(const SocialGraph& g, const BetaRange& betas, std::size_t threshold,
                          std::optional<std::size_t> alpha, std::vector<DegreeBucket> buckets) {
  std::size_t max_degree = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
  if (buckets.empty()) buckets = power_of_two_buckets(max_degree);

  std::vector<std::size_t> bucket_of(g.node_count());
  std::vector<std::size_t> bucket_nodes(buckets.size(), 0);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto it = std::find_if(buckets.begin(), buckets.end(),
                           [&](const DegreeBucket& b) { return b.contains(g.degree(v)); });
    if (it == buckets.end()) {
      throw std::invalid_argument(fmt::format("degree {} falls outside every bucket", g.degree(v)));
    }
    bucket_of[v] = static_cast<std::size_t>(it - buckets.begin());
    ++bucket_nodes[bucket_of[v]];
  }

  SweepResult result;
  result.threshold = threshold;
  result.buckets = buckets;
  for (std::size_t beta : betas.values()) {
    RcpPolicy p = policy_for(beta, alpha);
    SupercorePipeline pipe(g, p);
    std::vector<std::size_t> hits(buckets.size(), 0);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (pipe.domain_size(v) >= threshold) ++hits[bucket_of[v]];
    }
    for (std::size_t b = 0; b < buckets.size(); ++b) {
      result.rows.push_back({beta, p.alpha(), buckets[b], bucket_nodes[b], hits[b]});
    }
  }
  return result;
}

nlohmann::ordered_json PulsTable::to_json() const {
  nlohmann::ordered_json j;
  auto largest = nlohmann::ordered_json::array();
  for (const auto& [beta, size] : largest_size) {
    largest.push_back({{"beta", beta}, {"largest_supercore_size", size}});
  }
  j["largest_supercores"] = std::move(largest);
  auto list = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    list.push_back({{"group", r.group},
                    {"beta", r.beta},
                    {"alpha", r.alpha},
                    {"group_size", r.group_size},
                    {"in_largest", r.in_largest},
                    {"puls", round6(r.puls())}});
  }
  j["rows"] = std::move(list);
  j["unknown_labels"] = unknown_labels;
  return j;
}

std::string PulsTable::to_csv() const {
  std::string out = "group,beta,alpha,group_size,in_largest,puls\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{},{},{},{}\n", r.group, r.beta, r.alpha, r.group_size,
                       r.in_largest, fixed6(r.puls()));
  }
  return out;
}

PulsTable compute_puls(const SocialGraph& g,
                       const std::vector<std::pair<std::string, std::string>>& attributes,
                       const BetaRange& betas, std::optional<std::size_t> alpha) {
  PulsTable table;
  std::map<std::string, NodeSet> groups;
  for (const auto& [node, group] : attributes) {
    if (auto v = g.find(node)) {
      groups[group].push_back(*v);
    } else {
      table.unknown_labels.push_back(node);
    }
  }
  if (groups.empty()) {
    throw std::invalid_argument("no attribute row names a node of the graph");
  }
  for (auto& [name, members] : groups) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }

  std::vector<std::vector<char>> in_largest;
  for (std::size_t beta : betas.values()) {
    SupercorePipeline pipe(g, policy_for(beta, alpha));
    const NodeSet& core = pipe.dag.supercores[pipe.largest_supercore()];
    table.largest_size.emplace_back(beta, core.size());
    std::vector<char> mark(g.node_count(), 0);
    for (NodeId v : core) mark[v] = 1;
    in_largest.push_back(std::move(mark));
  }
  for (const auto& [name, members] : groups) {
    std::size_t k = 0;
    for (std::size_t beta : betas.values()) {
      std::size_t hits = 0;
      for (NodeId v : members) hits += in_largest[k][v];
      table.rows.push_back({name, beta, policy_for(beta, alpha).alpha(), members.size(), hits});
      ++k;
    }
  }
  return table;
}

}  // namespace rcp

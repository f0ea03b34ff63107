#include "rcp/percolation.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

#include <fmt/format.h>

namespace rcp {

nlohmann::ordered_json ExpansionStep::to_json(const SocialGraph& g) const {
  return {{"step", step},
          {"rule", rule == Rule::kA ? "A" : "B"},
          {"admitted", g.label(admitted)},
          {"witness", labels_of(g, witness)}};
}

namespace {

// Worklist closure shared by the composer and the free function. StrengthAt
// returns the tie strength of m's k-th adjacency slot.
template <typename StrengthAt>
Backbone grow_backbone(const SocialGraph& g, const RcpPolicy& p, NodeId center,
                       StrengthAt strength_at, const TraceSink& trace,
                       std::optional<std::uint64_t> shuffle_seed) {
  if (!g.contains(center)) {
    throw std::invalid_argument(fmt::format("center {} is not a node of the graph", center));
  }
  const std::size_t n = g.node_count();

  std::vector<std::uint32_t> rank;
  if (shuffle_seed) {
    rank.resize(n);
    std::iota(rank.begin(), rank.end(), 0u);
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(rank.begin(), rank.end(), rng);
  }
  auto priority = [&](NodeId v) { return rank.empty() ? v : rank[v]; };

  std::vector<char> member(n, 0);
  std::vector<char> queued(n, 0);
  std::vector<std::uint32_t> sentinel_count(n, 0);
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t stamp_token = 0;

  using Entry = std::pair<std::uint32_t, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> work;

  Backbone out;
  out.center = center;
  std::size_t step = 0;

  auto admit = [&](NodeId u) {
    member[u] = 1;
    out.members.push_back(u);
    for (NodeId m : g.neighbors(u)) {
      if (member[m]) continue;
      ++sentinel_count[m];
      if (!queued[m]) {
        queued[m] = 1;
        work.emplace(priority(m), m);
      }
    }
  };

  std::vector<NodeId> bfs;
  auto rule_b_witness = [&](NodeId m) -> std::optional<NodeSet> {
    if (sentinel_count[m] < p.alpha()) return std::nullopt;
    ++stamp_token;
    for (NodeId w : g.neighbors(m)) {
      if (member[w]) stamp[w] = stamp_token;
    }
    // Each visited node gets stamp_token + 1 so components stay disjoint.
    ++stamp_token;
    for (NodeId start : g.neighbors(m)) {
      if (stamp[start] != stamp_token - 1) continue;
      bfs.clear();
      bfs.push_back(start);
      stamp[start] = stamp_token;
      for (std::size_t head = 0; head < bfs.size(); ++head) {
        for (NodeId w : g.neighbors(bfs[head])) {
          if (stamp[w] == stamp_token - 1) {
            stamp[w] = stamp_token;
            bfs.push_back(w);
          }
        }
      }
      if (bfs.size() >= p.alpha()) {
        NodeSet witness(bfs.begin(), bfs.end());
        std::sort(witness.begin(), witness.end());
        return witness;
      }
    }
    return std::nullopt;
  };

  admit(center);
  while (!work.empty()) {
    NodeId m = work.top().second;
    work.pop();
    queued[m] = 0;
    if (member[m]) continue;

    auto nb = g.neighbors(m);
    std::optional<NodeId> key;
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (member[nb[k]] && strength_at(m, k, nb[k]) >= p.beta()) {
        key = nb[k];
        break;
      }
    }
    if (key) {
      if (trace) trace(ExpansionStep{step, Rule::kA, m, {*key}});
      ++step;
      admit(m);
      continue;
    }
    if (auto witness = rule_b_witness(m)) {
      if (trace) trace(ExpansionStep{step, Rule::kB, m, std::move(*witness)});
      ++step;
      admit(m);
    }
  }
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace

BackboneComposer::BackboneComposer(const SocialGraph& g, const RcpPolicy& p)
    : g_(&g), policy_(p), strengths_(edge_strengths(g)) {}

Backbone BackboneComposer::compose(NodeId center, const TraceSink& trace,
                                   std::optional<std::uint64_t> shuffle_seed) const {
  const SocialGraph& g = *g_;
  auto strength_at = [&](NodeId m, std::size_t k, NodeId) {
    return strengths_[g.slot_begin(m) + k];
  };
  return grow_backbone(g, policy_, center, strength_at, trace, shuffle_seed);
}

BackboneBatch BackboneComposer::compose_all(std::span<const NodeId> centers) const {
  const SocialGraph& g = *g_;
  const std::size_t n = g.node_count();
  // Label strong-tie components lazily, only around requested centers.
  constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> group(n, kNone);
  std::vector<std::uint32_t> backbone_of_group;
  BackboneBatch batch;
  batch.index.reserve(centers.size());
  std::vector<NodeId> stack;
  std::uint32_t groups = 0;
  for (NodeId c : centers) {
    if (!g.contains(c)) throw std::invalid_argument("center out of range");
    if (group[c] == kNone) {
      const std::uint32_t id = groups++;
      group[c] = id;
      stack.assign(1, c);
      while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        auto nb = g.neighbors(v);
        for (std::size_t k = 0; k < nb.size(); ++k) {
          if (group[nb[k]] == kNone && strengths_[g.slot_begin(v) + k] >= policy_.beta()) {
            group[nb[k]] = id;
            stack.push_back(nb[k]);
          }
        }
      }
      backbone_of_group.push_back(static_cast<std::uint32_t>(batch.backbones.size()));
      batch.backbones.push_back(compose(c).members);
    }
    batch.index.push_back(backbone_of_group[group[c]]);
  }
  return batch;
}

Backbone compose_backbone(const SocialGraph& g, const RcpPolicy& p, NodeId center,
                          const TraceSink& trace) {
  auto strength_at = [&](NodeId m, std::size_t, NodeId l) {
    return count_common(g.neighbors(m), g.neighbors(l));
  };
  return grow_backbone(g, p, center, strength_at, trace, std::nullopt);
}

Domain compose_complete_domain(const SocialGraph& g, const Backbone& b) {
  std::vector<char> in(g.node_count(), 0);
  Domain d;
  d.center = b.center;
  d.backbone = b;
  for (NodeId m : b.members) {
    if (!in[m]) {
      in[m] = 1;
      d.members.push_back(m);
    }
    for (NodeId w : g.neighbors(m)) {
      if (!in[w]) {
        in[w] = 1;
        d.members.push_back(w);
      }
    }
  }
  std::sort(d.members.begin(), d.members.end());
  return d;
}

}  // namespace rcp

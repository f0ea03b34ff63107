#include "rcp/supercore.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace rcp {

StrongTieGraph::StrongTieGraph(const SocialGraph& base,
                               std::vector<std::vector<NodeId>> adjacency)
    : base_(&base), adjacency_(std::move(adjacency)) {
  std::size_t total = 0;
  for (const auto& nb : adjacency_) total += nb.size();
  edge_count_ = total / 2;
}

StrongTieGraph build_strong_tie_graph(const SocialGraph& g, const RcpPolicy& p) {
  const auto strengths = edge_strengths(g);
  std::vector<std::vector<NodeId>> adjacency(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    auto nb = g.neighbors(u);
    for (std::size_t k = 0; k < nb.size(); ++k) {
      if (strengths[g.slot_begin(u) + k] >= p.beta()) adjacency[u].push_back(nb[k]);
    }
  }
  return StrongTieGraph(g, std::move(adjacency));
}

std::vector<NodeSet> strong_components(const StrongTieGraph& stg) {
  const std::size_t n = stg.node_count();
  std::vector<char> seen(n, 0);
  std::vector<NodeSet> out;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    NodeSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (NodeId w : stg.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t ComponentDigraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& o : out) total += o.size();
  return total;
}

ComponentDigraph build_component_digraph(const SocialGraph& g,
                                         const std::vector<NodeSet>& components,
                                         const RcpPolicy& p) {
  const std::size_t n = g.node_count();
  ComponentDigraph cd;
  cd.components = components;
  cd.component_of.assign(n, static_cast<ComponentId>(-1));
  for (ComponentId c = 0; c < components.size(); ++c) {
    for (NodeId v : components[c]) {
      if (v >= n || cd.component_of[v] != static_cast<ComponentId>(-1)) {
        throw std::invalid_argument("components must partition the node set");
      }
      cd.component_of[v] = c;
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (cd.component_of[v] == static_cast<ComponentId>(-1)) {
      throw std::invalid_argument("components must cover every node");
    }
  }
  cd.out.assign(components.size(), {});

  std::unordered_set<std::uint64_t> found;
  auto key = [](ComponentId a, ComponentId b) { return (std::uint64_t{a} << 32) | b; };
  std::vector<std::pair<ComponentId, NodeId>> grouped;
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t token = 0;
  std::vector<NodeId> bfs;

  for (NodeId m = 0; m < n; ++m) {
    auto nb = g.neighbors(m);
    if (nb.size() < p.alpha()) continue;
    const ComponentId target = cd.component_of[m];
    grouped.clear();
    for (NodeId w : nb) {
      ComponentId c = cd.component_of[w];
      if (c != target) grouped.emplace_back(c, w);
    }
    std::sort(grouped.begin(), grouped.end());
    for (std::size_t i = 0; i < grouped.size();) {
      std::size_t j = i;
      while (j < grouped.size() && grouped[j].first == grouped[i].first) ++j;
      const ComponentId source = grouped[i].first;
      if (j - i >= p.alpha() && !found.count(key(source, target))) {
        // Look for a connected piece of size >= alpha inside F(m) ∩ H_source.
        ++token;
        for (std::size_t k = i; k < j; ++k) stamp[grouped[k].second] = token;
        ++token;
        bool witnessed = false;
        for (std::size_t k = i; k < j && !witnessed; ++k) {
          NodeId start = grouped[k].second;
          if (stamp[start] != token - 1) continue;
          bfs.assign(1, start);
          stamp[start] = token;
          for (std::size_t head = 0; head < bfs.size() && bfs.size() < p.alpha(); ++head) {
            for (NodeId w : g.neighbors(bfs[head])) {
              if (stamp[w] == token - 1) {
                stamp[w] = token;
                bfs.push_back(w);
              }
            }
          }
          witnessed = bfs.size() >= p.alpha();
        }
        if (witnessed) {
          found.insert(key(source, target));
          cd.out[source].push_back(target);
        }
      }
      i = j;
    }
  }
  for (auto& o : cd.out) std::sort(o.begin(), o.end());
  return cd;
}

std::size_t SupercoreDag::edge_count() const {
  std::size_t total = 0;
  for (const auto& o : out) total += o.size();
  return total;
}

namespace {

// Iterative Tarjan; returns the SCC index of every vertex.
std::vector<std::uint32_t> tarjan_scc(const std::vector<std::vector<ComponentId>>& out,
                                      std::uint32_t& scc_count) {
  const std::size_t k = out.size();
  constexpr std::uint32_t kUnvisited = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> index(k, kUnvisited), low(k, 0), scc(k, kUnvisited);
  std::vector<char> on_stack(k, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;  // vertex, next edge
  std::uint32_t counter = 0;
  scc_count = 0;
  for (std::uint32_t root = 0; root < k; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < out[v].size()) {
        std::uint32_t w = out[v][next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          scc[w] = scc_count;
        } while (w != v);
        ++scc_count;
      }
      std::uint32_t finished = v;
      call.pop_back();
      if (!call.empty()) {
        std::uint32_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return scc;
}

}  // namespace

SupercoreDag condense(const ComponentDigraph& cd) {
  std::uint32_t scc_count = 0;
  auto scc = tarjan_scc(cd.out, scc_count);

  std::vector<NodeSet> raw(scc_count);
  std::vector<std::vector<ComponentId>> raw_members(scc_count);
  for (ComponentId c = 0; c < cd.components.size(); ++c) {
    raw_members[scc[c]].push_back(c);
    raw[scc[c]].insert(raw[scc[c]].end(), cd.components[c].begin(), cd.components[c].end());
  }
  for (auto& s : raw) std::sort(s.begin(), s.end());

  // Renumber by smallest contained node.
  std::vector<std::uint32_t> order(scc_count);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (raw[a].empty() || raw[b].empty()) return raw[b].empty() && !raw[a].empty();
    return raw[a].front() < raw[b].front();
  });
  std::vector<SupercoreId> renumber(scc_count);
  for (std::uint32_t i = 0; i < scc_count; ++i) renumber[order[i]] = i;

  SupercoreDag dag;
  dag.supercores.resize(scc_count);
  dag.members.resize(scc_count);
  dag.out.resize(scc_count);
  for (std::uint32_t s = 0; s < scc_count; ++s) {
    dag.supercores[renumber[s]] = std::move(raw[s]);
    dag.members[renumber[s]] = std::move(raw_members[s]);
  }
  dag.supercore_of.assign(cd.component_of.size(), 0);
  for (SupercoreId s = 0; s < scc_count; ++s) {
    for (NodeId v : dag.supercores[s]) dag.supercore_of[v] = s;
  }
  for (ComponentId c = 0; c < cd.out.size(); ++c) {
    for (ComponentId d : cd.out[c]) {
      SupercoreId a = renumber[scc[c]], b = renumber[scc[d]];
      if (a != b) dag.out[a].push_back(b);
    }
  }
  for (auto& o : dag.out) {
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
  }
  return dag;
}

std::vector<SupercoreId> topological_order(const SupercoreDag& dag) {
  const std::size_t k = dag.out.size();
  std::vector<std::uint32_t> indegree(k, 0);
  for (const auto& o : dag.out) {
    for (SupercoreId t : o) ++indegree[t];
  }
  std::vector<SupercoreId> order;
  order.reserve(k);
  for (SupercoreId c = 0; c < k; ++c) {
    if (indegree[c] == 0) order.push_back(c);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (SupercoreId t : dag.out[order[head]]) {
      if (--indegree[t] == 0) order.push_back(t);
    }
  }
  if (order.size() != k) throw std::logic_error("supercore digraph contains a cycle");
  return order;
}

bool is_acyclic(const SupercoreDag& dag) {
  try {
    topological_order(dag);
    return true;
  } catch (const std::logic_error&) {
    return false;
  }
}

BackboneIndex::BackboneIndex(const SupercoreDag& dag,
                             std::vector<std::vector<SupercoreId>> reach)
    : dag_(&dag), reach_(std::move(reach)), sizes_(reach_.size(), 0) {
  for (SupercoreId c = 0; c < reach_.size(); ++c) {
    for (SupercoreId d : reach_[c]) sizes_[c] += dag.supercores[d].size();
  }
}

NodeSet BackboneIndex::members(SupercoreId c) const {
  NodeSet out;
  out.reserve(sizes_[c]);
  for (SupercoreId d : reach_[c]) {
    const auto& s = dag_->supercores[d];
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

BackboneIndex all_largest_backbones(const SupercoreDag& dag) {
  auto order = topological_order(dag);
  std::vector<std::vector<SupercoreId>> reach(dag.supercores.size());
  std::vector<SupercoreId> merged;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    SupercoreId c = *it;
    std::vector<SupercoreId> acc{c};
    for (SupercoreId child : dag.out[c]) {
      merged.clear();
      std::set_union(acc.begin(), acc.end(), reach[child].begin(), reach[child].end(),
                     std::back_inserter(merged));
      acc.swap(merged);
    }
    reach[c] = std::move(acc);
  }
  return BackboneIndex(dag, std::move(reach));
}

DomainIndex::DomainIndex(const SocialGraph& g, const BackboneIndex& backbones)
    : g_(&g), backbones_(&backbones), sizes_(backbones.supercore_count(), 0) {
  const auto& dag = backbones.dag();
  const std::size_t k = backbones.supercore_count();
  // Closed neighborhood of each supercore on its own; total size O(|N| + |E|).
  own_.resize(k);
  std::vector<std::uint32_t> stamp(g.node_count(), 0);
  std::uint32_t token = 0;
  for (SupercoreId c = 0; c < k; ++c) {
    ++token;
    auto& acc = own_[c];
    for (NodeId m : dag.supercores[c]) {
      if (stamp[m] != token) {
        stamp[m] = token;
        acc.push_back(m);
      }
      for (NodeId w : g.neighbors(m)) {
        if (stamp[w] != token) {
          stamp[w] = token;
          acc.push_back(w);
        }
      }
    }
    std::sort(acc.begin(), acc.end());
  }
  for (SupercoreId c = 0; c < k; ++c) {
    const auto& reach = backbones.reachable(c);
    if (reach.size() == 1) {
      sizes_[c] = own_[c].size();
      continue;
    }
    ++token;
    std::size_t count = 0;
    for (SupercoreId d : reach) {
      for (NodeId v : own_[d]) {
        if (stamp[v] != token) {
          stamp[v] = token;
          ++count;
        }
      }
    }
    sizes_[c] = count;
  }
}

NodeSet DomainIndex::members(SupercoreId c) const {
  NodeSet out;
  for (SupercoreId d : backbones_->reachable(c)) {
    NodeSet merged;
    std::set_union(out.begin(), out.end(), own_[d].begin(), own_[d].end(),
                   std::back_inserter(merged));
    out.swap(merged);
  }
  return out;
}

DomainIndex all_complete_domains(const SocialGraph& g, const BackboneIndex& backbones) {
  return DomainIndex(g, backbones);
}

namespace {

ComponentDigraph digraph_for(const SocialGraph& g, const StrongTieGraph& stg,
                             const RcpPolicy& p) {
  return build_component_digraph(g, strong_components(stg), p);
}

}  // namespace

SupercorePipeline::SupercorePipeline(const SocialGraph& g, const RcpPolicy& p)
    : graph(&g),
      policy(p),
      strong(build_strong_tie_graph(g, p)),
      digraph(digraph_for(g, strong, p)),
      dag(condense(digraph)),
      backbones(all_largest_backbones(dag)),
      domains(all_complete_domains(g, backbones)) {}

SupercoreId SupercorePipeline::largest_supercore() const {
  SupercoreId best = 0;
  for (SupercoreId c = 1; c < dag.supercores.size(); ++c) {
    if (dag.supercores[c].size() > dag.supercores[best].size()) best = c;
  }
  return best;
}

nlohmann::ordered_json SupercorePipeline::to_json(bool emit_members) const {
  nlohmann::ordered_json j;
  j["policy"] = {{"alpha", policy.alpha()}, {"beta", policy.beta()}};
  j["node_count"] = graph->node_count();
  j["strong_tie_edges"] = strong.edge_count();
  j["component_count"] = digraph.components.size();
  j["component_edges"] = digraph.edge_count();
  j["supercore_count"] = dag.supercores.size();
  auto list = nlohmann::ordered_json::array();
  for (SupercoreId c = 0; c < dag.supercores.size(); ++c) {
    nlohmann::ordered_json s;
    s["id"] = c;
    s["size"] = dag.supercores[c].size();
    s["first_member"] = graph->label(dag.supercores[c].front());
    s["backbone_size"] = backbones.size(c);
    s["domain_size"] = domains.size(c);
    if (emit_members) s["members"] = labels_of(*graph, dag.supercores[c]);
    list.push_back(std::move(s));
  }
  j["supercores"] = std::move(list);
  auto edges = nlohmann::ordered_json::array();
  for (SupercoreId c = 0; c < dag.out.size(); ++c) {
    for (SupercoreId t : dag.out[c]) edges.push_back({c, t});
  }
  j["dag_edges"] = std::move(edges);
  return j;
}

}  // namespace rcp

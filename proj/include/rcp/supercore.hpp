#pragma once

#include <cstdint>
#include <vector>

#include "rcp/graph.hpp"
#include "rcp/policy.hpp"

namespace rcp {

using ComponentId = std::uint32_t;
using SupercoreId = std::uint32_t;

/// Edges of the base graph whose tie strength reaches beta.
class StrongTieGraph {
 public:
  StrongTieGraph(const SocialGraph& base, std::vector<std::vector<NodeId>> adjacency);

  const SocialGraph& base() const { return *base_; }
  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<NodeId>& neighbors(NodeId v) const { return adjacency_[v]; }

 private:
  const SocialGraph* base_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

StrongTieGraph build_strong_tie_graph(const SocialGraph& g, const RcpPolicy& p);

/// Connected components of the strong-tie graph, singletons included, ordered
/// by smallest member.
std::vector<NodeSet> strong_components(const StrongTieGraph& stg);

struct ComponentDigraph {
  std::vector<NodeSet> components;
  std::vector<ComponentId> component_of;       // per node
  std::vector<std::vector<ComponentId>> out;   // sorted, no self-edges

  std::size_t edge_count() const;
};

/// Adds H_i -> H_j when some m in H_j has a neighbor subset inside H_i that
/// induces a connected piece of size >= alpha in the base graph.
ComponentDigraph build_component_digraph(const SocialGraph& g,
                                         const std::vector<NodeSet>& components,
                                         const RcpPolicy& p);

struct SupercoreDag {
  std::vector<NodeSet> supercores;             // ordered by smallest member
  std::vector<SupercoreId> supercore_of;       // per node
  std::vector<std::vector<SupercoreId>> out;   // sorted DAG edges
  std::vector<std::vector<ComponentId>> members;  // components merged into each

  std::size_t edge_count() const;
};

/// Strongly connected condensation of the component digraph.
SupercoreDag condense(const ComponentDigraph& cd);

bool is_acyclic(const SupercoreDag& dag);

/// Topological order of supercores; throws std::logic_error on a cycle.
std::vector<SupercoreId> topological_order(const SupercoreDag& dag);

/// Largest backbone per supercore, stored as the sorted list of supercores
/// reachable from it (itself included).
class BackboneIndex {
 public:
  BackboneIndex(const SupercoreDag& dag, std::vector<std::vector<SupercoreId>> reach);

  const std::vector<SupercoreId>& reachable(SupercoreId c) const { return reach_[c]; }
  std::size_t size(SupercoreId c) const { return sizes_[c]; }
  NodeSet members(SupercoreId c) const;
  std::size_t supercore_count() const { return reach_.size(); }
  const SupercoreDag& dag() const { return *dag_; }

 private:
  const SupercoreDag* dag_;
  std::vector<std::vector<SupercoreId>> reach_;
  std::vector<std::size_t> sizes_;
};

/// Reachability unions computed once per supercore in reverse topological
/// order. Throws std::logic_error if the digraph has a cycle.
BackboneIndex all_largest_backbones(const SupercoreDag& dag);

/// Complete-domain sizes per supercore; members are produced on request.
class DomainIndex {
 public:
  DomainIndex(const SocialGraph& g, const BackboneIndex& backbones);

  std::size_t size(SupercoreId c) const { return sizes_[c]; }
  NodeSet members(SupercoreId c) const;

 private:
  const SocialGraph* g_;
  const BackboneIndex* backbones_;
  std::vector<NodeSet> own_;  // closed neighborhood of each supercore alone
  std::vector<std::size_t> sizes_;
};

DomainIndex all_complete_domains(const SocialGraph& g, const BackboneIndex& backbones);

/// All stages for one policy, run back to back.
struct SupercorePipeline {
  SupercorePipeline(const SocialGraph& g, const RcpPolicy& p);

  const SocialGraph* graph;
  RcpPolicy policy;
  StrongTieGraph strong;
  ComponentDigraph digraph;
  SupercoreDag dag;
  BackboneIndex backbones;
  DomainIndex domains;

  SupercoreId supercore_of(NodeId v) const { return dag.supercore_of[v]; }
  std::size_t backbone_size(NodeId v) const { return backbones.size(supercore_of(v)); }
  std::size_t domain_size(NodeId v) const { return domains.size(supercore_of(v)); }
  NodeSet backbone_of(NodeId v) const { return backbones.members(supercore_of(v)); }
  NodeSet domain_of(NodeId v) const { return domains.members(supercore_of(v)); }

  // Supercore with the most members; ties go to the lower id.
  SupercoreId largest_supercore() const;

  nlohmann::ordered_json to_json(bool emit_members) const;

  SupercorePipeline(const SupercorePipeline&) = delete;
  SupercorePipeline& operator=(const SupercorePipeline&) = delete;
};

}  // namespace rcp

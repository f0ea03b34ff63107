#include <bit>
#include <cstdint>

#include <fmt/format.h>

#include "rcp/percolation.hpp"

namespace rcp {

namespace {

using Mask = std::uint32_t;

NodeSet to_set(Mask m) {
  NodeSet out;
  while (m != 0) {
    out.push_back(static_cast<NodeId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

}  // namespace

NodeSet brute_force_largest_backbone(const SocialGraph& g, const RcpPolicy& p, NodeId center,
                                     const BruteForceLimits& caps) {
  const std::size_t n = g.node_count();
  if (n > caps.max_nodes || n > 24) {
    throw OracleRefused(
        fmt::format("exhaustive search refused: {} nodes exceeds cap {}", n, caps.max_nodes));
  }
  if (!g.contains(center)) throw std::invalid_argument("center out of range");

  std::vector<Mask> adj(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId w : g.neighbors(v)) adj[v] |= Mask{1} << w;
  }

  // Induced connectivity of every subset, grown from its lowest member.
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<char> connected(std::size_t{1} << n, 0);
  for (Mask s = 1; s <= full && s != 0; ++s) {
    Mask reached = s & (~s + 1);
    Mask frontier = reached;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= s & ~reached;
      reached |= next;
      frontier = next;
    }
    connected[s] = reached == s;
  }

  // Necessary conditions only, so pruning never hides a feasible duplet:
  // R is connected, every candidate touches R, and R ∪ Q has a key node.
  auto worth_checking = [&](Mask r, Mask q) {
    if (!connected[r]) return false;
    for (Mask f = q; f != 0; f &= f - 1) {
      if ((adj[std::countr_zero(f)] & r) == 0) return false;
    }
    Mask u = r | q;
    for (Mask f = u; f != 0; f &= f - 1) {
      int l = std::countr_zero(f);
      if ((u & ~(Mask{1} << l) & ~adj[l]) == 0) return true;
    }
    return false;
  };

  Mask backbone = Mask{1} << center;
  bool grew = true;
  while (grew) {
    grew = false;
    const NodeSet current = to_set(backbone);
    const Mask outside = full & ~backbone;
    for (Mask q = outside; q != 0 && !grew; q = (q - 1) & outside) {
      for (Mask r = backbone; r != 0; r = (r - 1) & backbone) {
        if (!worth_checking(r, q)) continue;
        ExpansionDuplet duplet{to_set(r), to_set(q), std::nullopt};
        if (check_expansion_feasibility(g, p, duplet, current).feasible) {
          backbone |= q;
          grew = true;
          break;
        }
      }
    }
  }
  return to_set(backbone);
}

}  // namespace rcp

#pragma once

#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rcp/generators.hpp"
#include "rcp/graph.hpp"

namespace rcp::fixtures {

inline SocialGraph from_text(const std::string& text, LoadOptions options = {}) {
  std::istringstream in(text);
  return load_edge_list(in, options);
}

inline SocialGraph from_pairs(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::string text;
  for (const auto& [a, b] : pairs) text += a + " " + b + "\n";
  return from_text(text);
}

inline NodeId id(const SocialGraph& g, const std::string& label) {
  auto v = g.find(label);
  if (!v) throw std::out_of_range("no node " + label);
  return *v;
}

inline NodeSet ids(const SocialGraph& g, const std::vector<std::string>& labels) {
  NodeSet out;
  for (const auto& l : labels) out.push_back(id(g, l));
  std::sort(out.begin(), out.end());
  return out;
}

// Path p1-p2-p3-p4; each consecutive pair shares three private friends
// c<i>1..c<i>3; m is a friend of all four p's.
inline std::vector<std::pair<std::string, std::string>> ladder_pairs() {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 1; i <= 3; ++i) {
    std::string a = "p" + std::to_string(i);
    std::string b = "p" + std::to_string(i + 1);
    pairs.emplace_back(a, b);
    for (int j = 1; j <= 3; ++j) {
      std::string c = "c" + std::to_string(i) + std::to_string(j);
      pairs.emplace_back(a, c);
      pairs.emplace_back(b, c);
    }
  }
  for (int i = 1; i <= 4; ++i) pairs.emplace_back("m", "p" + std::to_string(i));
  return pairs;
}

inline SocialGraph ladder() { return from_pairs(ladder_pairs()); }

inline SocialGraph complete(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      pairs.emplace_back(prefix + std::to_string(i), prefix + std::to_string(j));
    }
  }
  return from_pairs(pairs);
}

inline SocialGraph star(std::size_t leaves) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 1; i <= leaves; ++i) pairs.emplace_back("hub", "l" + std::to_string(i));
  return from_pairs(pairs);
}

inline SocialGraph path(std::size_t n) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    pairs.emplace_back("v" + std::to_string(i), "v" + std::to_string(i + 1));
  }
  return from_pairs(pairs);
}

inline SocialGraph cycle(std::size_t n) {
  auto pairs = std::vector<std::pair<std::string, std::string>>{};
  for (std::size_t i = 0; i < n; ++i) {
    pairs.emplace_back("v" + std::to_string(i), "v" + std::to_string((i + 1) % n));
  }
  return from_pairs(pairs);
}

// Random small graphs for property tests: either a uniform random graph with
// a random density or a handful of overlapping cliques plus noise edges,
// which produces the strong ties the policies care about.
class RandomGraphs {
 public:
  explicit RandomGraphs(std::uint64_t seed) : rng_(seed) {}

  SocialGraph next(std::size_t min_n, std::size_t max_n) {
    std::uniform_int_distribution<std::size_t> size(min_n, max_n);
    const std::size_t n = size(rng_);
    std::vector<Edge> edges;
    if (n < 3 || std::bernoulli_distribution(0.4)(rng_)) {
      double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng_);
      edges = random_edges(n, density, rng_);
    } else {
      std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
      std::size_t cliques = std::uniform_int_distribution<std::size_t>(1, 1 + n / 3)(rng_);
      for (std::size_t c = 0; c < cliques; ++c) {
        std::size_t k = std::uniform_int_distribution<std::size_t>(3, std::min<std::size_t>(n, 7))(rng_);
        std::set<NodeId> members;
        while (members.size() < k) members.insert(node(rng_));
        for (NodeId a : members) {
          for (NodeId b : members) {
            if (a < b) edges.emplace_back(a, b);
          }
        }
      }
      double noise = std::uniform_real_distribution<double>(0.0, 0.15)(rng_);
      auto extra = random_edges(n, noise, rng_);
      edges.insert(edges.end(), extra.begin(), extra.end());
    }
    return SocialGraph::from_edges(n, edges);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rcp::fixtures

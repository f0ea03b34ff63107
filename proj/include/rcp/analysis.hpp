#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rcp/graph.hpp"

namespace rcp {

struct BetaRange {
  std::size_t lo = 3;
  std::size_t hi = 10;

  // "A:B" or a single "A".
  static BetaRange parse(const std::string& text);
  std::vector<std::size_t> values() const;
};

// Half-open degree interval [lo, hi).
struct DegreeBucket {
  std::size_t lo = 0;
  std::size_t hi = 1;

  bool contains(std::size_t d) const { return d >= lo && d < hi; }
  std::string name() const;
};

/// [0,1), [1,2), [2,4), [4,8), ... up to the first bucket holding max_degree.
std::vector<DegreeBucket> power_of_two_buckets(std::size_t max_degree);

/// Buckets from ascending cut points: [0,c0), [c0,c1), ..., [c_last, inf).
std::vector<DegreeBucket> buckets_from_edges(const std::vector<std::size_t>& cuts);

struct SweepRow {
  std::size_t beta = 0;
  std::size_t alpha = 0;
  DegreeBucket bucket;
  std::size_t nodes = 0;
  std::size_t qualifying = 0;  // complete domain size >= threshold

  double fraction() const {
    return nodes == 0 ? 0.0 : static_cast<double>(qualifying) / static_cast<double>(nodes);
  }
};

struct SweepResult {
  std::size_t threshold = 0;
  std::vector<DegreeBucket> buckets;
  std::vector<SweepRow> rows;  // ordered by beta, then bucket

  // Fraction for (beta index, bucket index).
  double fraction(std::size_t beta_index, std::size_t bucket_index) const {
    return rows[beta_index * buckets.size() + bucket_index].fraction();
  }
  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

/// alpha defaults to beta + 1 for every beta in the range.
SweepResult sweep_domains(const SocialGraph& g, const BetaRange& betas, std::size_t threshold,
                          std::optional<std::size_t> alpha = std::nullopt,
                          std::vector<DegreeBucket> buckets = {});

struct PulsRow {
  std::string group;
  std::size_t beta = 0;
  std::size_t alpha = 0;
  std::size_t group_size = 0;
  std::size_t in_largest = 0;

  double puls() const {
    return group_size == 0 ? 0.0 : static_cast<double>(in_largest) / static_cast<double>(group_size);
  }
};

struct PulsTable {
  std::vector<PulsRow> rows;  // ordered by group label, then beta
  std::vector<std::pair<std::size_t, std::size_t>> largest_size;  // beta -> supercore size
  std::vector<std::string> unknown_labels;  // attribute labels absent from the graph

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

PulsTable compute_puls(const SocialGraph& g,
                       const std::vector<std::pair<std::string, std::string>>& attributes,
                       const BetaRange& betas, std::optional<std::size_t> alpha = std::nullopt);

/// Fixed-point rendering used by all report writers.
std::string fixed6(double v);

/// Rounds to six decimals so JSON output matches the CSV precision.
double round6(double v);

}  // namespace rcp

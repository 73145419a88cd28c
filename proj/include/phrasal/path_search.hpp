// path_search.hpp: capped weighted shortest paths and word-phrase relatedness.
#pragma once

#include <string>
#include <vector>

#include "phrasal/network.hpp"

namespace phrasal {

// Scoring constants. The cap is the path cost beyond which two words count
// as unrelated (twice the maximum edge weight); the floor is the cost of
// traversing from a word to itself (twice the sense weight).
struct RelatednessParams {
  int max_path_cost = 24;
  int min_path_cost = 8;

  static RelatednessParams from_table(const RelationTable& table) {
    return RelatednessParams{2 * table.max_weight(), 2 * table.sense_weight()};
  }
};

struct PathHop {
  NodeId node;
  std::string relation;  // edge entering this node; empty on the source
  int weight;            // 0 on the source
};

struct PathResult {
  int cost;
  std::vector<PathHop> hops;  // empty when capped or source == target
  bool capped;
};

struct RelatednessScore {
  double value;  // in [0, 1]
  std::vector<int> per_word_costs;
};

// Least-cost directed path between two word nodes. Identical words cost
// min_path_cost by convention; when no path of cost <= max_path_cost exists
// the result saturates at max_path_cost with capped set. Equal-cost paths
// break ties by hop count, then by the lexicographic node-label sequence,
// so explain output is reproducible. Throws WordNotInNetworkError when a
// label does not resolve to a word node.
PathResult shortest_path_cost(const SemanticNetwork& net,
                              const std::string& source_word,
                              const std::string& target_word,
                              const RelatednessParams& params = {});

// The normalized relatedness for per-word path costs summing to S over n
// phrase words: (M*n - (S - m*n)) / (M*n), clamped to [0, 1].
double relatedness_from_costs(const std::vector<int>& per_word_costs,
                              const RelatednessParams& params);

// One capped shortest path per phrase word, summed and normalized. Unresolved
// labels propagate WordNotInNetworkError so callers can fall back to the
// distributional model.
RelatednessScore word_phrase_relatedness(const SemanticNetwork& net,
                                         const std::string& word,
                                         const std::vector<std::string>& phrase,
                                         const RelatednessParams& params = {});

// Hop list rendered as `label --relation(weight)--> label` lines.
std::vector<std::string> format_path(const SemanticNetwork& net,
                                     const PathResult& path);

}  // namespace phrasal

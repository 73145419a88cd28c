#include "phrasal/path_search.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

#include "phrasal/errors.hpp"

namespace phrasal {

namespace {

struct SearchState {
  int cost = std::numeric_limits<int>::max();
  int hops = 0;
  NodeId parent = 0;
  int via_edge = -1;  // index into neighbors(parent); -1 on the source
};

// Node labels along the best-known path to `id`, source first.
std::vector<const std::string*> path_labels(const SemanticNetwork& net,
                                            const std::vector<SearchState>& st,
                                            NodeId source, NodeId id) {
  std::vector<const std::string*> labels;
  NodeId cur = id;
  while (true) {
    labels.push_back(&net.node(cur).label);
    if (cur == source) break;
    cur = st[cur].parent;
  }
  std::reverse(labels.begin(), labels.end());
  return labels;
}

bool label_seq_less(const std::vector<const std::string*>& a,
                    const std::vector<const std::string*>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const std::string* x, const std::string* y) { return *x < *y; });
}

}  // namespace

PathResult shortest_path_cost(const SemanticNetwork& net,
                              const std::string& source_word,
                              const std::string& target_word,
                              const RelatednessParams& params) {
  auto source = net.find_word(source_word);
  if (!source) throw WordNotInNetworkError(source_word);
  auto target = net.find_word(target_word);
  if (!target) throw WordNotInNetworkError(target_word);

  if (*source == *target) return PathResult{params.min_path_cost, {}, false};

  std::vector<SearchState> state(net.node_count());
  state[*source].cost = 0;

  // Priority key is (cost, hops); the label-sequence tiebreak is applied at
  // relaxation time. Entries are lazily deleted.
  using Entry = std::tuple<int, int, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  queue.emplace(0, 0, *source);

  while (!queue.empty()) {
    auto [cost, hops, u] = queue.top();
    queue.pop();
    if (cost > params.max_path_cost) break;
    if (cost != state[u].cost || hops != state[u].hops) continue;  // stale

    const auto& edges = net.neighbors(u);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      const OutEdge& e = edges[i];
      int ncost = cost + e.weight;
      if (ncost > params.max_path_cost) continue;
      int nhops = hops + 1;
      SearchState& sv = state[e.dst];
      bool better = std::tie(ncost, nhops) < std::tie(sv.cost, sv.hops);
      if (!better && ncost == sv.cost && nhops == sv.hops) {
        // Same cost and length: keep the lexicographically smaller label path.
        auto candidate = path_labels(net, state, *source, u);
        candidate.push_back(&net.node(e.dst).label);
        better = label_seq_less(candidate,
                                path_labels(net, state, *source, e.dst));
      }
      if (better) {
        sv.cost = ncost;
        sv.hops = nhops;
        sv.parent = u;
        sv.via_edge = i;
        queue.emplace(ncost, nhops, e.dst);
      }
    }
  }

  if (state[*target].cost > params.max_path_cost) {
    return PathResult{params.max_path_cost, {}, true};
  }

  std::vector<PathHop> hops;
  NodeId cur = *target;
  while (cur != *source) {
    const SearchState& s = state[cur];
    const OutEdge& e = net.neighbors(s.parent)[s.via_edge];
    hops.push_back(PathHop{cur, e.relation, e.weight});
    cur = s.parent;
  }
  hops.push_back(PathHop{*source, "", 0});
  std::reverse(hops.begin(), hops.end());
  return PathResult{state[*target].cost, std::move(hops), false};
}

double relatedness_from_costs(const std::vector<int>& per_word_costs,
                              const RelatednessParams& params) {
  long sum = 0;
  for (int c : per_word_costs) sum += c;
  const double max_total =
      static_cast<double>(params.max_path_cost) * per_word_costs.size();
  const double min_total =
      static_cast<double>(params.min_path_cost) * per_word_costs.size();
  double value = (max_total - (sum - min_total)) / max_total;
  return std::clamp(value, 0.0, 1.0);
}

RelatednessScore word_phrase_relatedness(const SemanticNetwork& net,
                                         const std::string& word,
                                         const std::vector<std::string>& phrase,
                                         const RelatednessParams& params) {
  if (phrase.empty()) throw EmptyPhraseError();
  RelatednessScore score;
  score.per_word_costs.reserve(phrase.size());
  for (const std::string& phrase_word : phrase) {
    score.per_word_costs.push_back(
        shortest_path_cost(net, word, phrase_word, params).cost);
  }
  score.value = relatedness_from_costs(score.per_word_costs, params);
  return score;
}

std::vector<std::string> format_path(const SemanticNetwork& net,
                                     const PathResult& path) {
  std::vector<std::string> lines;
  for (std::size_t i = 1; i < path.hops.size(); ++i) {
    const PathHop& hop = path.hops[i];
    lines.push_back(net.node(path.hops[i - 1].node).label + " --" +
                    hop.relation + "(" + std::to_string(hop.weight) + ")--> " +
                    net.node(hop.node).label);
  }
  return lines;
}

}  // namespace phrasal

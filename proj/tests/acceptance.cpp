// Acceptance harness: one pass/fail line per criterion, nonzero exit when
// any fails. Each criterion is self-contained and uses its own oracle.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "phrasal/collocation.hpp"
#include "phrasal/context.hpp"
#include "phrasal/errors.hpp"
#include "phrasal/metrics.hpp"
#include "phrasal/network.hpp"
#include "phrasal/path_search.hpp"
#include "phrasal/pmi_vector.hpp"
#include "phrasal/rule_learner.hpp"
#include "phrasal/rules.hpp"
#include "phrasal/stopwords.hpp"

using namespace phrasal;

namespace {

std::string fx(const char* name) {
  return std::string(FIXTURES_DIR "/") + name;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(PHRASAL_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

// ---- criterion 1: worked example ------------------------------------------

bool worked_example(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  SemanticNetwork net = load_network(fx("interview_net.tsv"));

  int cost_formal = shortest_path_cost(net, "interview", "formal", {}).cost;
  int cost_meeting = shortest_path_cost(net, "interview", "meeting", {}).cost;
  double value =
      word_phrase_relatedness(net, "interview", {"formal", "meeting"}, {}).value;
  double elapsed = seconds_since(t0);

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "costs %d/%d, value %.6f, %.3f s", cost_formal, cost_meeting,
                value, elapsed);
  detail = buf;
  return cost_formal == 12 && cost_meeting == 20 &&
         std::fabs(value - 0.6667) <= 0.0001 && elapsed < 1.0;
}

// ---- criterion 2: identity and saturation ---------------------------------

bool identity_saturation(std::string& detail) {
  SemanticNetwork net = load_network(fx("interview_net.tsv"));

  double self = word_phrase_relatedness(net, "interview", {"interview"}, {}).value;
  bool ok = self == 1.0;

  // panel's synset has no outgoing relations, so every target is unreachable
  std::vector<std::vector<std::string>> phrases = {
      {"meeting"},
      {"meeting", "formal"},
      {"meeting", "formal", "candidate"},
  };
  const double third = 1.0 / 3.0;
  for (const auto& phrase : phrases) {
    ok = ok && word_phrase_relatedness(net, "panel", phrase, {}).value == third;
  }
  detail = "self " + std::to_string(self) + ", floor checks n=1..3";
  return ok;
}

// ---- criterion 3: shortest-path oracle ------------------------------------

int brute_force_cost(const SemanticNetwork& net, NodeId src, NodeId dst,
                     int cap, std::vector<bool>& visited) {
  if (src == dst) return 0;
  visited[src] = true;
  int best = cap + 1;
  for (const auto& e : net.neighbors(src)) {
    if (visited[e.dst] || e.weight > cap) continue;
    int rest = brute_force_cost(net, e.dst, dst, cap - e.weight, visited);
    if (e.weight + rest < best) best = e.weight + rest;
  }
  visited[src] = false;
  return best;
}

SemanticNetwork random_network(std::mt19937& rng) {
  SemanticNetwork net;
  std::uniform_int_distribution<int> word_n(2, 5);
  std::uniform_int_distribution<int> syn_n(1, 7);
  int words = word_n(rng);
  int syns = syn_n(rng);
  std::vector<NodeId> w, s;
  for (int i = 0; i < words; ++i)
    w.push_back(net.add_node(NodeKind::Word, "w" + std::to_string(i)));
  for (int i = 0; i < syns; ++i)
    s.push_back(net.add_node(NodeKind::Synset, "#s" + std::to_string(i)));

  const char* ss_relations[] = {"hypernym",  "similar_to", "hyponym",
                                "also_see",  "entailment", "meronym_member",
                                "attribute", "instance_hypernym"};
  std::uniform_int_distribution<std::size_t> ss_pick(0, 7);
  std::uniform_int_distribution<int> edge_n(1, 2 * (words + syns));
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  auto pick = [&](const std::vector<NodeId>& v) {
    std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
    return v[d(rng)];
  };

  int edges = edge_n(rng);
  for (int i = 0; i < edges; ++i) {
    switch (kind(rng)) {
      case 0: {
        NodeId a = pick(s), b = pick(s);
        if (a != b) net.add_edge(a, b, ss_relations[ss_pick(rng)]);
        break;
      }
      case 1:
        net.add_edge(pick(s), pick(w), "predicate:arg");
        break;
      case 2:
        net.add_edge(pick(w), pick(s),
                     coin(rng) ? "lemma-synset" : "inverse_predicate");
        break;
      default: {
        NodeId a = pick(w), b = pick(w);
        if (a != b) net.add_edge(a, b, "derivationally_related");
        break;
      }
    }
  }
  return net;
}

bool dijkstra_oracle(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(424242);
  RelatednessParams params;
  long checked = 0;
  long mismatches = 0;

  for (int trial = 0; trial < 200; ++trial) {
    SemanticNetwork net = random_network(rng);
    std::vector<NodeId> words;
    for (NodeId id = 0; id < net.node_count(); ++id)
      if (net.node(id).kind == NodeKind::Word) words.push_back(id);

    std::vector<bool> visited(net.node_count(), false);
    for (NodeId a : words) {
      for (NodeId b : words) {
        if (a == b) continue;
        PathResult got =
            shortest_path_cost(net, net.node(a).label, net.node(b).label, params);
        int want = brute_force_cost(net, a, b, params.max_path_cost, visited);
        bool want_capped = want > params.max_path_cost;
        int want_cost = want_capped ? params.max_path_cost : want;
        ++checked;
        if (got.cost != want_cost || got.capped != want_capped) ++mismatches;
      }
    }
  }
  double elapsed = seconds_since(t0);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "200 networks, %ld pairs, %ld mismatches, %.2f s", checked,
                mismatches, elapsed);
  detail = buf;
  return mismatches == 0 && checked > 0 && elapsed < 30.0;
}

// ---- criterion 4: PMI oracle ----------------------------------------------

bool pmi_oracle(std::string& detail) {
  Corpus corpus = load_corpus(fx("corpus.txt"));
  if (corpus_token_count(corpus) > 50) {
    detail = "fixture corpus exceeds 50 tokens";
    return false;
  }

  // independent recount over index pairs rather than offsets
  CollocationCounts oracle;
  for (const auto& sentence : corpus) {
    const auto n = static_cast<long>(sentence.size());
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        if (j != i && std::labs(j - i) <= 3)
          oracle.add_pair(sentence[i], sentence[j]);
  }

  CollocationCounts counts = count_collocations(corpus, 3);
  long entries = 0;
  double worst = 0.0;

  for (const auto& [target, contexts] : oracle.pair_counts) {
    PmiVector v = pmi_vector(counts, target);
    for (const auto& [context, pair] : contexts) {
      const double expected =
          std::log(static_cast<double>(pair) * oracle.grand_total /
                   (static_cast<double>(oracle.target_totals.at(target)) *
                    oracle.context_totals.at(context))) /
          std::log(2.0);
      auto it = v.entries.find(context);
      if (it == v.entries.end()) {
        // only an exact independence ratio may be dropped
        if (pair * oracle.grand_total !=
            oracle.target_totals.at(target) * oracle.context_totals.at(context))
          return detail = "missing entry " + target + "/" + context, false;
        continue;
      }
      ++entries;
      worst = std::max(worst, std::fabs(it->second - expected));
    }
  }
  if (worst > 1e-9) {
    detail = "PMI deviation " + std::to_string(worst);
    return false;
  }

  // cosine self-similarity
  double worst_cos = 0.0;
  for (const auto& [target, contexts] : counts.pair_counts) {
    PmiVector v = pmi_vector(counts, target);
    if (v.empty()) continue;
    worst_cos = std::max(worst_cos, std::fabs(cosine(v, v) - 1.0));
  }
  if (worst_cos > 1e-12) {
    detail = "cosine self deviation " + std::to_string(worst_cos);
    return false;
  }

  // negative PMI entries survive: a dominates its window, so (a,a) is
  // over-represented marginally and under-represented jointly
  {
    std::istringstream tiny("a a a a b\n");
    CollocationCounts c = count_collocations(load_corpus(tiny), 1);
    PmiVector v = pmi_vector(c, "a");
    auto it = v.entries.find("a");
    if (it == v.entries.end() ||
        std::fabs(it->second - std::log2(48.0 / 49.0)) > 1e-9 ||
        it->second >= 0.0) {
      detail = "negative PMI entry mishandled";
      return false;
    }
  }

  // sharded counting merges exactly
  Corpus head(corpus.begin(), corpus.begin() + corpus.size() / 2);
  Corpus tail(corpus.begin() + corpus.size() / 2, corpus.end());
  CollocationCounts merged = count_collocations(head, 3);
  merged.merge(count_collocations(tail, 3));
  if (merged.grand_total != counts.grand_total ||
      merged.pair_counts.size() != counts.pair_counts.size())
    return detail = "shard merge grand totals differ", false;
  for (const auto& [target, contexts] : counts.pair_counts)
    for (const auto& [context, n] : contexts)
      if (merged.pair(target, context) != n)
        return detail = "shard merge mismatch at " + target, false;

  char buf[120];
  std::snprintf(buf, sizeof buf, "%ld entries, worst PMI dev %.2e, cos dev %.2e",
                entries, worst, worst_cos);
  detail = buf;
  return entries > 0;
}

// ---- criterion 5: rule fidelity -------------------------------------------

bool rule_fidelity(std::string& detail) {
  RuleSet rules = run3_rules();
  long mismatches = 0;
  for (int i = 0; i < 40; ++i) {
    for (int j = 0; j < 25; ++j) {
      const double sn = i / 40.0;
      const double ds = j / 25.0;
      bool predicate = sn > 0.61 || ds > 0.40 || (sn > 0.53 && ds > 0.31);
      const std::string& got =
          apply_rules(rules, {{kFeatureSn, sn}, {kFeatureDs, ds}});
      if ((got == kPositive) != predicate) ++mismatches;
    }
  }
  detail = "1000 grid points, " + std::to_string(mismatches) + " mismatches";
  return mismatches == 0;
}

// ---- criterion 6: learner recovery ----------------------------------------

bool learner_recovery(std::string& detail) {
  std::vector<TrainingInstance> train;
  for (double v : {0.55, 0.58, 0.60})
    train.push_back({{{kFeatureSn, v}}, kNegative});
  for (double v : {0.63, 0.70, 0.80})
    train.push_back({{{kFeatureSn, v}}, kPositive});

  RuleSet learned = learn_threshold_rules(train, 8);
  if (learned.rules.size() != 1 || learned.rules[0].conditions.size() != 1) {
    detail = "unexpected rule shape";
    return false;
  }
  double threshold = learned.rules[0].conditions[0].threshold;
  if (std::fabs(threshold - 0.61) > 0.02) {
    detail = "threshold " + std::to_string(threshold);
    return false;
  }

  RuleSet teacher = run3_rules();
  std::vector<TrainingInstance> grid;
  for (int i = 0; i < 40; ++i) {
    for (int j = 0; j < 25; ++j) {
      FeatureMap f{{kFeatureSn, i / 40.0}, {kFeatureDs, j / 25.0}};
      grid.push_back({f, apply_rules(teacher, f)});
    }
  }
  RuleSet relearned = learn_threshold_rules(grid, 16);
  std::size_t correct = 0;
  for (const auto& inst : grid)
    if (apply_rules(relearned, inst.features) == inst.label) ++correct;

  char buf[120];
  std::snprintf(buf, sizeof buf, "threshold %.4f, grid accuracy %zu/%zu",
                threshold, correct, grid.size());
  detail = buf;
  return correct == grid.size();
}

// ---- criterion 7: metrics arithmetic --------------------------------------

bool metrics_arithmetic(std::string& detail) {
  Metrics m{2, 1, 3, 2};
  char buf[120];
  std::snprintf(buf, sizeof buf, "P %.4f R %.4f F %.4f", m.precision(),
                m.recall(), m.f_measure());
  detail = buf;
  return std::fabs(m.precision() - 0.6667) <= 1e-4 &&
         std::fabs(m.recall() - 0.5000) <= 1e-4 &&
         std::fabs(m.f_measure() - 0.5714) <= 1e-4;
}

// ---- criterion 8: context pipeline ----------------------------------------

bool context_pipeline(std::string& detail) {
  SemanticNetwork net = load_network(fx("context_net.tsv"));
  Stopwords stopwords;
  ContextPipeline pipeline;
  pipeline.net = &net;
  pipeline.stopwords = &stopwords;
  pipeline.rules = default_context_rules();
  pipeline.csets["old school"] = build_collocation_set(
      load_corpus(fx("context_corpus.txt")), {"old", "school"});

  auto instances = load_context_dataset(fx("context_dataset.tsv"));
  if (instances.size() != 12) {
    detail = "expected 12 instances, got " + std::to_string(instances.size());
    return false;
  }
  double accuracy = evaluate_accuracy(instances, pipeline);

  auto t0 = std::chrono::steady_clock::now();
  CliResult cli = run_cli("context --data " + fx("context_dataset.tsv") +
                          " --net " + fx("context_net.tsv") + " --corpus " +
                          fx("context_corpus.txt"));
  double elapsed = seconds_since(t0);

  char buf[160];
  std::snprintf(buf, sizeof buf, "accuracy %.4f, command %.2f s", accuracy,
                elapsed);
  detail = buf;
  return accuracy == 1.0 && cli.code == 0 &&
         cli.out.find("#accuracy\t1.0000\n") != std::string::npos &&
         elapsed < 5.0;
}

// ---- criterion 9: end-to-end smoke ----------------------------------------

bool end_to_end(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  const std::string counts = "/tmp/phrasal_acceptance_counts.tsv";

  auto round_trip = [&]() -> std::string {
    std::string all;
    CliResult net = run_cli("build-net " + fx("classify_net.tsv"));
    CliResult dist = run_cli("dist-build " + fx("corpus.txt") + " -o " + counts);
    CliResult cls = run_cli("classify --data " + fx("classify_dataset.tsv") +
                            " --net " + fx("classify_net.tsv") + " --counts " +
                            counts + " --mode run3");
    if (net.code != 0 || dist.code != 0 || cls.code != 0) return "";
    return net.out + dist.out + cls.out;
  };

  std::string first = round_trip();
  std::string second = round_trip();
  double elapsed = seconds_since(t0);

  char buf[120];
  std::snprintf(buf, sizeof buf, "%zu output bytes, %.2f s", first.size(),
                elapsed);
  detail = buf;
  return !first.empty() && first == second &&
         first.find("#f_measure\t1.0000\n") != std::string::npos &&
         elapsed < 10.0;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*check)(std::string&);
  };
  const Criterion criteria[] = {
      {"worked-example fidelity", worked_example},
      {"identity and saturation", identity_saturation},
      {"shortest-path oracle", dijkstra_oracle},
      {"PMI oracle", pmi_oracle},
      {"rule fidelity", rule_fidelity},
      {"learner recovery", learner_recovery},
      {"metrics arithmetic", metrics_arithmetic},
      {"context pipeline", context_pipeline},
      {"end-to-end smoke", end_to_end},
  };

  int failures = 0;
  int number = 1;
  for (const auto& c : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = c.check(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %d/9 %s (%s)\n", pass ? "PASS" : "FAIL", number, c.name,
                detail.c_str());
    if (!pass) ++failures;
    ++number;
  }
  return failures == 0 ? 0 : 1;
}

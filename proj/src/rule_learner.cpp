#include "phrasal/rule_learner.hpp"

#include <algorithm>
#include <set>

#include "phrasal/errors.hpp"

namespace phrasal {

namespace {

using IndexList = std::vector<std::size_t>;

std::size_t count_label(const std::vector<TrainingInstance>& data,
                        const IndexList& indices, const std::string& label) {
  std::size_t n = 0;
  for (std::size_t i : indices) n += data[i].label == label;
  return n;
}

IndexList covered_by(const std::vector<TrainingInstance>& data,
                     const IndexList& indices, const Condition& condition) {
  IndexList out;
  for (std::size_t i : indices) {
    if (condition_holds(condition, data[i].features)) out.push_back(i);
  }
  return out;
}

struct Candidate {
  Condition condition;
  IndexList covered;
  double precision = -1.0;
};

// True when `a` is preferable: precision desc, coverage desc, threshold asc,
// feature asc, '>' before '<'.
bool candidate_better(const Candidate& a, const Candidate& b) {
  if (a.precision != b.precision) return a.precision > b.precision;
  if (a.covered.size() != b.covered.size()) {
    return a.covered.size() > b.covered.size();
  }
  if (a.condition.threshold != b.condition.threshold) {
    return a.condition.threshold < b.condition.threshold;
  }
  if (a.condition.feature != b.condition.feature) {
    return a.condition.feature < b.condition.feature;
  }
  return a.condition.cmp == Comparator::Greater &&
         b.condition.cmp != Comparator::Greater;
}

// One grown rule: conditions plus the instances it covers within `pool`.
struct GrownRule {
  std::vector<Condition> conditions;
  IndexList covered;
  double precision = 0.0;
};

GrownRule grow_rule(const std::vector<TrainingInstance>& data,
                    const IndexList& pool, const std::string& target_label) {
  GrownRule rule;
  rule.covered = pool;
  rule.precision =
      static_cast<double>(count_label(data, pool, target_label)) / pool.size();

  while (true) {
    // Candidate features present among the covered instances, in sorted order.
    std::set<std::string> feature_names;
    for (std::size_t i : rule.covered) {
      for (const auto& [name, value] : data[i].features) {
        feature_names.insert(name);
      }
    }

    Candidate best;
    for (const std::string& feature : feature_names) {
      std::set<double> values;
      for (std::size_t i : rule.covered) {
        auto it = data[i].features.find(feature);
        if (it != data[i].features.end()) values.insert(it->second);
      }
      if (values.size() < 2) continue;
      auto prev = values.begin();
      for (auto cur = std::next(prev); cur != values.end(); ++cur, ++prev) {
        const double midpoint = (*prev + *cur) / 2.0;
        for (Comparator cmp : {Comparator::Greater, Comparator::Less}) {
          Candidate cand;
          cand.condition = Condition{feature, cmp, midpoint};
          cand.covered = covered_by(data, rule.covered, cand.condition);
          if (cand.covered.empty()) continue;
          cand.precision =
              static_cast<double>(
                  count_label(data, cand.covered, target_label)) /
              cand.covered.size();
          if (best.precision < 0.0 || candidate_better(cand, best)) {
            best = std::move(cand);
          }
        }
      }
    }

    if (best.precision <= rule.precision) break;  // no gain
    rule.conditions.push_back(best.condition);
    rule.covered = std::move(best.covered);
    rule.precision = best.precision;
    if (rule.precision >= 1.0) break;
  }
  return rule;
}

}  // namespace

RuleSet learn_threshold_rules(const std::vector<TrainingInstance>& train,
                              std::size_t max_rules,
                              const std::string& target_label,
                              const std::string& default_label) {
  IndexList pool(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) pool[i] = i;

  const std::size_t targets = count_label(train, pool, target_label);
  if (train.size() < 2 || targets == 0 || targets == train.size()) {
    throw DegenerateTrainingError(
        "training data must contain both labels (got " +
        std::to_string(targets) + " of " + std::to_string(train.size()) +
        " instances labeled '" + target_label + "')");
  }

  RuleSet rules;
  rules.default_outcome = default_label;
  while (rules.rules.size() < max_rules) {
    const std::size_t remaining_targets =
        count_label(train, pool, target_label);
    if (remaining_targets == 0) break;
    const double base_rate =
        static_cast<double>(remaining_targets) / pool.size();

    GrownRule grown = grow_rule(train, pool, target_label);
    if (grown.conditions.empty() || grown.precision < base_rate) break;
    rules.rules.push_back(Rule{grown.conditions, target_label});

    // Remove the covered target instances; covered non-targets stay.
    std::set<std::size_t> covered(grown.covered.begin(), grown.covered.end());
    IndexList next;
    for (std::size_t i : pool) {
      if (!covered.count(i) || train[i].label != target_label) {
        next.push_back(i);
      }
    }
    pool = std::move(next);
  }
  return rules;
}

}  // namespace phrasal

// rule_learner.hpp: greedy separate-and-conquer threshold-rule induction.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "phrasal/rules.hpp"

namespace phrasal {

struct TrainingInstance {
  FeatureMap features;
  std::string label;
};

// Learns an ordered rule set for `target_label`, one conjunctive rule at a
// time. A rule grows by adding the condition that maximizes its precision
// over candidate thresholds at midpoints between consecutive sorted feature
// values (ties: higher coverage, then lower threshold, then feature name,
// then '>' before '<'); growth stops at precision 1 or when no condition
// improves it. Covered target instances are removed and the next rule
// starts, until max_rules, no target instances remain, or the best rule no
// longer beats the target base rate. The default outcome is
// `default_label`. Throws DegenerateTrainingError unless both labels occur.
RuleSet learn_threshold_rules(const std::vector<TrainingInstance>& train,
                              std::size_t max_rules,
                              const std::string& target_label = kPositive,
                              const std::string& default_label = kNegative);

}  // namespace phrasal

#include "phrasal/metrics.hpp"

namespace phrasal {

Metrics evaluate(const RuleSet& rules,
                 const std::vector<std::pair<FeatureMap, std::string>>& dataset,
                 const std::string& positive_label) {
  Metrics m;
  for (const auto& [features, gold] : dataset) {
    const bool predicted_positive = apply_rules(rules, features) == positive_label;
    const bool gold_positive = gold == positive_label;
    if (predicted_positive && gold_positive) {
      ++m.tp;
    } else if (predicted_positive) {
      ++m.fp;
    } else if (gold_positive) {
      ++m.fn;
    } else {
      ++m.tn;
    }
  }
  return m;
}

}  // namespace phrasal

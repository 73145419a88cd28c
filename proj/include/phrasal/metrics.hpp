// metrics.hpp: precision / recall / F-measure over a binary confusion.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phrasal/rules.hpp"

namespace phrasal {

struct Metrics {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;

  double precision() const {
    return tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
  }
  double recall() const {
    return tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
  }
  double f_measure() const {
    const double p = precision();
    const double r = recall();
    return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
  }
};

// Confusion counts with `positive_label` as the target class.
Metrics evaluate(const RuleSet& rules,
                 const std::vector<std::pair<FeatureMap, std::string>>& dataset,
                 const std::string& positive_label = kPositive);

}  // namespace phrasal

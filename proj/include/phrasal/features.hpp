// features.hpp: feature assembly for word-phrase pairs and dataset I/O.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "phrasal/collocation.hpp"
#include "phrasal/network.hpp"
#include "phrasal/path_search.hpp"
#include "phrasal/rule_learner.hpp"
#include "phrasal/rules.hpp"

namespace phrasal {

// The (SN, DS) pair for one word-phrase instance. SN is absent when a word
// was missing from the network; DS is always computed (0 for unattested
// vocabulary).
struct FeatureVector {
  std::optional<double> sn;
  double ds = 0.0;

  FeatureMap to_map() const;
};

FeatureVector assemble_features(const SemanticNetwork& net,
                                const CollocationCounts& counts,
                                const std::string& word,
                                const std::vector<std::string>& phrase,
                                const RelatednessParams& params = {},
                                std::size_t k = 1000);

// The second-run configuration: the network relatedness rule whenever SN is
// available, the DS > 0.40 fallback otherwise.
std::string run2_classify(const FeatureVector& fv);

// Word-phrase dataset rows: `word<TAB>phrase-with-spaces<TAB>label`, label
// positive or negative. A missing or empty label column marks an unlabeled
// row. Tokens are lowercased.
struct WordPhraseInstance {
  std::string word;
  std::vector<std::string> phrase;
  std::string label;  // empty when unlabeled
};

std::vector<WordPhraseInstance> load_word_phrase_dataset(std::istream& in);
std::vector<WordPhraseInstance> load_word_phrase_dataset(
    const std::string& path);

// Feature table with a header row naming the feature columns and a final
// `label` column; empty cells are absent features.
struct FeatureDataset {
  std::vector<std::string> feature_names;
  std::vector<TrainingInstance> instances;
};

FeatureDataset load_feature_dataset(std::istream& in);
FeatureDataset load_feature_dataset(const std::string& path);

}  // namespace phrasal

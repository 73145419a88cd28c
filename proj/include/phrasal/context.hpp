// context.hpp: literal-vs-figurative classification of a phrase occurrence.
//
// Features per occurrence:
//   fc  - 1 when the tokens adjacent to the phrase match a frequent
//         collocation expression (1-3 tokens) seen next to the phrase in a
//         corpus, else 0
//   srb - relatedness of the first content word before the phrase to the
//         phrase itself (1.0 when there is no such word or it is unknown)
//   sra - same for the first content word after the phrase
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phrasal/collocation.hpp"
#include "phrasal/network.hpp"
#include "phrasal/path_search.hpp"
#include "phrasal/rules.hpp"
#include "phrasal/stopwords.hpp"

namespace phrasal {

// One phrase occurrence inside a tokenized sentence. The phrase occupies
// sentence[start, end) and must match `phrase` token for token.
struct ContextInstance {
  std::vector<std::string> phrase;
  std::vector<std::string> sentence;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string label;  // "literal", "figurative", or empty when unlabeled
};

struct RankedExpression {
  std::string expression;  // 1-3 tokens, space-joined
  std::uint64_t count = 0;
};

// The most frequent expressions observed immediately before and after a
// phrase, ranked count-descending with lexicographic tie-break.
struct CollocationSet {
  std::string phrase;
  std::vector<RankedExpression> before;
  std::vector<RankedExpression> after;

  bool before_contains(const std::string& expression) const;
  bool after_contains(const std::string& expression) const;
};

struct ContextFeatures {
  int fc = 0;
  double srb = 1.0;
  double sra = 1.0;

  FeatureMap to_map() const;
};

// Collects the k most frequent 1-to-3-token expressions adjacent to each
// occurrence of `phrase` in the corpus. Unattested phrases yield empty sets.
CollocationSet build_collocation_set(const Corpus& corpus,
                                     const std::vector<std::string>& phrase,
                                     std::size_t k = 1000);

// 1 iff the tokens directly before the span end with a before-expression or
// the tokens directly after begin with an after-expression.
int fc_feature(const ContextInstance& instance, const CollocationSet& cset);

enum class Direction { Before, After };

// Nearest all-alphabetic non-stopword token outside the span in the given
// direction; nullopt when the sentence edge is reached first.
std::optional<std::string> content_word(const std::vector<std::string>& sentence,
                                        std::size_t start, std::size_t end,
                                        Direction direction,
                                        const Stopwords& stopwords);

ContextFeatures context_features(const ContextInstance& instance,
                                 const CollocationSet& cset,
                                 const SemanticNetwork& net,
                                 const RelatednessParams& params,
                                 const Stopwords& stopwords);

// IF fc=0 AND srb<0.75 THEN literal / IF fc=0 AND sra<0.75 THEN literal /
// DEFAULT figurative.
RuleSet default_context_rules();

// Everything needed to classify occurrences: network, relatedness params,
// stopwords, rules and one collocation set per phrase (keyed by the
// space-joined phrase; missing phrases get an empty set, so fc stays 0).
struct ContextPipeline {
  const SemanticNetwork* net = nullptr;
  const Stopwords* stopwords = nullptr;
  RelatednessParams params;
  RuleSet rules;
  std::map<std::string, CollocationSet> csets;

  ContextFeatures features_for(const ContextInstance& instance) const;
  std::string classify(const ContextInstance& instance) const;
};

// Fraction of instances whose predicted label equals the gold label.
// Unlabeled instances count as misclassified. Throws EmptyDatasetError on an
// empty list.
double evaluate_accuracy(const std::vector<ContextInstance>& instances,
                         const ContextPipeline& pipeline);

// TSV `phrase<TAB>start<TAB>end<TAB>label<TAB>space-joined-sentence`; label
// may be empty or "?" for unlabeled rows. Verifies the span against the
// phrase.
std::vector<ContextInstance> load_context_dataset(std::istream& in);
std::vector<ContextInstance> load_context_dataset(const std::string& path);

// TSV `side<TAB>expression<TAB>count` with side in {before, after}; rows keep
// their ranked order.
void save_collocation_set(const CollocationSet& cset, std::ostream& out);
void save_collocation_set(const CollocationSet& cset, const std::string& path);
CollocationSet load_collocation_set(std::istream& in, const std::string& phrase);
CollocationSet load_collocation_set(const std::string& path,
                                    const std::string& phrase);

}  // namespace phrasal

// rules.hpp: ordered conjunctive threshold rules with first-match evaluation.
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace phrasal {

// Outcome labels used by the bundled rule sets.
inline constexpr const char* kPositive = "positive";
inline constexpr const char* kNegative = "negative";
inline constexpr const char* kLiteral = "literal";
inline constexpr const char* kFigurative = "figurative";

// Feature names in the word-phrase and context schemas.
inline constexpr const char* kFeatureSn = "sn";
inline constexpr const char* kFeatureDs = "ds";
inline constexpr const char* kFeatureFc = "fc";
inline constexpr const char* kFeatureSrb = "srb";
inline constexpr const char* kFeatureSra = "sra";

enum class Comparator { Greater, Less, GreaterEq, LessEq, Equal };

const char* comparator_symbol(Comparator cmp);

struct Condition {
  std::string feature;
  Comparator cmp;
  double threshold;
};

struct Rule {
  std::vector<Condition> conditions;  // conjunction, non-empty
  std::string outcome;
};

// Ordered rules, first match wins; the default fires when none matches.
struct RuleSet {
  std::vector<Rule> rules;
  std::string default_outcome;
};

// Feature values by name. A feature absent from the map fails every
// condition that mentions it.
using FeatureMap = std::map<std::string, double>;

bool condition_holds(const Condition& condition, const FeatureMap& features);
bool rule_matches(const Rule& rule, const FeatureMap& features);
const std::string& apply_rules(const RuleSet& rules, const FeatureMap& features);

// Text form, one rule per line:
//   IF sn>0.61 THEN positive
//   IF sn>0.53 AND ds>0.31 THEN positive
//   DEFAULT negative
std::string serialize_rules(const RuleSet& rules);
RuleSet parse_rules(std::istream& in);
RuleSet parse_rules_text(const std::string& text);
RuleSet load_rules(const std::string& path);
void save_rules(const RuleSet& rules, const std::string& path);

// The bundled word-phrase rule configurations. Thresholds are fractions;
// comparators are strict.
RuleSet run1_rules();  // SN > 0.61
RuleSet run2_rules();  // SN > 0.61, with DS > 0.40 when SN is absent
RuleSet run3_rules();  // SN > 0.61 | DS > 0.40 | (SN > 0.53 & DS > 0.31)

}  // namespace phrasal

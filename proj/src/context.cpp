#include "phrasal/context.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "phrasal/errors.hpp"

namespace phrasal {

namespace {

std::string join_tokens(const std::vector<std::string>& tokens,
                        std::size_t first, std::size_t last) {
  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (i > first) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

bool all_alphabetic(const std::string& token) {
  if (token.empty()) return false;
  for (unsigned char c : token)
    if (!std::isalpha(c)) return false;
  return true;
}

std::uint64_t parse_count(const std::string& text, std::size_t line) {
  if (text.empty()) throw ParseError("empty number field", line);
  std::uint64_t value = 0;
  for (unsigned char c : text) {
    if (!std::isdigit(c)) throw ParseError("bad number '" + text + "'", line);
    value = value * 10 + (c - '0');
  }
  return value;
}

std::vector<RankedExpression> rank_expressions(
    const std::map<std::string, std::uint64_t>& counts, std::size_t k) {
  std::vector<RankedExpression> ranked;
  ranked.reserve(counts.size());
  for (const auto& [expr, n] : counts) ranked.push_back({expr, n});
  std::sort(ranked.begin(), ranked.end(),
            [](const RankedExpression& a, const RankedExpression& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.expression < b.expression;
            });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

}  // namespace

bool CollocationSet::before_contains(const std::string& expression) const {
  for (const auto& e : before)
    if (e.expression == expression) return true;
  return false;
}

bool CollocationSet::after_contains(const std::string& expression) const {
  for (const auto& e : after)
    if (e.expression == expression) return true;
  return false;
}

FeatureMap ContextFeatures::to_map() const {
  return {{kFeatureFc, static_cast<double>(fc)},
          {kFeatureSrb, srb},
          {kFeatureSra, sra}};
}

CollocationSet build_collocation_set(const Corpus& corpus,
                                     const std::vector<std::string>& phrase,
                                     std::size_t k) {
  if (phrase.empty()) throw EmptyPhraseError();
  if (k < 1) throw EmptyInputError("collocation set size must be at least 1");

  std::map<std::string, std::uint64_t> before_counts;
  std::map<std::string, std::uint64_t> after_counts;
  const std::size_t len = phrase.size();
  for (const auto& sentence : corpus) {
    if (sentence.size() < len) continue;
    for (std::size_t s = 0; s + len <= sentence.size(); ++s) {
      if (!std::equal(phrase.begin(), phrase.end(), sentence.begin() + s))
        continue;
      for (std::size_t l = 1; l <= 3; ++l) {
        if (s >= l)
          ++before_counts[join_tokens(sentence, s - l, s)];
        if (s + len + l <= sentence.size())
          ++after_counts[join_tokens(sentence, s + len, s + len + l)];
      }
    }
  }

  CollocationSet cset;
  cset.phrase = join_tokens(phrase, 0, phrase.size());
  cset.before = rank_expressions(before_counts, k);
  cset.after = rank_expressions(after_counts, k);
  return cset;
}

int fc_feature(const ContextInstance& instance, const CollocationSet& cset) {
  const auto& sent = instance.sentence;
  for (std::size_t l = 1; l <= 3; ++l) {
    if (instance.start >= l &&
        cset.before_contains(join_tokens(sent, instance.start - l, instance.start)))
      return 1;
    if (instance.end + l <= sent.size() &&
        cset.after_contains(join_tokens(sent, instance.end, instance.end + l)))
      return 1;
  }
  return 0;
}

std::optional<std::string> content_word(const std::vector<std::string>& sentence,
                                        std::size_t start, std::size_t end,
                                        Direction direction,
                                        const Stopwords& stopwords) {
  if (direction == Direction::Before) {
    for (std::size_t i = start; i-- > 0;) {
      if (all_alphabetic(sentence[i]) && !stopwords.contains(sentence[i]))
        return sentence[i];
    }
  } else {
    for (std::size_t i = end; i < sentence.size(); ++i) {
      if (all_alphabetic(sentence[i]) && !stopwords.contains(sentence[i]))
        return sentence[i];
    }
  }
  return std::nullopt;
}

ContextFeatures context_features(const ContextInstance& instance,
                                 const CollocationSet& cset,
                                 const SemanticNetwork& net,
                                 const RelatednessParams& params,
                                 const Stopwords& stopwords) {
  ContextFeatures feats;
  feats.fc = fc_feature(instance, cset);

  auto side_relatedness = [&](Direction direction) {
    auto word = content_word(instance.sentence, instance.start, instance.end,
                             direction, stopwords);
    if (!word) return 1.0;
    try {
      return word_phrase_relatedness(net, *word, instance.phrase, params).value;
    } catch (const WordNotInNetworkError&) {
      return 1.0;
    }
  };
  feats.srb = side_relatedness(Direction::Before);
  feats.sra = side_relatedness(Direction::After);
  return feats;
}

RuleSet default_context_rules() {
  RuleSet rs;
  rs.rules.push_back(Rule{{Condition{kFeatureFc, Comparator::Equal, 0.0},
                           Condition{kFeatureSrb, Comparator::Less, 0.75}},
                          kLiteral});
  rs.rules.push_back(Rule{{Condition{kFeatureFc, Comparator::Equal, 0.0},
                           Condition{kFeatureSra, Comparator::Less, 0.75}},
                          kLiteral});
  rs.default_outcome = kFigurative;
  return rs;
}

ContextFeatures ContextPipeline::features_for(const ContextInstance& instance) const {
  static const CollocationSet kEmpty;
  const CollocationSet* cset = &kEmpty;
  auto it = csets.find(join_tokens(instance.phrase, 0, instance.phrase.size()));
  if (it != csets.end()) cset = &it->second;
  return context_features(instance, *cset, *net, params, *stopwords);
}

std::string ContextPipeline::classify(const ContextInstance& instance) const {
  return apply_rules(rules, features_for(instance).to_map());
}

double evaluate_accuracy(const std::vector<ContextInstance>& instances,
                         const ContextPipeline& pipeline) {
  if (instances.empty())
    throw EmptyDatasetError("no context instances to evaluate");
  std::size_t correct = 0;
  for (const auto& inst : instances)
    if (pipeline.classify(inst) == inst.label) ++correct;
  return static_cast<double>(correct) / static_cast<double>(instances.size());
}

std::vector<ContextInstance> load_context_dataset(std::istream& in) {
  std::vector<ContextInstance> instances;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    auto fields = split_tabs(line);
    if (fields.size() != 5)
      throw ParseError("expected 5 tab-separated fields", lineno);

    ContextInstance inst;
    inst.phrase = split_ws(normalize_label(fields[0]));
    if (inst.phrase.empty()) throw ParseError("empty phrase", lineno);
    inst.start = static_cast<std::size_t>(parse_count(fields[1], lineno));
    inst.end = static_cast<std::size_t>(parse_count(fields[2], lineno));

    std::string label = normalize_label(fields[3]);
    if (label == "?") label.clear();
    if (!label.empty() && label != kLiteral && label != kFigurative)
      throw ParseError("bad label '" + fields[3] + "'", lineno);
    inst.label = label;

    inst.sentence = split_ws(normalize_label(fields[4]));
    if (inst.start >= inst.end || inst.end > inst.sentence.size())
      throw ParseError("span out of range", lineno);
    if (inst.end - inst.start != inst.phrase.size() ||
        !std::equal(inst.phrase.begin(), inst.phrase.end(),
                    inst.sentence.begin() + static_cast<std::ptrdiff_t>(inst.start)))
      throw ParseError("span does not match phrase", lineno);

    instances.push_back(std::move(inst));
  }
  return instances;
}

std::vector<ContextInstance> load_context_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path);
  return load_context_dataset(in);
}

void save_collocation_set(const CollocationSet& cset, std::ostream& out) {
  for (const auto& e : cset.before)
    out << "before\t" << e.expression << '\t' << e.count << '\n';
  for (const auto& e : cset.after)
    out << "after\t" << e.expression << '\t' << e.count << '\n';
}

void save_collocation_set(const CollocationSet& cset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path);
  save_collocation_set(cset, out);
}

CollocationSet load_collocation_set(std::istream& in, const std::string& phrase) {
  CollocationSet cset;
  cset.phrase = normalize_label(phrase);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    auto fields = split_tabs(line);
    if (fields.size() != 3)
      throw ParseError("expected 3 tab-separated fields", lineno);
    std::string side = normalize_label(fields[0]);
    std::string expr = normalize_label(fields[1]);
    std::size_t tokens = split_ws(expr).size();
    if (tokens < 1 || tokens > 3)
      throw ParseError("expression must be 1-3 tokens", lineno);
    RankedExpression entry{expr, parse_count(fields[2], lineno)};
    if (side == "before")
      cset.before.push_back(std::move(entry));
    else if (side == "after")
      cset.after.push_back(std::move(entry));
    else
      throw ParseError("bad side '" + fields[0] + "'", lineno);
  }
  return cset;
}

CollocationSet load_collocation_set(const std::string& path,
                                    const std::string& phrase) {
  std::ifstream in(path);
  if (!in) throw IoError(path);
  return load_collocation_set(in, phrase);
}

}  // namespace phrasal

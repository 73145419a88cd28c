#include "phrasal/features.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "phrasal/errors.hpp"
#include "phrasal/pmi_vector.hpp"

namespace phrasal {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    auto tab = line.find('\t', pos);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

std::vector<std::string> split_spaces(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(lower(tok));
  return tokens;
}

}  // namespace

FeatureMap FeatureVector::to_map() const {
  FeatureMap m;
  if (sn) m[kFeatureSn] = *sn;
  m[kFeatureDs] = ds;
  return m;
}

FeatureVector assemble_features(const SemanticNetwork& net,
                                const CollocationCounts& counts,
                                const std::string& word,
                                const std::vector<std::string>& phrase,
                                const RelatednessParams& params,
                                std::size_t k) {
  if (phrase.empty()) throw EmptyPhraseError();
  FeatureVector fv;
  try {
    fv.sn = word_phrase_relatedness(net, word, phrase, params).value;
  } catch (const WordNotInNetworkError&) {
    // Network miss: SN stays absent and the distributional feature carries.
  }
  fv.ds = word_phrase_similarity(counts, word, phrase, k);
  return fv;
}

std::string run2_classify(const FeatureVector& fv) {
  if (fv.sn) return *fv.sn > 0.61 ? kPositive : kNegative;
  return fv.ds > 0.40 ? kPositive : kNegative;
}

std::vector<WordPhraseInstance> load_word_phrase_dataset(std::istream& in) {
  std::vector<WordPhraseInstance> instances;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 2 && fields.size() != 3) {
      throw ParseError("expected `word<TAB>phrase[<TAB>label]`", line_no);
    }
    WordPhraseInstance inst;
    inst.word = lower(fields[0]);
    inst.phrase = split_spaces(fields[1]);
    if (inst.word.empty()) throw ParseError("empty word", line_no);
    if (inst.phrase.empty()) throw ParseError("empty phrase", line_no);
    if (fields.size() == 3 && !fields[2].empty() && fields[2] != "?") {
      inst.label = lower(fields[2]);
      if (inst.label != kPositive && inst.label != kNegative) {
        throw ParseError("label must be positive or negative, got '" +
                             fields[2] + "'",
                         line_no);
      }
    }
    instances.push_back(std::move(inst));
  }
  return instances;
}

std::vector<WordPhraseInstance> load_word_phrase_dataset(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path);
  return load_word_phrase_dataset(in);
}

FeatureDataset load_feature_dataset(std::istream& in) {
  FeatureDataset dataset;
  std::string line;
  long line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (!have_header) {
      if (fields.size() < 2 || lower(fields.back()) != "label") {
        throw ParseError("header must name feature columns then `label`",
                         line_no);
      }
      for (std::size_t i = 0; i + 1 < fields.size(); ++i) {
        if (fields[i].empty()) throw ParseError("empty feature name", line_no);
        dataset.feature_names.push_back(lower(fields[i]));
      }
      have_header = true;
      continue;
    }
    if (fields.size() != dataset.feature_names.size() + 1) {
      throw ParseError("row width does not match the header", line_no);
    }
    TrainingInstance inst;
    for (std::size_t i = 0; i < dataset.feature_names.size(); ++i) {
      if (fields[i].empty()) continue;  // absent feature
      try {
        std::size_t used = 0;
        double value = std::stod(fields[i], &used);
        if (used != fields[i].size()) throw std::invalid_argument(fields[i]);
        inst.features[dataset.feature_names[i]] = value;
      } catch (const std::exception&) {
        throw ParseError("bad numeric value '" + fields[i] + "'", line_no);
      }
    }
    inst.label = lower(fields.back());
    if (inst.label.empty()) throw ParseError("empty label", line_no);
    dataset.instances.push_back(std::move(inst));
  }
  if (!have_header) throw ParseError("missing header row", line_no + 1);
  return dataset;
}

FeatureDataset load_feature_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path);
  return load_feature_dataset(in);
}

}  // namespace phrasal

#include "phrasal/collocation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "phrasal/errors.hpp"

namespace phrasal {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

Corpus load_corpus(std::istream& in) {
  Corpus corpus;
  std::vector<std::string> sentence;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string tok;
    bool any = false;
    while (tokens >> tok) {
      sentence.push_back(lower(tok));
      any = true;
    }
    if (!any && !sentence.empty()) {
      corpus.push_back(std::move(sentence));
      sentence.clear();
    }
  }
  if (!sentence.empty()) corpus.push_back(std::move(sentence));
  return corpus;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path);
  return load_corpus(in);
}

std::size_t corpus_token_count(const Corpus& corpus) {
  std::size_t n = 0;
  for (const auto& sentence : corpus) n += sentence.size();
  return n;
}

void CollocationCounts::add_pair(const std::string& target,
                                 const std::string& context, std::uint64_t n) {
  pair_counts[target][context] += n;
  target_totals[target] += n;
  context_totals[context] += n;
  grand_total += n;
}

void CollocationCounts::merge(const CollocationCounts& other) {
  for (const auto& [target, contexts] : other.pair_counts) {
    for (const auto& [context, n] : contexts) add_pair(target, context, n);
  }
}

std::uint64_t CollocationCounts::pair(const std::string& target,
                                      const std::string& context) const {
  auto t = pair_counts.find(target);
  if (t == pair_counts.end()) return 0;
  auto c = t->second.find(context);
  return c == t->second.end() ? 0 : c->second;
}

CollocationCounts count_collocations(const Corpus& corpus, int window) {
  if (window < 1) throw EmptyInputError("window must be >= 1");
  CollocationCounts counts;
  for (const auto& sentence : corpus) {
    const auto n = static_cast<long>(sentence.size());
    for (long i = 0; i < n; ++i) {
      for (long d = 1; d <= window; ++d) {
        if (i - d >= 0) counts.add_pair(sentence[i], sentence[i - d]);
        if (i + d < n) counts.add_pair(sentence[i], sentence[i + d]);
      }
    }
  }
  return counts;
}

std::vector<std::pair<std::string, std::uint64_t>> top_k_collocates(
    const CollocationCounts& counts, const std::string& word, std::size_t k) {
  if (k < 1) throw EmptyInputError("k must be >= 1");
  std::vector<std::pair<std::string, std::uint64_t>> contexts;
  auto it = counts.pair_counts.find(word);
  if (it == counts.pair_counts.end()) return contexts;
  contexts.assign(it->second.begin(), it->second.end());
  std::sort(contexts.begin(), contexts.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (contexts.size() > k) contexts.resize(k);
  return contexts;
}

CollocationCounts load_counts(std::istream& in) {
  CollocationCounts counts;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab1 = line.find('\t');
    auto tab2 = tab1 == std::string::npos ? tab1 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw ParseError("expected `target<TAB>context<TAB>count`", line_no);
    }
    std::string target = lower(line.substr(0, tab1));
    std::string context = lower(line.substr(tab1 + 1, tab2 - tab1 - 1));
    std::uint64_t n = 0;
    try {
      n = std::stoull(line.substr(tab2 + 1));
    } catch (const std::exception&) {
      throw ParseError("count is not a non-negative integer", line_no);
    }
    if (target.empty() || context.empty()) {
      throw ParseError("empty target or context", line_no);
    }
    if (n > 0) counts.add_pair(target, context, n);
  }
  return counts;
}

CollocationCounts load_counts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path);
  return load_counts(in);
}

void save_counts(const CollocationCounts& counts, std::ostream& out) {
  std::map<std::string, std::map<std::string, std::uint64_t>> sorted;
  for (const auto& [target, contexts] : counts.pair_counts) {
    sorted[target].insert(contexts.begin(), contexts.end());
  }
  for (const auto& [target, contexts] : sorted) {
    for (const auto& [context, n] : contexts) {
      out << target << '\t' << context << '\t' << n << '\n';
    }
  }
}

void save_counts(const CollocationCounts& counts, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path);
  save_counts(counts, out);
}

}  // namespace phrasal

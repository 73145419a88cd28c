// collocation.hpp: windowed collocation counting over tokenized corpora.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace phrasal {

// Sentences of whitespace tokens. Blank lines in a corpus file delimit
// sentences; windows never cross them.
using Corpus = std::vector<std::vector<std::string>>;

Corpus load_corpus(std::istream& in);    // tokens lowercased
Corpus load_corpus(const std::string& path);
std::size_t corpus_token_count(const Corpus& corpus);

// Symmetric-window co-occurrence counts with their marginals.
struct CollocationCounts {
  std::unordered_map<std::string,
                     std::unordered_map<std::string, std::uint64_t>>
      pair_counts;  // target -> context -> count
  std::unordered_map<std::string, std::uint64_t> target_totals;
  std::unordered_map<std::string, std::uint64_t> context_totals;
  std::uint64_t grand_total = 0;

  void add_pair(const std::string& target, const std::string& context,
                std::uint64_t n = 1);

  // Associative merge; shards counted separately at sentence boundaries sum
  // to the whole-corpus counts.
  void merge(const CollocationCounts& other);

  std::uint64_t pair(const std::string& target,
                     const std::string& context) const;
};

// For each position i and offset d in [1, window], counts (t_i, t_{i-d}) and
// (t_i, t_{i+d}) within the sentence.
CollocationCounts count_collocations(const Corpus& corpus, int window = 3);

// The k highest-count contexts of `word`, count-descending with lexicographic
// tie-break; empty for an unknown word.
std::vector<std::pair<std::string, std::uint64_t>> top_k_collocates(
    const CollocationCounts& counts, const std::string& word,
    std::size_t k = 1000);

// Count file: `target<TAB>context<TAB>count` lines, '#' comments. Marginals
// are rebuilt by summation on load; save emits rows sorted by target then
// context.
CollocationCounts load_counts(std::istream& in);
CollocationCounts load_counts(const std::string& path);
void save_counts(const CollocationCounts& counts, std::ostream& out);
void save_counts(const CollocationCounts& counts, const std::string& path);

}  // namespace phrasal

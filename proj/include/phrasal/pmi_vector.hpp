// pmi_vector.hpp: sparse PMI vectors, additive composition, cosine.
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "phrasal/collocation.hpp"

namespace phrasal {

// Sparse map from context word to pointwise mutual information. Entries are
// sorted by context and never hold an exact zero.
struct PmiVector {
  std::string owner;  // the word or phrase the vector represents
  std::map<std::string, double> entries;

  bool empty() const { return entries.empty(); }
  double norm() const;
};

// Base-2 PMI over the top-k collocates of `word` by raw frequency:
// log2(pair(word,c) * grand / (target_total(word) * context_total(c))).
// Negative values are kept; exact zeros are dropped. Unknown words give an
// empty vector.
PmiVector pmi_vector(const CollocationCounts& counts, const std::string& word,
                     std::size_t k = 1000);

// Key-wise sum; the owner is the space-joined phrase. Entries cancelling to
// zero are dropped. Throws EmptyInputError on an empty sequence.
PmiVector compose(const std::vector<PmiVector>& vectors);

// In [-1, 1]; 0 when either norm is zero.
double cosine(const PmiVector& a, const PmiVector& b);

// cosine(vector(word), compose(vectors of the phrase words)); 0 when any
// participating vector is empty. Throws EmptyPhraseError.
double word_phrase_similarity(const CollocationCounts& counts,
                              const std::string& word,
                              const std::vector<std::string>& phrase,
                              std::size_t k = 1000);

// `owner<TAB>context<TAB>pmi` lines, sorted by context.
void dump_vector(const PmiVector& v, std::ostream& out);

}  // namespace phrasal

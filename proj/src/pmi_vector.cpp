#include "phrasal/pmi_vector.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "phrasal/errors.hpp"

namespace phrasal {

double PmiVector::norm() const {
  double sum = 0.0;
  for (const auto& [context, value] : entries) sum += value * value;
  return std::sqrt(sum);
}

PmiVector pmi_vector(const CollocationCounts& counts, const std::string& word,
                     std::size_t k) {
  PmiVector v;
  v.owner = word;
  if (counts.grand_total == 0) return v;
  const auto target_it = counts.target_totals.find(word);
  if (target_it == counts.target_totals.end()) return v;
  const std::uint64_t target_total = target_it->second;

  for (const auto& [context, n] : top_k_collocates(counts, word, k)) {
    const std::uint64_t context_total = counts.context_totals.at(context);
    // pair > 0 inside the top-k, so the ratio is finite and positive.
    const auto numer =
        static_cast<unsigned __int128>(n) * counts.grand_total;
    const auto denom =
        static_cast<unsigned __int128>(target_total) * context_total;
    if (numer == denom) continue;  // independence, PMI exactly 0
    v.entries[context] = std::log2(static_cast<double>(numer) /
                                   static_cast<double>(denom));
  }
  return v;
}

PmiVector compose(const std::vector<PmiVector>& vectors) {
  if (vectors.empty()) throw EmptyInputError("compose needs at least one vector");
  PmiVector out;
  std::map<std::string, double> sums;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (i > 0) out.owner += ' ';
    out.owner += vectors[i].owner;
    for (const auto& [context, value] : vectors[i].entries) {
      sums[context] += value;
    }
  }
  for (const auto& [context, value] : sums) {
    if (value != 0.0) out.entries.emplace(context, value);
  }
  return out;
}

double cosine(const PmiVector& a, const PmiVector& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  double dot = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      dot += ia->second * ib->second;
      ++ia;
      ++ib;
    }
  }
  return dot / (na * nb);
}

double word_phrase_similarity(const CollocationCounts& counts,
                              const std::string& word,
                              const std::vector<std::string>& phrase,
                              std::size_t k) {
  if (phrase.empty()) throw EmptyPhraseError();
  PmiVector word_vec = pmi_vector(counts, word, k);
  if (word_vec.empty()) return 0.0;
  std::vector<PmiVector> parts;
  parts.reserve(phrase.size());
  for (const std::string& phrase_word : phrase) {
    parts.push_back(pmi_vector(counts, phrase_word, k));
    if (parts.back().empty()) return 0.0;
  }
  return cosine(word_vec, compose(parts));
}

void dump_vector(const PmiVector& v, std::ostream& out) {
  char buf[64];
  for (const auto& [context, value] : v.entries) {
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    out << v.owner << '\t' << context << '\t' << buf << '\n';
  }
}

}  // namespace phrasal

#include "phrasal/stopwords.hpp"

#include <fstream>

#include "phrasal/errors.hpp"
#include "phrasal/network.hpp"

namespace phrasal {

namespace {

// Function words: determiners, pronouns, prepositions, conjunctions,
// auxiliaries and a handful of high-frequency adverbs. 175 entries.
const char* const kBundled[] = {
    "a",        "about",      "above",   "across",     "after",
    "again",    "against",    "all",     "along",      "already",
    "also",     "although",   "always",  "am",         "among",
    "an",       "and",        "another", "any",        "are",
    "around",   "as",         "at",      "be",         "because",
    "been",     "before",     "behind",  "being",      "below",
    "between",  "beyond",     "both",    "but",        "by",
    "can",      "cannot",     "could",   "did",        "do",
    "does",     "doing",      "done",    "down",       "during",
    "each",     "either",     "else",    "enough",     "even",
    "ever",     "every",      "few",     "for",        "from",
    "further",  "had",        "has",     "have",       "having",
    "he",       "her",        "here",    "hers",       "herself",
    "him",      "himself",    "his",     "how",        "however",
    "i",        "if",         "in",      "into",       "is",
    "it",       "its",        "itself",  "just",       "less",
    "many",     "may",        "me",      "might",      "more",
    "most",     "much",       "must",    "my",         "myself",
    "neither",  "never",      "no",      "none",       "nor",
    "not",      "nothing",    "now",     "of",         "off",
    "often",    "on",         "once",    "only",       "onto",
    "or",       "other",      "our",     "ours",       "ourselves",
    "out",      "over",       "own",     "per",        "quite",
    "rather",   "same",       "she",     "should",     "since",
    "so",       "some",       "someone", "something",  "still",
    "such",     "than",       "that",    "the",        "their",
    "theirs",   "them",       "themselves", "then",    "there",
    "these",    "they",       "this",    "those",      "through",
    "thus",     "to",         "too",     "toward",     "under",
    "until",    "up",         "upon",    "us",         "very",
    "was",      "we",         "well",    "were",       "what",
    "when",     "where",      "whether", "which",      "while",
    "who",      "whom",       "whose",   "why",        "will",
    "with",     "within",     "without", "would",      "yet",
    "you",      "your",       "yours",   "yourself",   "yourselves",
};

}  // namespace

Stopwords::Stopwords() {
  for (const char* w : kBundled) words_.insert(w);
}

Stopwords Stopwords::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path);
  Stopwords sw;
  sw.words_.clear();
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    sw.words_.insert(normalize_label(line));
  }
  return sw;
}

}  // namespace phrasal

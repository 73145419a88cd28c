// stopwords.hpp: the function-word list used to find content words.
#pragma once

#include <string>
#include <unordered_set>

namespace phrasal {

class Stopwords {
 public:
  // Bundled function-word list (~175 entries).
  Stopwords();

  // One word per line, '#' comments; replaces the bundled list.
  static Stopwords from_file(const std::string& path);

  bool contains(const std::string& word) const { return words_.count(word) > 0; }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

}  // namespace phrasal

// relations.hpp: the seven relation categories and the relation-name table.
#pragma once

#include <string>
#include <vector>

namespace phrasal {

enum class Category {
  Similar,    // weight 1
  Hypernym,   // weight 2
  Sense,      // weight 4
  Predicate,  // weight 6
  Part,       // weight 8
  Instance,   // weight 10
  Other,      // weight 12
};

int category_weight(Category c);
const char* category_name(Category c);

// Parses a category name ("similar", "hypernym", ...); case-insensitive.
Category parse_category(const std::string& name);

// The sense relation connecting a word to one of its synsets.
inline constexpr const char* kSenseRelation = "lemma-synset";

// Maps relation names to weighted categories. Starts from the built-in
// vocabulary (every WordNet relation plus the predicate relations, lowercase
// with spaces as underscores); extra names can be added from an override
// file. Predicate relations may carry an argument suffix ("predicate:propel_by");
// resolution uses the prefix before ':'.
class RelationTable {
 public:
  RelationTable();

  // Throws UnknownRelationError for names outside the table.
  Category category(const std::string& relation_name) const;
  int weight(const std::string& relation_name) const;

  bool known(const std::string& relation_name) const;

  // Registers an extra relation name for a category.
  void add(const std::string& relation_name, Category c);

  // Loads override lines `relation_name<TAB>category_name`. '#' comments and
  // blank lines are skipped.
  void load_overrides(const std::string& path);

  // Overrides the weight of one category; must stay a positive integer.
  void set_weight(Category c, int w);

  // All registered relation names, sorted.
  std::vector<std::string> names() const;

  // The distinct weights currently in use.
  std::vector<int> weights() const;

  int max_weight() const;
  int sense_weight() const { return weight_of_[static_cast<int>(Category::Sense)]; }

 private:
  // Strips a ':'-suffix and lowercases before lookup.
  std::string base_name(const std::string& relation_name) const;

  std::vector<std::pair<std::string, Category>> entries_;
  int weight_of_[7];
};

// Category lookup against the built-in table only.
Category relation_category(const std::string& relation_name);

}  // namespace phrasal

#include "phrasal/relations.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "phrasal/errors.hpp"

namespace phrasal {

namespace {

constexpr std::array<int, 7> kDefaultWeights = {1, 2, 4, 6, 8, 10, 12};

constexpr std::array<const char*, 7> kCategoryNames = {
    "similar", "hypernym", "sense", "predicate", "part", "instance", "other"};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

int category_weight(Category c) { return kDefaultWeights[static_cast<int>(c)]; }

const char* category_name(Category c) {
  return kCategoryNames[static_cast<int>(c)];
}

Category parse_category(const std::string& name) {
  std::string n = lower(name);
  for (int i = 0; i < 7; ++i) {
    if (n == kCategoryNames[i]) return static_cast<Category>(i);
  }
  throw UnknownRelationError(name);
}

RelationTable::RelationTable() {
  for (int i = 0; i < 7; ++i) weight_of_[i] = kDefaultWeights[i];

  auto add_all = [this](Category c, std::initializer_list<const char*> names) {
    for (const char* n : names) entries_.emplace_back(n, c);
  };
  add_all(Category::Similar, {"similar_to", "pertainym", "participle_of_verb",
                              "entailment", "cause", "antonym", "verb_group"});
  add_all(Category::Hypernym,
          {"hypernym", "instance_hypernym", "derivationally_related"});
  add_all(Category::Sense, {kSenseRelation});
  add_all(Category::Predicate, {"predicate"});
  add_all(Category::Part,
          {"holonym_instance", "holonym_member", "holonym_substance",
           "meronym_instance", "meronym_member", "meronym_substance",
           "inverse_predicate"});
  add_all(Category::Instance, {"hyponym", "instance_hyponym"});
  add_all(Category::Other,
          {"attribute", "also_see", "domain_of_synset_topic",
           "domain_of_synset_region", "domain_of_synset_usage",
           "member_of_this_domain_topic", "member_of_this_domain_region",
           "member_of_this_domain_usage"});
}

std::string RelationTable::base_name(const std::string& relation_name) const {
  std::string n = lower(relation_name);
  auto colon = n.find(':');
  if (colon != std::string::npos) n.resize(colon);
  return n;
}

Category RelationTable::category(const std::string& relation_name) const {
  std::string n = base_name(relation_name);
  for (const auto& [name, cat] : entries_) {
    if (name == n) return cat;
  }
  throw UnknownRelationError(relation_name);
}

int RelationTable::weight(const std::string& relation_name) const {
  return weight_of_[static_cast<int>(category(relation_name))];
}

bool RelationTable::known(const std::string& relation_name) const {
  std::string n = base_name(relation_name);
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto& e) { return e.first == n; });
}

void RelationTable::add(const std::string& relation_name, Category c) {
  std::string n = base_name(relation_name);
  if (n.empty()) throw InvalidLabelError();
  for (auto& [name, cat] : entries_) {
    if (name == n) {
      cat = c;
      return;
    }
  }
  entries_.emplace_back(n, c);
}

void RelationTable::load_overrides(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path);
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw ParseError("expected `relation<TAB>category`", line_no);
    }
    add(line.substr(0, tab), parse_category(line.substr(tab + 1)));
  }
}

void RelationTable::set_weight(Category c, int w) {
  if (w <= 0) {
    throw EmptyInputError("category weight must be a positive integer");
  }
  weight_of_[static_cast<int>(c)] = w;
}

std::vector<std::string> RelationTable::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> RelationTable::weights() const {
  std::set<int> ws(std::begin(weight_of_), std::end(weight_of_));
  return {ws.begin(), ws.end()};
}

int RelationTable::max_weight() const {
  return *std::max_element(std::begin(weight_of_), std::end(weight_of_));
}

Category relation_category(const std::string& relation_name) {
  static const RelationTable table;
  return table.category(relation_name);
}

}  // namespace phrasal

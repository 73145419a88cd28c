#include "phrasal/network.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "phrasal/errors.hpp"

namespace phrasal {

namespace {

// Endpoint shape required by a relation.
enum class Shape { WordToSynset, SynsetToWord, SynsetToSynset, SenseLink, Any };

Shape required_shape(const std::string& base, Category category) {
  if (category == Category::Sense) return Shape::SenseLink;
  if (base == "predicate") return Shape::SynsetToWord;
  if (base == "inverse_predicate") return Shape::WordToSynset;
  // Lemma-level relation, accepted between any node kinds as given.
  if (base == "derivationally_related") return Shape::Any;
  if (category == Category::Predicate) return Shape::SynsetToWord;
  // Built-in names below the categories are WordNet synset relations; names
  // added through an override file carry no kind constraint.
  static const RelationTable builtin;
  if (!builtin.known(base)) return Shape::Any;
  return Shape::SynsetToSynset;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

std::string base_of(const std::string& relation) {
  auto colon = relation.find(':');
  return colon == std::string::npos ? relation : relation.substr(0, colon);
}

}  // namespace

std::string normalize_label(std::string label) { return lower(std::move(label)); }

NodeId SemanticNetwork::add_node(NodeKind kind, const std::string& label) {
  if (label.empty()) throw InvalidLabelError();
  auto& index = kind == NodeKind::Word ? word_index_ : synset_index_;
  auto it = index.find(label);
  if (it != index.end()) return it->second;
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(Node{kind, label});
  out_.emplace_back();
  index.emplace(label, id);
  return id;
}

void SemanticNetwork::add_edge(NodeId src, NodeId dst,
                               const std::string& relation_name) {
  if (src >= nodes_.size() || dst >= nodes_.size()) {
    throw InvalidNodeError("edge endpoint out of range");
  }
  std::string relation = lower(relation_name);
  Category category = table_.category(relation);  // UnknownRelationError
  if (src == dst) throw SelfLoopError(nodes_[src].label);

  NodeKind sk = nodes_[src].kind;
  NodeKind dk = nodes_[dst].kind;
  switch (required_shape(base_of(relation), category)) {
    case Shape::SenseLink:
      if (sk == dk) {
        throw EndpointKindMismatchError(relation,
                                        "must connect a word and a synset");
      }
      break;
    case Shape::SynsetToWord:
      if (sk != NodeKind::Synset || dk != NodeKind::Word) {
        throw EndpointKindMismatchError(relation, "must connect synset to word");
      }
      break;
    case Shape::WordToSynset:
      if (sk != NodeKind::Word || dk != NodeKind::Synset) {
        throw EndpointKindMismatchError(relation, "must connect word to synset");
      }
      break;
    case Shape::SynsetToSynset:
      if (sk != NodeKind::Synset || dk != NodeKind::Synset) {
        throw EndpointKindMismatchError(relation, "must connect two synsets");
      }
      break;
    case Shape::Any:
      break;
  }

  int w = table_.weight(relation);
  out_[src].push_back(OutEdge{dst, w, relation});
  ++edge_count_;
  if (category == Category::Sense) {
    out_[dst].push_back(OutEdge{src, w, relation});
    ++edge_count_;
  }
}

const Node& SemanticNetwork::node(NodeId id) const {
  if (id >= nodes_.size()) {
    throw InvalidNodeError("node id " + std::to_string(id) + " out of range");
  }
  return nodes_[id];
}

const std::vector<OutEdge>& SemanticNetwork::neighbors(NodeId id) const {
  if (id >= nodes_.size()) {
    throw InvalidNodeError("node id " + std::to_string(id) + " out of range");
  }
  return out_[id];
}

std::optional<NodeId> SemanticNetwork::find_word(const std::string& label) const {
  auto it = word_index_.find(normalize_label(label));
  if (it == word_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<NodeId> SemanticNetwork::find_synset(
    const std::string& label) const {
  auto it = synset_index_.find(normalize_label(label));
  if (it == synset_index_.end()) return std::nullopt;
  return it->second;
}

void SemanticNetwork::validate() const {
  auto ws = table_.weights();
  std::set<int> allowed(ws.begin(), ws.end());
  for (NodeId src = 0; src < nodes_.size(); ++src) {
    for (const OutEdge& e : out_[src]) {
      if (e.dst == src) throw SelfLoopError(nodes_[src].label);
      if (!allowed.count(e.weight)) {
        throw EmptyInputError("edge weight " + std::to_string(e.weight) +
                              " outside the category table");
      }
      if (table_.category(e.relation) == Category::Sense) {
        const auto& back = out_[e.dst];
        bool mirrored =
            std::any_of(back.begin(), back.end(), [&](const OutEdge& b) {
              return b.dst == src && b.weight == e.weight &&
                     b.relation == e.relation;
            });
        if (!mirrored) {
          throw EmptyInputError("unpaired sense edge at '" +
                                nodes_[src].label + "'");
        }
      }
    }
  }
}

void SemanticNetwork::save(std::ostream& out) const {
  auto kind_tag = [](NodeKind k) { return k == NodeKind::Word ? 'W' : 'S'; };
  for (NodeId src = 0; src < nodes_.size(); ++src) {
    for (const OutEdge& e : out_[src]) {
      // Sense pairs collapse to their word->synset line; the loader restores
      // the mirror.
      if (table_.category(e.relation) == Category::Sense &&
          nodes_[src].kind == NodeKind::Synset) {
        continue;
      }
      out << kind_tag(nodes_[src].kind) << '\t' << nodes_[src].label << '\t'
          << e.relation << '\t' << kind_tag(nodes_[e.dst].kind) << '\t'
          << nodes_[e.dst].label << '\n';
    }
  }
}

void SemanticNetwork::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw IoError(path);
  save(out);
}

SemanticNetwork load_network(std::istream& in, RelationTable table) {
  SemanticNetwork net(std::move(table));
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::vector<std::string> fields;
    std::size_t pos = 0;
    while (true) {
      auto tab = line.find('\t', pos);
      if (tab == std::string::npos) {
        fields.push_back(line.substr(pos));
        break;
      }
      fields.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (fields.size() != 5) {
      throw ParseError("expected 5 tab-separated fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    auto parse_kind = [&](const std::string& f) {
      if (f == "W" || f == "w") return NodeKind::Word;
      if (f == "S" || f == "s") return NodeKind::Synset;
      throw ParseError("node kind must be W or S, got '" + f + "'", line_no);
    };
    NodeKind src_kind = parse_kind(fields[0]);
    NodeKind dst_kind = parse_kind(fields[3]);
    if (fields[1].empty() || fields[4].empty()) {
      throw ParseError("empty node label", line_no);
    }

    try {
      NodeId src = net.add_node(src_kind, normalize_label(fields[1]));
      NodeId dst = net.add_node(dst_kind, normalize_label(fields[4]));
      net.add_edge(src, dst, fields[2]);
    } catch (const UnknownRelationError& e) {
      throw UnknownRelationError(e.relation(), line_no);
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return net;
}

SemanticNetwork load_network(const std::string& path, RelationTable table) {
  std::ifstream in(path);
  if (!in) throw IoError(path);
  return load_network(in, std::move(table));
}

}  // namespace phrasal

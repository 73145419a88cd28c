// network.hpp: the weighted directed semantic network of words and synsets.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "phrasal/relations.hpp"

namespace phrasal {

using NodeId = std::uint32_t;

enum class NodeKind { Word, Synset };

struct Node {
  NodeKind kind;
  std::string label;
};

// One directed out-edge.
struct OutEdge {
  NodeId dst;
  int weight;
  std::string relation;
};

// Directed graph over word and synset nodes with category-weighted edges.
// Node ids are dense in [0, node_count). Construction is single-writer;
// after loading, every query is const and safe to run from any thread.
class SemanticNetwork {
 public:
  explicit SemanticNetwork(RelationTable table = RelationTable())
      : table_(std::move(table)) {}

  // Idempotent: re-adding an existing (kind, label) returns the existing id.
  NodeId add_node(NodeKind kind, const std::string& label);

  // Appends one directed edge weighted by the relation's category. Sense
  // edges get a mirror edge in the opposite direction so that word nodes
  // stay reachable as path endpoints.
  void add_edge(NodeId src, NodeId dst, const std::string& relation_name);

  const Node& node(NodeId id) const;
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  // Out-edges in insertion order.
  const std::vector<OutEdge>& neighbors(NodeId id) const;

  // Label lookups are case-normalized (ASCII lowercase).
  std::optional<NodeId> find_word(const std::string& label) const;
  std::optional<NodeId> find_synset(const std::string& label) const;

  const RelationTable& relations() const { return table_; }

  // Checks edge weights, the sense-edge mirror property, and self-loop
  // absence over the whole graph. Throws Error on the first violation.
  void validate() const;

  // Writes the network back out in the edge TSV format. Sense mirrors are
  // collapsed to their word->synset line; reloading reproduces the same
  // node count and edge multiset.
  void save(std::ostream& out) const;
  void save(const std::string& path) const;

 private:
  RelationTable table_;
  std::vector<Node> nodes_;
  std::vector<std::vector<OutEdge>> out_;
  std::unordered_map<std::string, NodeId> word_index_;
  std::unordered_map<std::string, NodeId> synset_index_;
  std::size_t edge_count_ = 0;
};

std::string normalize_label(std::string label);

// Reads an edge file: one `src_kind<TAB>src_label<TAB>relation<TAB>dst_kind
// <TAB>dst_label` line per edge, kind W or S, '#' lines as comments. Labels
// are lowercased. Malformed lines and unknown relations abort the load with
// the offending line number.
SemanticNetwork load_network(const std::string& path,
                             RelationTable table = RelationTable());
SemanticNetwork load_network(std::istream& in,
                             RelationTable table = RelationTable());

}  // namespace phrasal

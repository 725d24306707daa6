#pragma once

#include <string>
#include <vector>

namespace tglab {

/// Sorted, duplicate-free set of edge labels.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;
  bool contains(const std::string& label) const { return index_of(label) >= 0; }
  bool contains_all_of(const Alphabet& other) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> labels_;
};

struct Edge {
  int src = 0;
  int tgt = 0;
  int label = 0;  // index into the graph's alphabet

  bool operator==(const Edge&) const = default;
};

/// Finite directed multigraph with labeled edges. Parallel edges and loops
/// are allowed; the empty graph is a legal value. Nodes and edges carry
/// string ids for I/O and diagnostics, algorithms work on dense indices.
///
/// Graphs are mutable while being built and treated as immutable afterwards;
/// all operations on them are pure functions.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  int add_node(const std::string& id);
  int add_node();  // synthesizes a fresh id
  int add_edge(const std::string& id, int src, int tgt, const std::string& label);
  int add_edge(int src, int tgt, const std::string& label);

  const Alphabet& alphabet() const { return alphabet_; }
  int node_count() const { return static_cast<int>(node_ids_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return node_count() == 0 && edge_count() == 0; }

  const Edge& edge(int e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& edge_label(int e) const { return alphabet_.label(edges_.at(e).label); }

  const std::string& node_id(int v) const { return node_ids_.at(v); }
  const std::string& edge_id(int e) const { return edge_ids_.at(e); }
  int node_index(const std::string& id) const;
  int edge_index(const std::string& id) const;

  /// Loops count twice, matching the usual multigraph degree.
  int degree(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  Alphabet alphabet_;
  std::vector<std::string> node_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<Edge> edges_;
};

/// Total node and edge maps between two graphs. Validity (commutation with
/// src/tgt and label preservation) is a separate check, so invalid maps can
/// be represented and diagnosed.
struct Morphism {
  Graph dom;
  Graph cod;
  std::vector<int> node_map;
  std::vector<int> edge_map;

  bool operator==(const Morphism&) const = default;
};

struct MorphismCheck {
  bool valid = false;
  std::string detail;  // empty when valid
};

/// Checks the three morphism equations on every edge. Maps that are not
/// total or reference out-of-range items are structural errors and throw
/// std::invalid_argument instead of producing a verdict.
MorphismCheck check_morphism(const Morphism& m);
bool is_valid_morphism(const Morphism& m);

Morphism identity_morphism(const Graph& g);
/// g after f; requires f.cod == g.dom.
Morphism compose(const Morphism& g, const Morphism& f);

bool node_surjective(const Morphism& m);
bool edge_surjective(const Morphism& m);
bool surjective(const Morphism& m);
bool injective(const Morphism& m);

/// Keeps exactly the given nodes/edges of g (indices, in order); edge
/// endpoints must survive. Ids are preserved.
Graph subgraph(const Graph& g, const std::vector<int>& nodes, const std::vector<int>& edges);

}  // namespace tglab

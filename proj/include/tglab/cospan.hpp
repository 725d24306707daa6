#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tglab/annot.hpp"
#include "tglab/graph.hpp"

namespace tglab {

/// One step of building a graph through a sliding window of interface
/// nodes: grow the window, wire an edge inside it, or drop a node for good.
/// Removal reindexes the window by shifting positions down.
struct AtomicOp {
  enum class Kind { add_node, add_edge, remove_node };

  Kind kind = Kind::add_node;
  int src = 0;        // add_edge
  int tgt = 0;        // add_edge
  std::string label;  // add_edge
  int index = 0;      // remove_node

  friend auto operator<=>(const AtomicOp&, const AtomicOp&) = default;
};

AtomicOp add_node_op();
AtomicOp add_edge_op(int src, int tgt, std::string label);
AtomicOp remove_node_op(int index);

/// Build script with empty start and end interfaces.
using OpWord = std::vector<AtomicOp>;

/// The graph a well-formed word builds; node identity is creation order.
/// Throws std::invalid_argument on bad indices, labels outside the
/// alphabet, or a non-empty final interface.
Graph graph_of_word(const OpWord& w, const Alphabet& alphabet);

struct Decomposition {
  bool ok = false;  // false: no decomposition within the width bound exists
  OpWord word;
};

/// Exact search for a build script whose interface never exceeds width+1
/// nodes; succeeds if and only if such a script exists. Exhaustive over
/// node layouts (memoized on placed-node sets), so inputs are capped at 10
/// nodes.
Decomposition decompose(const Graph& g, int width);

struct AutomatonState {
  std::vector<int> interface_nodes;  // window position -> node of the spec graph
  Annotation counts;                 // running tally per spec item

  bool operator==(const AutomatonState&) const = default;
};

/// Finite acceptor for an annotated type graph's language restricted to
/// bounded-width build scripts. States pair a window assignment with a
/// saturating count of how many built items each spec item has absorbed;
/// a state is accepting when the window is empty and the counts fit some
/// bound pair. Immutable and safe to share across threads.
class CountingAutomaton {
 public:
  CountingAutomaton(MultiAnnotatedGraph spec, int width);

  const MultiAnnotatedGraph& spec() const { return spec_; }
  int width() const { return width_; }
  int max_interface() const { return width_ + 1; }

  AutomatonState initial() const;
  bool is_final(const AutomatonState& s) const;

  /// Nondeterministic successors. Operations that do not apply (no matching
  /// spec edge, window already full) yield no successors; out-of-range
  /// indices throw.
  std::vector<AutomatonState> step(const AutomatonState& s, const AtomicOp& op) const;

  /// Runs the word from the initial state; true iff a final state is
  /// reached. Throws on structurally ill-formed words.
  bool accepts(const OpWord& w) const;

 private:
  MultiAnnotatedGraph spec_;
  int width_;
};

struct BoundedInclusion {
  bool included = false;
  std::optional<Graph> counterexample;  // built from a shortest separating word
};

/// Decides inclusion of the two languages restricted to graphs that admit
/// a width-bounded build script, by word-language inclusion of the two
/// counting automata (on-the-fly subset construction on the right side).
/// With antichain_pruning, search nodes whose right-side state set contains
/// an already-visited one for the same left state are skipped; the verdict
/// is unchanged, only the explored space shrinks.
BoundedInclusion atg_inclusion_bounded(const MultiAnnotatedGraph& t1,
                                       const MultiAnnotatedGraph& t2, int width,
                                       bool antichain_pruning = false);

}  // namespace tglab

#include "tglab/cospan.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace tglab {

AtomicOp add_node_op() { return AtomicOp{AtomicOp::Kind::add_node, 0, 0, "", 0}; }

AtomicOp add_edge_op(int src, int tgt, std::string label) {
  return AtomicOp{AtomicOp::Kind::add_edge, src, tgt, std::move(label), 0};
}

AtomicOp remove_node_op(int index) {
  return AtomicOp{AtomicOp::Kind::remove_node, 0, 0, "", index};
}

Graph graph_of_word(const OpWord& w, const Alphabet& alphabet) {
  Graph g(alphabet);
  std::vector<int> window;  // position -> node
  for (size_t i = 0; i < w.size(); ++i) {
    const AtomicOp& op = w[i];
    const std::string at = " at op " + std::to_string(i);
    switch (op.kind) {
      case AtomicOp::Kind::add_node:
        window.push_back(g.add_node());
        break;
      case AtomicOp::Kind::add_edge: {
        int size = static_cast<int>(window.size());
        if (op.src < 0 || op.src >= size || op.tgt < 0 || op.tgt >= size)
          throw std::invalid_argument("word: edge endpoint outside the interface" + at);
        if (!alphabet.contains(op.label))
          throw std::invalid_argument("word: label '" + op.label + "' outside the alphabet" + at);
        g.add_edge(window[op.src], window[op.tgt], op.label);
        break;
      }
      case AtomicOp::Kind::remove_node:
        if (op.index < 0 || op.index >= static_cast<int>(window.size()))
          throw std::invalid_argument("word: removal index outside the interface" + at);
        window.erase(window.begin() + op.index);
        break;
    }
  }
  if (!window.empty()) throw std::invalid_argument("word: final interface is not empty");
  return g;
}

namespace {

// Nodes of the placed set that still have an edge into the unplaced rest.
int boundary_size(const Graph& g, unsigned placed) {
  unsigned boundary = 0;
  for (const Edge& e : g.edges()) {
    bool s_in = placed & (1u << e.src);
    bool t_in = placed & (1u << e.tgt);
    if (s_in && !t_in) boundary |= 1u << e.src;
    if (t_in && !s_in) boundary |= 1u << e.tgt;
  }
  return __builtin_popcount(boundary);
}

}  // namespace

Decomposition decompose(const Graph& g, int width) {
  if (width < 0) throw std::invalid_argument("decompose: negative width");
  const int n = g.node_count();
  if (n > 10) throw std::invalid_argument("decompose: graphs above 10 nodes are not supported");
  const int cap = width + 1;

  // Layout search: placing a node next is feasible while the previous
  // boundary plus the newcomer fits the window.
  std::vector<int> layout;
  if (n > 0) {
    std::vector<signed char> state(1u << n, 0);  // 0 unknown, 1 reachable-yes, -1 no
    std::function<bool(unsigned)> reach = [&](unsigned placed) -> bool {
      if (placed == 0) return true;
      if (state[placed]) return state[placed] > 0;
      state[placed] = -1;
      for (int v = 0; v < n; ++v) {
        if (!(placed & (1u << v))) continue;
        unsigned prev = placed & ~(1u << v);
        if (boundary_size(g, prev) + 1 > cap) continue;
        if (reach(prev)) {
          state[placed] = 1;
          return true;
        }
      }
      return false;
    };
    unsigned full = (1u << n) - 1;
    if (!reach(full)) return {false, {}};
    unsigned placed = full;
    while (placed) {
      for (int v = 0; v < n; ++v) {
        if (!(placed & (1u << v))) continue;
        unsigned prev = placed & ~(1u << v);
        if (boundary_size(g, prev) + 1 <= cap && reach(prev)) {
          layout.push_back(v);
          placed = prev;
          break;
        }
      }
    }
    std::reverse(layout.begin(), layout.end());
  }

  // Emit the script along the layout.
  OpWord word;
  std::vector<int> window;                        // position -> node
  std::vector<bool> placed_flag(n, false);
  std::vector<bool> edge_done(g.edge_count(), false);
  auto position_of = [&](int node) {
    return static_cast<int>(std::find(window.begin(), window.end(), node) - window.begin());
  };
  for (size_t step = 0; step < layout.size(); ++step) {
    int v = layout[step];
    word.push_back(add_node_op());
    window.push_back(v);
    placed_flag[v] = true;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (edge_done[e]) continue;
      const Edge& ed = g.edge(e);
      if (!placed_flag[ed.src] || !placed_flag[ed.tgt]) continue;
      word.push_back(add_edge_op(position_of(ed.src), position_of(ed.tgt), g.edge_label(e)));
      edge_done[e] = true;
    }
    // Drop every window node whose edges are all built.
    for (bool dropped = true; dropped;) {
      dropped = false;
      for (size_t pos = 0; pos < window.size(); ++pos) {
        int u = window[pos];
        bool pending = false;
        for (int e = 0; e < g.edge_count() && !pending; ++e)
          if (!edge_done[e] && (g.edge(e).src == u || g.edge(e).tgt == u)) pending = true;
        if (!pending) {
          word.push_back(remove_node_op(static_cast<int>(pos)));
          window.erase(window.begin() + pos);
          dropped = true;
          break;
        }
      }
    }
  }
  return {true, std::move(word)};
}

CountingAutomaton::CountingAutomaton(MultiAnnotatedGraph spec, int width)
    : spec_(std::move(spec)), width_(width) {
  if (width < 0) throw std::invalid_argument("automaton: negative width");
}

AutomatonState CountingAutomaton::initial() const {
  return AutomatonState{{}, zero_annotation(spec_.graph, spec_.bound)};
}

bool CountingAutomaton::is_final(const AutomatonState& s) const {
  if (!s.interface_nodes.empty()) return false;
  for (const AnnotationPair& p : spec_.pairs)
    if (ann_leq(p.lower, s.counts) && ann_leq(s.counts, p.upper)) return true;
  return false;
}

std::vector<AutomatonState> CountingAutomaton::step(const AutomatonState& s,
                                                    const AtomicOp& op) const {
  const int size = static_cast<int>(s.interface_nodes.size());
  std::vector<AutomatonState> out;
  switch (op.kind) {
    case AtomicOp::Kind::add_node: {
      if (size >= max_interface()) return out;  // window full: no transition
      for (int v = 0; v < spec_.graph.node_count(); ++v) {
        AutomatonState next = s;
        next.interface_nodes.push_back(v);
        out.push_back(std::move(next));
      }
      return out;
    }
    case AtomicOp::Kind::add_edge: {
      if (op.src < 0 || op.src >= size || op.tgt < 0 || op.tgt >= size)
        throw std::invalid_argument("step: edge endpoint outside the interface");
      int want_src = s.interface_nodes[op.src];
      int want_tgt = s.interface_nodes[op.tgt];
      for (int e = 0; e < spec_.graph.edge_count(); ++e) {
        const Edge& ed = spec_.graph.edge(e);
        if (ed.src != want_src || ed.tgt != want_tgt || spec_.graph.edge_label(e) != op.label)
          continue;
        AutomatonState next = s;
        next.counts.edge_values[e] = mult_add(next.counts.edge_values[e], 1, spec_.bound);
        out.push_back(std::move(next));
      }
      return out;
    }
    case AtomicOp::Kind::remove_node: {
      if (op.index < 0 || op.index >= size)
        throw std::invalid_argument("step: removal index outside the interface");
      AutomatonState next = s;
      int v = next.interface_nodes[op.index];
      next.interface_nodes.erase(next.interface_nodes.begin() + op.index);
      next.counts.node_values[v] = mult_add(next.counts.node_values[v], 1, spec_.bound);
      out.push_back(std::move(next));
      return out;
    }
  }
  return out;
}

bool CountingAutomaton::accepts(const OpWord& w) const {
  // Structural validation first (indices and final emptiness), so that an
  // ill-formed word is an error rather than a rejection.
  int size = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    const AtomicOp& op = w[i];
    switch (op.kind) {
      case AtomicOp::Kind::add_node:
        ++size;
        break;
      case AtomicOp::Kind::add_edge:
        if (op.src < 0 || op.src >= size || op.tgt < 0 || op.tgt >= size)
          throw std::invalid_argument("accepts: ill-formed word (edge endpoint)");
        break;
      case AtomicOp::Kind::remove_node:
        if (op.index < 0 || op.index >= size)
          throw std::invalid_argument("accepts: ill-formed word (removal index)");
        --size;
        break;
    }
  }
  if (size != 0) throw std::invalid_argument("accepts: ill-formed word (final interface)");

  std::set<std::pair<std::vector<int>, std::vector<MultVal>>> frontier;
  auto key = [](const AutomatonState& s) {
    std::vector<MultVal> flat = s.counts.node_values;
    flat.insert(flat.end(), s.counts.edge_values.begin(), s.counts.edge_values.end());
    return std::make_pair(s.interface_nodes, std::move(flat));
  };
  auto unkey = [&](const std::pair<std::vector<int>, std::vector<MultVal>>& k) {
    AutomatonState s;
    s.interface_nodes = k.first;
    s.counts.bound = spec_.bound;
    s.counts.node_values.assign(k.second.begin(), k.second.begin() + spec_.graph.node_count());
    s.counts.edge_values.assign(k.second.begin() + spec_.graph.node_count(), k.second.end());
    return s;
  };
  frontier.insert(key(initial()));
  for (const AtomicOp& op : w) {
    std::set<std::pair<std::vector<int>, std::vector<MultVal>>> next;
    for (const auto& k : frontier)
      for (const AutomatonState& s : step(unkey(k), op)) next.insert(key(s));
    frontier = std::move(next);
    if (frontier.empty()) return false;
  }
  for (const auto& k : frontier)
    if (is_final(unkey(k))) return true;
  return false;
}

namespace {

std::vector<AtomicOp> valid_ops(int interface_size, int max_interface, const Alphabet& alphabet) {
  std::vector<AtomicOp> ops;
  if (interface_size < max_interface) ops.push_back(add_node_op());
  for (int i = 0; i < interface_size; ++i)
    for (int j = 0; j < interface_size; ++j)
      for (int l = 0; l < alphabet.size(); ++l) ops.push_back(add_edge_op(i, j, alphabet.label(l)));
  for (int i = 0; i < interface_size; ++i) ops.push_back(remove_node_op(i));
  return ops;
}

using StateKey = std::pair<std::vector<int>, std::vector<MultVal>>;

StateKey key_of(const AutomatonState& s) {
  std::vector<MultVal> flat = s.counts.node_values;
  flat.insert(flat.end(), s.counts.edge_values.begin(), s.counts.edge_values.end());
  return {s.interface_nodes, std::move(flat)};
}

AutomatonState state_of(const StateKey& k, const MultiAnnotatedGraph& spec) {
  AutomatonState s;
  s.interface_nodes = k.first;
  s.counts.bound = spec.bound;
  s.counts.node_values.assign(k.second.begin(), k.second.begin() + spec.graph.node_count());
  s.counts.edge_values.assign(k.second.begin() + spec.graph.node_count(), k.second.end());
  return s;
}

}  // namespace

BoundedInclusion atg_inclusion_bounded(const MultiAnnotatedGraph& t1,
                                       const MultiAnnotatedGraph& t2, int width,
                                       bool antichain_pruning) {
  if (!(t1.graph.alphabet() == t2.graph.alphabet()))
    throw std::invalid_argument("atg_inclusion_bounded: alphabet mismatch");
  if (t1.bound != t2.bound)
    throw std::invalid_argument("atg_inclusion_bounded: mixed bounds");
  CountingAutomaton a1(t1, width);
  CountingAutomaton a2(t2, width);
  const Alphabet& alphabet = t1.graph.alphabet();

  // Word inclusion by product of A1 states with the determinized A2: search
  // for a word some A1 run accepts while no A2 run does. Breadth-first, so
  // the first hit is a shortest counterexample.
  struct Node {
    StateKey q1;
    std::vector<StateKey> q2set;  // sorted
    int parent = -1;
    AtomicOp via;
  };
  std::vector<Node> arena;
  std::set<std::pair<StateKey, std::vector<StateKey>>> visited;
  // With pruning on: per left state, the antichain of minimal visited
  // right-side sets. A superset of a visited set reaches no counterexample
  // its subset cannot reach, and never a shorter one.
  std::map<StateKey, std::vector<std::vector<StateKey>>> minimal_sets;
  std::deque<int> queue;

  auto try_visit = [&](const StateKey& q1, const std::vector<StateKey>& q2set) {
    if (!antichain_pruning) return visited.insert({q1, q2set}).second;
    std::vector<std::vector<StateKey>>& chain = minimal_sets[q1];
    for (const std::vector<StateKey>& seen : chain)
      if (std::includes(q2set.begin(), q2set.end(), seen.begin(), seen.end())) return false;
    std::erase_if(chain, [&](const std::vector<StateKey>& seen) {
      return std::includes(seen.begin(), seen.end(), q2set.begin(), q2set.end());
    });
    chain.push_back(q2set);
    return true;
  };

  Node root{key_of(a1.initial()), {key_of(a2.initial())}, -1, AtomicOp{}};
  try_visit(root.q1, root.q2set);
  arena.push_back(root);
  queue.push_back(0);

  auto rejected_by_all = [&](const std::vector<StateKey>& q2set) {
    for (const StateKey& k : q2set)
      if (a2.is_final(state_of(k, t2))) return false;
    return true;
  };

  while (!queue.empty()) {
    int idx = queue.front();
    queue.pop_front();
    AutomatonState q1 = state_of(arena[idx].q1, t1);

    if (a1.is_final(q1) && rejected_by_all(arena[idx].q2set)) {
      OpWord word;
      for (int i = idx; arena[i].parent >= 0; i = arena[i].parent) word.push_back(arena[i].via);
      std::reverse(word.begin(), word.end());
      return {false, graph_of_word(word, alphabet)};
    }

    int size = static_cast<int>(q1.interface_nodes.size());
    for (const AtomicOp& op : valid_ops(size, a1.max_interface(), alphabet)) {
      std::vector<AutomatonState> succ1 = a1.step(q1, op);
      if (succ1.empty()) continue;  // the word cannot be accepted by A1 anyway
      std::set<StateKey> q2next;
      for (const StateKey& k : arena[idx].q2set)
        for (const AutomatonState& s : a2.step(state_of(k, t2), op)) q2next.insert(key_of(s));
      std::vector<StateKey> q2vec(q2next.begin(), q2next.end());
      for (const AutomatonState& s1 : succ1) {
        StateKey k1 = key_of(s1);
        if (try_visit(k1, q2vec)) {
          arena.push_back(Node{k1, q2vec, idx, op});
          queue.push_back(static_cast<int>(arena.size()) - 1);
        }
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace tglab

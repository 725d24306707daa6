#pragma once

#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "tglab/annot.hpp"
#include "tglab/dpo.hpp"
#include "tglab/graph.hpp"

namespace tglab::testing {

inline Graph make_graph(std::vector<std::string> labels, int nodes,
                        std::vector<std::tuple<int, int, std::string>> edges = {}) {
  Graph g{Alphabet(std::move(labels))};
  for (int i = 0; i < nodes; ++i) g.add_node();
  for (auto& [s, t, l] : edges) g.add_edge(s, t, l);
  return g;
}

// Independent oracle: tries every node-map/edge-map combination and filters
// by the morphism equations. Exponential, test-only.
inline long long naive_hom_count(const Graph& dom, const Graph& cod) {
  const long long vn = cod.node_count(), en = cod.edge_count();
  long long total = 0;
  std::vector<int> nm(dom.node_count(), 0), em(dom.edge_count(), 0);
  if (dom.node_count() > 0 && vn == 0) return 0;
  if (dom.edge_count() > 0 && en == 0) return 0;
  auto advance = [](std::vector<int>& v, long long base) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (++v[i] < base) return true;
      v[i] = 0;
    }
    return false;
  };
  do {
    std::fill(em.begin(), em.end(), 0);
    do {
      if (check_morphism(Morphism{dom, cod, nm, em}).valid) ++total;
    } while (advance(em, en));
  } while (advance(nm, vn));
  return total;
}

// --- fixtures used across suites ----------------------------------------

// Two-label alphabet most fixtures live over.
inline Alphabet ab() { return Alphabet({"A", "B"}); }

// 6-node graph that folds onto a 3-node A;B path.
inline Graph foldable_six() {
  return make_graph({"A", "B"}, 6,
                    {{0, 1, "A"}, {4, 1, "A"}, {1, 2, "B"}, {1, 5, "B"}, {3, 2, "B"}});
}

// Its core: x -A-> y -B-> z.
inline Graph ab_path3() { return make_graph({"A", "B"}, 3, {{0, 1, "A"}, {1, 2, "B"}}); }

// Type graph with an A-loop and a pendant B-edge.
inline Graph aloop_bedge() { return make_graph({"A", "B"}, 2, {{0, 0, "A"}, {0, 1, "B"}}); }

inline Graph a_loop() { return make_graph({"A", "B"}, 1, {{0, 0, "A"}}); }
inline Graph b_loop() { return make_graph({"A", "B"}, 1, {{0, 0, "B"}}); }
inline Graph single_node() { return make_graph({"A", "B"}, 1); }
inline Graph empty_ab() { return make_graph({"A", "B"}, 0); }

// Dual of the A;B path: no node is both an A-target and a B-source.
inline Graph path_dual() {
  return make_graph({"A", "B"}, 2, {{0, 0, "A"}, {1, 1, "B"}, {1, 0, "A"}, {1, 0, "B"}});
}

// Relabeling rule: an A-edge between two preserved nodes becomes a B-edge.
inline DpoRule relabel_a_to_b() {
  DpoRule r;
  r.left = make_graph({"A", "B"}, 2, {{0, 1, "A"}});
  r.interface = make_graph({"A", "B"}, 2);
  r.right = make_graph({"A", "B"}, 2, {{0, 1, "B"}});
  r.to_left = Morphism{r.interface, r.left, {0, 1}, {}};
  r.to_right = Morphism{r.interface, r.right, {0, 1}, {}};
  return r;
}

// Type graph whose second node is a flower node, plus a pendant A-edge.
// Its core is the flower over {A,B}.
inline Graph flower_with_pendant() {
  return make_graph({"A", "B"}, 2, {{1, 1, "A"}, {1, 1, "B"}, {0, 1, "A"}});
}

inline Annotation annotation_of(const Graph& carrier, int bound, std::vector<MultVal> nodes,
                                std::vector<MultVal> edges) {
  Annotation a;
  a.bound = bound;
  a.node_values = std::move(nodes);
  a.edge_values = std::move(edges);
  if (static_cast<int>(a.node_values.size()) != carrier.node_count() ||
      static_cast<int>(a.edge_values.size()) != carrier.edge_count())
    throw std::invalid_argument("annotation_of: size mismatch");
  return a;
}

// Two-node spec: node bounds [0,1] and [1,m], A-edge [0,2], B-loop [0,m], n=2.
inline MultiAnnotatedGraph counting_example_spec() {
  Graph t = make_graph({"A", "B"}, 2, {{0, 1, "A"}, {1, 1, "B"}});
  MultiAnnotatedGraph s{t, 2, {}};
  s.pairs.push_back(AnnotationPair{annotation_of(t, 2, {0, 1}, {0, 0}),
                                   annotation_of(t, 2, {1, kMany}, {2, kMany})});
  return s;
}

// One node [1,m] over n=1.
inline MultiAnnotatedGraph one_node_open_spec() {
  Graph t = make_graph({"A", "B"}, 1);
  MultiAnnotatedGraph s{t, 1, {}};
  s.pairs.push_back(
      AnnotationPair{annotation_of(t, 1, {1}, {}), annotation_of(t, 1, {kMany}, {})});
  return s;
}

// Two nodes [1,1] and [0,m] over n=1; same language as one_node_open_spec.
inline MultiAnnotatedGraph two_node_split_spec() {
  Graph t = make_graph({"A", "B"}, 2);
  MultiAnnotatedGraph s{t, 1, {}};
  s.pairs.push_back(
      AnnotationPair{annotation_of(t, 1, {1, 0}, {}), annotation_of(t, 1, {1, kMany}, {})});
  return s;
}

// --- deterministic random generators --------------------------------------

inline Graph random_graph(std::mt19937& rng, const Alphabet& alphabet, int max_nodes,
                          int max_edges, int min_nodes = 0) {
  std::uniform_int_distribution<int> nd(min_nodes, max_nodes);
  int n = nd(rng);
  int m = n == 0 ? 0 : std::uniform_int_distribution<int>(0, max_edges)(rng);
  Graph g{alphabet};
  for (int i = 0; i < n; ++i) g.add_node();
  for (int i = 0; i < m; ++i) {
    std::uniform_int_distribution<int> vd(0, n - 1);
    std::uniform_int_distribution<int> ld(0, alphabet.size() - 1);
    g.add_edge(vd(rng), vd(rng), alphabet.label(ld(rng)));
  }
  return g;
}

inline MultVal random_mult(std::mt19937& rng, int bound) {
  int v = std::uniform_int_distribution<int>(0, bound + 1)(rng);
  return v > bound ? kMany : v;
}

inline AnnotationPair random_pair(std::mt19937& rng, const Graph& carrier, int bound) {
  Annotation lower = zero_annotation(carrier, bound);
  Annotation upper = zero_annotation(carrier, bound);
  auto fill = [&](std::vector<MultVal>& lo, std::vector<MultVal>& hi) {
    for (size_t i = 0; i < lo.size(); ++i) {
      MultVal a = random_mult(rng, bound);
      MultVal b = random_mult(rng, bound);
      lo[i] = mult_meet(a, b);
      hi[i] = mult_join(a, b);
    }
  };
  fill(lower.node_values, upper.node_values);
  fill(lower.edge_values, upper.edge_values);
  return AnnotationPair{std::move(lower), std::move(upper)};
}

inline MultiAnnotatedGraph random_atg(std::mt19937& rng, const Alphabet& alphabet, int max_nodes,
                                      int max_edges, int bound, int max_pairs) {
  MultiAnnotatedGraph t{random_graph(rng, alphabet, max_nodes, max_edges), bound, {}};
  int pairs = std::uniform_int_distribution<int>(0, max_pairs)(rng);
  for (int i = 0; i < pairs; ++i) t.pairs.push_back(random_pair(rng, t.graph, bound));
  return t;
}

// Rule with injective sides: the interface is a random subgraph kept in
// both left and right, each extended independently.
inline DpoRule random_injective_rule(std::mt19937& rng, const Alphabet& alphabet, int max_extra) {
  Graph iface = random_graph(rng, alphabet, 2, 1);
  auto extend = [&](const Graph& base) {
    Graph g = base;
    std::uniform_int_distribution<int> extra_nodes(0, max_extra);
    std::uniform_int_distribution<int> extra_edges(0, max_extra);
    int add_n = extra_nodes(rng);
    for (int i = 0; i < add_n; ++i) g.add_node();
    if (g.node_count() > 0) {
      int add_e = extra_edges(rng);
      for (int i = 0; i < add_e; ++i) {
        std::uniform_int_distribution<int> vd(0, g.node_count() - 1);
        std::uniform_int_distribution<int> ld(0, alphabet.size() - 1);
        g.add_edge(vd(rng), vd(rng), alphabet.label(ld(rng)));
      }
    }
    return g;
  };
  DpoRule r;
  r.interface = iface;
  r.left = extend(iface);
  r.right = extend(iface);
  Morphism embed{iface, r.left, {}, {}};
  for (int v = 0; v < iface.node_count(); ++v) embed.node_map.push_back(v);
  for (int e = 0; e < iface.edge_count(); ++e) embed.edge_map.push_back(e);
  r.to_left = embed;
  embed.cod = r.right;
  r.to_right = embed;
  return r;
}

}  // namespace tglab::testing

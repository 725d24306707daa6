#include "tglab/graph_ops.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tglab {

namespace {

void require_shared_alphabet(const Graph& g1, const Graph& g2, const char* op) {
  if (!(g1.alphabet() == g2.alphabet()))
    throw std::invalid_argument(std::string(op) + ": alphabet mismatch");
}

std::string fresh_id(const Graph& g, std::string base, bool node) {
  std::string id = base;
  int k = 1;
  while ((node ? g.node_index(id) : g.edge_index(id)) >= 0)
    id = base + "#" + std::to_string(++k);
  return id;
}

// Union-find over 0..n-1.
struct Partition {
  std::vector<int> parent;
  explicit Partition(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Graph flower(const Alphabet& alphabet) {
  Graph g(alphabet);
  int v = g.add_node("flower");
  for (int l = 0; l < alphabet.size(); ++l)
    g.add_edge("loop_" + alphabet.label(l), v, v, alphabet.label(l));
  return g;
}

ProductResult product(const Graph& g1, const Graph& g2) {
  require_shared_alphabet(g1, g2, "product");
  Graph p(g1.alphabet());
  std::vector<std::vector<int>> node_of(g1.node_count(), std::vector<int>(g2.node_count(), -1));
  Morphism pr1{p, g1, {}, {}};
  Morphism pr2{p, g2, {}, {}};
  for (int u = 0; u < g1.node_count(); ++u)
    for (int v = 0; v < g2.node_count(); ++v) {
      node_of[u][v] = p.add_node(fresh_id(p, g1.node_id(u) + "*" + g2.node_id(v), true));
      pr1.node_map.push_back(u);
      pr2.node_map.push_back(v);
    }
  for (int e1 = 0; e1 < g1.edge_count(); ++e1)
    for (int e2 = 0; e2 < g2.edge_count(); ++e2) {
      const Edge& a = g1.edge(e1);
      const Edge& b = g2.edge(e2);
      if (g1.edge_label(e1) != g2.edge_label(e2)) continue;
      p.add_edge(fresh_id(p, g1.edge_id(e1) + "*" + g2.edge_id(e2), false),
                 node_of[a.src][b.src], node_of[a.tgt][b.tgt], g1.edge_label(e1));
      pr1.edge_map.push_back(e1);
      pr2.edge_map.push_back(e2);
    }
  pr1.dom = p;
  pr2.dom = p;
  return {p, pr1, pr2};
}

CoproductResult coproduct(const Graph& g1, const Graph& g2) {
  require_shared_alphabet(g1, g2, "coproduct");
  Graph c(g1.alphabet());
  Morphism i1{g1, c, {}, {}};
  Morphism i2{g2, c, {}, {}};
  for (int v = 0; v < g1.node_count(); ++v)
    i1.node_map.push_back(c.add_node(fresh_id(c, g1.node_id(v), true)));
  for (int v = 0; v < g2.node_count(); ++v)
    i2.node_map.push_back(c.add_node(fresh_id(c, g2.node_id(v), true)));
  for (int e = 0; e < g1.edge_count(); ++e) {
    const Edge& ed = g1.edge(e);
    i1.edge_map.push_back(c.add_edge(fresh_id(c, g1.edge_id(e), false), i1.node_map[ed.src],
                                     i1.node_map[ed.tgt], g1.edge_label(e)));
  }
  for (int e = 0; e < g2.edge_count(); ++e) {
    const Edge& ed = g2.edge(e);
    i2.edge_map.push_back(c.add_edge(fresh_id(c, g2.edge_id(e), false), i2.node_map[ed.src],
                                     i2.node_map[ed.tgt], g2.edge_label(e)));
  }
  i1.cod = c;
  i2.cod = c;
  return {c, i1, i2};
}

PushoutResult pushout(const Morphism& f, const Morphism& g) {
  if (!(f.dom == g.dom)) throw std::invalid_argument("pushout: the two morphisms need a common domain");
  if (!is_valid_morphism(f) || !is_valid_morphism(g))
    throw std::invalid_argument("pushout: invalid input morphism");
  const Graph& a = f.dom;
  const Graph& b = f.cod;
  const Graph& c = g.cod;
  require_shared_alphabet(b, c, "pushout");

  const int bn = b.node_count(), cn = c.node_count();
  const int be = b.edge_count(), ce = c.edge_count();
  Partition nodes(bn + cn);
  Partition edges(be + ce);
  for (int v = 0; v < a.node_count(); ++v) nodes.unite(f.node_map[v], bn + g.node_map[v]);
  for (int e = 0; e < a.edge_count(); ++e) edges.unite(f.edge_map[e], be + g.edge_map[e]);

  // Endpoint classes of merged edges agree because f and g commute with
  // src/tgt, so the quotient graph is well defined.
  Graph d(b.alphabet());
  std::vector<int> node_class(bn + cn, -1);
  auto node_label = [&](int i) { return i < bn ? b.node_id(i) : c.node_id(i - bn); };
  for (int i = 0; i < bn + cn; ++i) {
    int r = nodes.find(i);
    if (node_class[r] < 0) node_class[r] = d.add_node(fresh_id(d, node_label(r), true));
    node_class[i] = node_class[r];
  }
  auto src_of = [&](int i) {
    return i < be ? b.edge(i).src : bn + c.edge(i - be).src;
  };
  auto tgt_of = [&](int i) {
    return i < be ? b.edge(i).tgt : bn + c.edge(i - be).tgt;
  };
  auto label_of = [&](int i) { return i < be ? b.edge_label(i) : c.edge_label(i - be); };
  auto edge_name = [&](int i) { return i < be ? b.edge_id(i) : c.edge_id(i - be); };
  std::vector<int> edge_class(be + ce, -1);
  for (int i = 0; i < be + ce; ++i) {
    int r = edges.find(i);
    if (edge_class[r] < 0)
      edge_class[r] = d.add_edge(fresh_id(d, edge_name(r), false), node_class[src_of(r)],
                                 node_class[tgt_of(r)], label_of(r));
    edge_class[i] = edge_class[r];
  }

  Morphism pb{b, d, {}, {}};
  Morphism pc{c, d, {}, {}};
  for (int v = 0; v < bn; ++v) pb.node_map.push_back(node_class[v]);
  for (int e = 0; e < be; ++e) pb.edge_map.push_back(edge_class[e]);
  for (int v = 0; v < cn; ++v) pc.node_map.push_back(node_class[bn + v]);
  for (int e = 0; e < ce; ++e) pc.edge_map.push_back(edge_class[be + e]);
  return {d, pb, pc};
}

}  // namespace tglab

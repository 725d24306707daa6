#include "tglab/hom.hpp"

#include <algorithm>
#include <numeric>

namespace tglab {

namespace {

struct Searcher {
  const Graph& dom;
  const Graph& cod;
  const HomVisitor& visit;

  std::vector<int> label_map;    // dom label index -> cod label index, -1 if absent
  std::vector<int> node_order;   // dom nodes, descending degree
  std::vector<int> node_image;   // -1 while unassigned
  std::vector<int> edge_image;
  std::vector<std::vector<int>> edges_ready_at;  // per order position: edges whose
                                                 // endpoints are all placed there
  bool stopped = false;

  explicit Searcher(const Graph& d, const Graph& c, const HomVisitor& v)
      : dom(d), cod(c), visit(v) {
    label_map.resize(dom.alphabet().size());
    for (int l = 0; l < dom.alphabet().size(); ++l)
      label_map[l] = cod.alphabet().index_of(dom.alphabet().label(l));

    node_order.resize(dom.node_count());
    std::iota(node_order.begin(), node_order.end(), 0);
    std::stable_sort(node_order.begin(), node_order.end(),
                     [&](int a, int b) { return dom.degree(a) > dom.degree(b); });

    std::vector<int> placed_at(dom.node_count(), -1);
    for (int pos = 0; pos < static_cast<int>(node_order.size()); ++pos)
      placed_at[node_order[pos]] = pos;
    edges_ready_at.resize(dom.node_count());
    for (int e = 0; e < dom.edge_count(); ++e) {
      const Edge& ed = dom.edge(e);
      int ready = std::max(placed_at[ed.src], placed_at[ed.tgt]);
      edges_ready_at[ready].push_back(e);
    }

    node_image.assign(dom.node_count(), -1);
    edge_image.assign(dom.edge_count(), -1);
  }

  void run() {
    if (dom.node_count() > 0 && cod.node_count() == 0) return;
    assign_node(0);
  }

  void assign_node(int pos) {
    if (stopped) return;
    if (pos == dom.node_count()) {
      if (!visit(node_image, edge_image)) stopped = true;
      return;
    }
    int v = node_order[pos];
    for (int t = 0; t < cod.node_count() && !stopped; ++t) {
      node_image[v] = t;
      assign_edges(pos, 0);
    }
    node_image[v] = -1;
  }

  void assign_edges(int pos, size_t k) {
    if (stopped) return;
    const std::vector<int>& ready = edges_ready_at[pos];
    if (k == ready.size()) {
      assign_node(pos + 1);
      return;
    }
    int e = ready[k];
    const Edge& ed = dom.edge(e);
    int want_src = node_image[ed.src];
    int want_tgt = node_image[ed.tgt];
    int want_lab = label_map[ed.label];
    if (want_lab < 0) return;  // label absent from the codomain alphabet
    for (int f = 0; f < cod.edge_count() && !stopped; ++f) {
      const Edge& cf = cod.edge(f);
      if (cf.src != want_src || cf.tgt != want_tgt || cf.label != want_lab) continue;
      edge_image[e] = f;
      assign_edges(pos, k + 1);
    }
    edge_image[e] = -1;
  }
};

}  // namespace

void for_each_hom(const Graph& dom, const Graph& cod, const HomVisitor& visit) {
  Searcher s(dom, cod, visit);
  s.run();
}

std::vector<Morphism> enumerate_homs(const Graph& dom, const Graph& cod) {
  std::vector<Morphism> out;
  for_each_hom(dom, cod, [&](const std::vector<int>& nm, const std::vector<int>& em) {
    out.push_back(Morphism{dom, cod, nm, em});
    return true;
  });
  return out;
}

std::optional<Morphism> find_hom(const Graph& dom, const Graph& cod) {
  std::optional<Morphism> found;
  for_each_hom(dom, cod, [&](const std::vector<int>& nm, const std::vector<int>& em) {
    found = Morphism{dom, cod, nm, em};
    return false;
  });
  return found;
}

bool hom_exists(const Graph& dom, const Graph& cod) { return find_hom(dom, cod).has_value(); }

long long count_homs(const Graph& dom, const Graph& cod) {
  long long n = 0;
  for_each_hom(dom, cod, [&](const std::vector<int>&, const std::vector<int>&) {
    ++n;
    return true;
  });
  return n;
}

bool hom_equivalent(const Graph& g, const Graph& h) {
  return hom_exists(g, h) && hom_exists(h, g);
}

}  // namespace tglab

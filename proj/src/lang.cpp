#include "tglab/lang.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tglab/core.hpp"
#include "tglab/hom.hpp"

namespace tglab {

namespace {

void require_shared_alphabet(const Graph& g1, const Graph& g2, const char* op) {
  if (!(g1.alphabet() == g2.alphabet()))
    throw std::invalid_argument(std::string(op) + ": alphabet mismatch");
}

}  // namespace

std::optional<Morphism> tg_membership(const Graph& g, const TypeGraphSpec& t) {
  require_shared_alphabet(g, t.type_graph, "tg_member");
  return find_hom(g, t.type_graph);
}

bool tg_member(const Graph& g, const TypeGraphSpec& t) { return tg_membership(g, t).has_value(); }

bool tg_empty(const TypeGraphSpec&) { return false; }

TgInclusion tg_included(const TypeGraphSpec& t1, const TypeGraphSpec& t2) {
  require_shared_alphabet(t1.type_graph, t2.type_graph, "tg_included");
  if (auto m = find_hom(t1.type_graph, t2.type_graph)) return {true, std::move(m), std::nullopt};
  return {false, std::nullopt, t1.type_graph};
}

std::optional<Morphism> rg_blocking_hom(const Graph& g, const RestrictionGraphSpec& r) {
  require_shared_alphabet(g, r.restriction_graph, "rg_member");
  return find_hom(r.restriction_graph, g);
}

bool rg_member(const Graph& g, const RestrictionGraphSpec& r) {
  return !rg_blocking_hom(g, r).has_value();
}

bool rg_empty(const RestrictionGraphSpec& r) { return r.restriction_graph.empty(); }

RgInclusion rg_included(const RestrictionGraphSpec& r1, const RestrictionGraphSpec& r2) {
  require_shared_alphabet(r1.restriction_graph, r2.restriction_graph, "rg_included");
  if (auto m = find_hom(r1.restriction_graph, r2.restriction_graph))
    return {true, std::move(m), std::nullopt};
  return {false, std::nullopt, r2.restriction_graph};
}

DualityVerdict duality_check_bounded(const Graph& r, const Graph& t, const GraphUniverse& u) {
  if (!u.alphabet.contains_all_of(r.alphabet()) || !u.alphabet.contains_all_of(t.alphabet()))
    throw std::invalid_argument("duality_check_bounded: universe alphabet does not cover inputs");
  for (const Graph& g : enumerate_graphs(u)) {
    bool to_t = hom_exists(g, t);
    bool r_avoided = !hom_exists(r, g);
    if (to_t != r_avoided) return {false, g};
  }
  return {true, std::nullopt};
}

bool core_is_tree(const Graph& r) {
  Graph k = core(r).core;
  const int n = k.node_count();
  if (n == 0) return false;
  if (k.edge_count() != n - 1) return false;

  std::set<std::pair<int, int>> seen;  // unordered endpoint pairs
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : k.edges()) {
    if (e.src == e.tgt) return false;
    auto key = std::minmax(e.src, e.tgt);
    if (!seen.insert({key.first, key.second}).second) return false;  // parallel or antiparallel
    adj[e.src].push_back(e.tgt);
    adj[e.tgt].push_back(e.src);
  }
  // |E| = |V|-1 and no multi-edges: connectivity is all that is left.
  std::vector<bool> vis(n, false);
  std::vector<int> stack{0};
  vis[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!vis[w]) {
        vis[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

}  // namespace tglab

#include "tglab/universe.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "tglab/iso.hpp"

namespace tglab {

int enumeration_node_limit() {
  if (const char* env = std::getenv("TGLAB_MAX_NODES")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 6;
}

namespace {

// Number of size-m multisets over s slots, capped.
double multiset_count(int s, int m) {
  double c = 1.0;
  for (int i = 1; i <= m; ++i) c = c * (s + i - 1) / i;
  return c;
}

}  // namespace

std::vector<Graph> enumerate_graphs(const GraphUniverse& u) {
  if (u.max_nodes < 0 || u.max_edges < 0)
    throw std::invalid_argument("enumerate_graphs: negative bound");
  if (u.max_nodes > enumeration_node_limit())
    throw std::invalid_argument(
        "enumerate_graphs: max_nodes exceeds the enumeration limit (" +
        std::to_string(enumeration_node_limit()) + "; set TGLAB_MAX_NODES to raise it)");
  const int slots_max = u.max_nodes * u.max_nodes * u.alphabet.size();
  if (multiset_count(slots_max, u.max_edges) > 5e6)
    throw std::invalid_argument("enumerate_graphs: universe too large to enumerate");

  std::vector<Graph> out;
  for (int n = 0; n <= u.max_nodes; ++n) {
    // All (src,tgt,label) slots, ordered; an edge multiset is a
    // non-decreasing sequence of slot indices.
    std::vector<std::tuple<int, int, int>> slots;
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        for (int l = 0; l < u.alphabet.size(); ++l) slots.emplace_back(s, t, l);

    for (int m = 0; m <= u.max_edges; ++m) {
      if (m > 0 && slots.empty()) break;
      std::map<std::string, Graph> bucket;
      std::vector<int> pick(m, 0);
      for (;;) {
        Graph g(u.alphabet);
        for (int v = 0; v < n; ++v) g.add_node();
        for (int i = 0; i < m; ++i) {
          auto [s, t, l] = slots[pick[i]];
          g.add_edge(s, t, u.alphabet.label(l));
        }
        bucket.emplace(canonical_encoding(g), std::move(g));

        // next non-decreasing sequence
        int i = m - 1;
        while (i >= 0 && pick[i] == static_cast<int>(slots.size()) - 1) --i;
        if (i < 0) break;
        int v = pick[i] + 1;
        for (int j = i; j < m; ++j) pick[j] = v;
      }
      for (auto& [enc, g] : bucket) out.push_back(std::move(g));
    }
  }
  return out;
}

}  // namespace tglab

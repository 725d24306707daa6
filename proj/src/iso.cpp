#include "tglab/iso.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <tuple>
#include <vector>

namespace tglab {

namespace {

// Iso-invariant per-node signature: degree counts split by label and
// direction, plus loop counts.
std::vector<std::string> node_signatures(const Graph& g) {
  std::vector<std::string> sig(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) {
    std::vector<std::string> inc;
    for (int e = 0; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      if (ed.src == v && ed.tgt == v)
        inc.push_back("o" + g.edge_label(e));
      else if (ed.src == v)
        inc.push_back(">" + g.edge_label(e));
      else if (ed.tgt == v)
        inc.push_back("<" + g.edge_label(e));
    }
    std::sort(inc.begin(), inc.end());
    std::string s;
    for (const auto& i : inc) s += i + ";";
    sig[v] = s;
  }
  return sig;
}

std::string encode_under(const Graph& g, const std::vector<int>& position) {
  // position[v] = rank of node v in the candidate canonical order
  std::vector<std::tuple<int, int, std::string>> tr;
  tr.reserve(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    tr.emplace_back(position[ed.src], position[ed.tgt], g.edge_label(e));
  }
  std::sort(tr.begin(), tr.end());
  std::ostringstream os;
  os << g.node_count() << "#";
  for (const auto& [s, t, l] : tr) os << s << ">" << t << ":" << l << ";";
  return os.str();
}

}  // namespace

std::string canonical_encoding(const Graph& g) {
  const int n = g.node_count();
  if (n == 0) return encode_under(g, {});

  std::vector<std::string> sig = node_signatures(g);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(sig[a], a) < std::tie(sig[b], b);
  });

  // Permute only within blocks of equal signature.
  std::string best;
  std::vector<int> position(n);
  auto try_order = [&]() {
    for (int i = 0; i < n; ++i) position[order[i]] = i;
    std::string enc = encode_under(g, position);
    if (best.empty() || enc < best) best = enc;
  };

  std::vector<std::pair<int, int>> blocks;  // [begin, end) in order
  int b = 0;
  while (b < n) {
    int e = b + 1;
    while (e < n && sig[order[e]] == sig[order[b]]) ++e;
    blocks.emplace_back(b, e);
    b = e;
  }

  std::function<void(size_t)> permute_blocks = [&](size_t bi) {
    if (bi == blocks.size()) {
      try_order();
      return;
    }
    auto [lo, hi] = blocks[bi];
    std::sort(order.begin() + lo, order.begin() + hi);
    do {
      permute_blocks(bi + 1);
    } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  permute_blocks(0);
  return best;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) return false;
  auto sg = node_signatures(g);
  auto sh = node_signatures(h);
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return false;
  return canonical_encoding(g) == canonical_encoding(h);
}

}  // namespace tglab

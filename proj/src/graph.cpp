#include "tglab/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace tglab {

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
    throw std::invalid_argument("alphabet: duplicate label");
  for (const auto& l : labels_)
    if (l.empty()) throw std::invalid_argument("alphabet: empty label");
}

int Alphabet::index_of(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return -1;
  return static_cast<int>(it - labels_.begin());
}

bool Alphabet::contains_all_of(const Alphabet& other) const {
  return std::includes(labels_.begin(), labels_.end(), other.labels_.begin(),
                       other.labels_.end());
}

int Graph::add_node(const std::string& id) {
  if (node_index(id) >= 0) throw std::invalid_argument("graph: duplicate node id '" + id + "'");
  node_ids_.push_back(id);
  return node_count() - 1;
}

int Graph::add_node() {
  int k = node_count();
  std::string id = "n" + std::to_string(k);
  while (node_index(id) >= 0) id = "n" + std::to_string(++k);
  return add_node(id);
}

int Graph::add_edge(const std::string& id, int src, int tgt, const std::string& label) {
  if (edge_index(id) >= 0) throw std::invalid_argument("graph: duplicate edge id '" + id + "'");
  if (src < 0 || src >= node_count() || tgt < 0 || tgt >= node_count())
    throw std::invalid_argument("graph: edge '" + id + "' references a missing node");
  int lab = alphabet_.index_of(label);
  if (lab < 0)
    throw std::invalid_argument("graph: edge '" + id + "' has label '" + label +
                                "' outside the declared alphabet");
  edge_ids_.push_back(id);
  edges_.push_back(Edge{src, tgt, lab});
  return edge_count() - 1;
}

int Graph::add_edge(int src, int tgt, const std::string& label) {
  int k = edge_count();
  std::string id = "e" + std::to_string(k);
  while (edge_index(id) >= 0) id = "e" + std::to_string(++k);
  return add_edge(id, src, tgt, label);
}

int Graph::node_index(const std::string& id) const {
  for (int i = 0; i < node_count(); ++i)
    if (node_ids_[i] == id) return i;
  return -1;
}

int Graph::edge_index(const std::string& id) const {
  for (int i = 0; i < edge_count(); ++i)
    if (edge_ids_[i] == id) return i;
  return -1;
}

int Graph::degree(int v) const {
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.src == v) ++d;
    if (e.tgt == v) ++d;
  }
  return d;
}

namespace {

void require_structural(const Morphism& m) {
  if (static_cast<int>(m.node_map.size()) != m.dom.node_count() ||
      static_cast<int>(m.edge_map.size()) != m.dom.edge_count())
    throw std::invalid_argument("morphism: maps are not total on the domain");
  for (int v : m.node_map)
    if (v < 0 || v >= m.cod.node_count())
      throw std::invalid_argument("morphism: node map references an unknown node");
  for (int e : m.edge_map)
    if (e < 0 || e >= m.cod.edge_count())
      throw std::invalid_argument("morphism: edge map references an unknown edge");
}

}  // namespace

MorphismCheck check_morphism(const Morphism& m) {
  require_structural(m);
  for (int e = 0; e < m.dom.edge_count(); ++e) {
    const Edge& de = m.dom.edge(e);
    const Edge& ce = m.cod.edge(m.edge_map[e]);
    const std::string& eid = m.dom.edge_id(e);
    if (ce.src != m.node_map[de.src])
      return {false, "source mismatch at edge '" + eid + "'"};
    if (ce.tgt != m.node_map[de.tgt])
      return {false, "target mismatch at edge '" + eid + "'"};
    if (m.dom.edge_label(e) != m.cod.edge_label(m.edge_map[e]))
      return {false, "label mismatch at edge '" + eid + "'"};
  }
  return {true, ""};
}

bool is_valid_morphism(const Morphism& m) { return check_morphism(m).valid; }

Morphism identity_morphism(const Graph& g) {
  Morphism m{g, g, {}, {}};
  m.node_map.resize(g.node_count());
  m.edge_map.resize(g.edge_count());
  for (int v = 0; v < g.node_count(); ++v) m.node_map[v] = v;
  for (int e = 0; e < g.edge_count(); ++e) m.edge_map[e] = e;
  return m;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (!(f.cod == g.dom)) throw std::invalid_argument("compose: codomain/domain mismatch");
  Morphism m{f.dom, g.cod, {}, {}};
  m.node_map.reserve(f.node_map.size());
  m.edge_map.reserve(f.edge_map.size());
  for (int v : f.node_map) m.node_map.push_back(g.node_map.at(v));
  for (int e : f.edge_map) m.edge_map.push_back(g.edge_map.at(e));
  return m;
}

bool node_surjective(const Morphism& m) {
  std::vector<bool> hit(m.cod.node_count(), false);
  for (int v : m.node_map) hit.at(v) = true;
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

bool edge_surjective(const Morphism& m) {
  std::vector<bool> hit(m.cod.edge_count(), false);
  for (int e : m.edge_map) hit.at(e) = true;
  return std::find(hit.begin(), hit.end(), false) == hit.end();
}

bool surjective(const Morphism& m) { return node_surjective(m) && edge_surjective(m); }

bool injective(const Morphism& m) {
  std::unordered_set<int> nodes(m.node_map.begin(), m.node_map.end());
  if (nodes.size() != m.node_map.size()) return false;
  std::unordered_set<int> edges(m.edge_map.begin(), m.edge_map.end());
  return edges.size() == m.edge_map.size();
}

Graph subgraph(const Graph& g, const std::vector<int>& nodes, const std::vector<int>& edges) {
  Graph s(g.alphabet());
  std::vector<int> node_pos(g.node_count(), -1);
  for (int v : nodes) node_pos.at(v) = s.add_node(g.node_id(v));
  for (int e : edges) {
    const Edge& ed = g.edge(e);
    if (node_pos.at(ed.src) < 0 || node_pos.at(ed.tgt) < 0)
      throw std::invalid_argument("subgraph: edge '" + g.edge_id(e) + "' loses an endpoint");
    s.add_edge(g.edge_id(e), node_pos[ed.src], node_pos[ed.tgt], g.edge_label(e));
  }
  return s;
}

}  // namespace tglab

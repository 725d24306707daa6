#include "tglab/json_io.hpp"

#include <fstream>
#include <set>

namespace tglab {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

void require_keys(const json& j, const std::set<std::string>& required, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const std::string& k : required)
    if (!j.contains(k)) fail(where, "missing field '" + k + "'");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!required.count(it.key())) fail(where, "unknown field '" + it.key() + "'");
}

std::string as_string(const json& j, const std::string& where, const std::string& what) {
  if (!j.is_string()) fail(where, what + " must be a string");
  return j.get<std::string>();
}

int as_int(const json& j, const std::string& where, const std::string& what) {
  if (!j.is_number_integer()) fail(where, what + " must be an integer");
  return j.get<int>();
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError(path + ": not valid JSON");
  return j;
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (int e = 0; e < g.edge_count(); ++e)
    edges.push_back({{"id", g.edge_id(e)},
                     {"src", g.node_id(g.edge(e).src)},
                     {"tgt", g.node_id(g.edge(e).tgt)},
                     {"label", g.edge_label(e)}});
  json nodes = json::array();
  for (int v = 0; v < g.node_count(); ++v) nodes.push_back(g.node_id(v));
  return {{"alphabet", g.alphabet().labels()}, {"nodes", nodes}, {"edges", edges}};
}

Graph graph_from_json(const json& j, const std::string& where) {
  require_keys(j, {"alphabet", "nodes", "edges"}, where);
  if (!j["alphabet"].is_array()) fail(where, "'alphabet' must be an array");
  std::vector<std::string> labels;
  for (const json& l : j["alphabet"]) labels.push_back(as_string(l, where, "alphabet entry"));
  Graph g;
  try {
    g = Graph(Alphabet(std::move(labels)));
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  if (!j["nodes"].is_array()) fail(where, "'nodes' must be an array");
  for (const json& n : j["nodes"]) {
    std::string id = as_string(n, where, "node id");
    if (g.node_index(id) >= 0) fail(where, "duplicate node id '" + id + "'");
    g.add_node(id);
  }
  if (!j["edges"].is_array()) fail(where, "'edges' must be an array");
  for (const json& e : j["edges"]) {
    require_keys(e, {"id", "src", "tgt", "label"}, where);
    std::string id = as_string(e["id"], where, "edge id");
    std::string src = as_string(e["src"], where, "edge '" + id + "' src");
    std::string tgt = as_string(e["tgt"], where, "edge '" + id + "' tgt");
    std::string label = as_string(e["label"], where, "edge '" + id + "' label");
    if (g.edge_index(id) >= 0) fail(where, "duplicate edge id '" + id + "'");
    int s = g.node_index(src);
    int t = g.node_index(tgt);
    if (s < 0) fail(where, "edge '" + id + "' references missing node '" + src + "'");
    if (t < 0) fail(where, "edge '" + id + "' references missing node '" + tgt + "'");
    if (!g.alphabet().contains(label))
      fail(where, "edge '" + id + "' has label '" + label + "' outside the alphabet");
    g.add_edge(id, s, t, label);
  }
  return g;
}

json morphism_to_json(const Morphism& m) {
  json nodes = json::object();
  for (size_t v = 0; v < m.node_map.size(); ++v)
    nodes[m.dom.node_id(static_cast<int>(v))] = m.cod.node_id(m.node_map[v]);
  json edges = json::object();
  for (size_t e = 0; e < m.edge_map.size(); ++e)
    edges[m.dom.edge_id(static_cast<int>(e))] = m.cod.edge_id(m.edge_map[e]);
  return {{"nodes", nodes}, {"edges", edges}};
}

Morphism morphism_from_json(const json& j, const Graph& dom, const Graph& cod,
                            const std::string& where) {
  require_keys(j, {"nodes", "edges"}, where);
  if (!j["nodes"].is_object() || !j["edges"].is_object())
    fail(where, "'nodes' and 'edges' must be objects");
  Morphism m{dom, cod, std::vector<int>(dom.node_count(), -1),
             std::vector<int>(dom.edge_count(), -1)};
  for (auto it = j["nodes"].begin(); it != j["nodes"].end(); ++it) {
    int v = dom.node_index(it.key());
    if (v < 0) fail(where, "map references unknown node '" + it.key() + "'");
    int w = cod.node_index(as_string(it.value(), where, "image of node '" + it.key() + "'"));
    if (w < 0) fail(where, "node '" + it.key() + "' maps to an unknown node");
    m.node_map[v] = w;
  }
  for (auto it = j["edges"].begin(); it != j["edges"].end(); ++it) {
    int e = dom.edge_index(it.key());
    if (e < 0) fail(where, "map references unknown edge '" + it.key() + "'");
    int f = cod.edge_index(as_string(it.value(), where, "image of edge '" + it.key() + "'"));
    if (f < 0) fail(where, "edge '" + it.key() + "' maps to an unknown edge");
    m.edge_map[e] = f;
  }
  for (int v = 0; v < dom.node_count(); ++v)
    if (m.node_map[v] < 0) fail(where, "node '" + dom.node_id(v) + "' has no image");
  for (int e = 0; e < dom.edge_count(); ++e)
    if (m.edge_map[e] < 0) fail(where, "edge '" + dom.edge_id(e) + "' has no image");
  return m;
}

json formula_to_json(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      return {{"op", "atom"}, {"graph", graph_to_json(f.graph())}};
    case Formula::Kind::negation:
      return {{"op", "not"}, {"args", json::array({formula_to_json(f.child())})}};
    case Formula::Kind::conjunction:
      return {{"op", "and"},
              {"args", json::array({formula_to_json(f.left()), formula_to_json(f.right())})}};
    case Formula::Kind::disjunction:
      return {{"op", "or"},
              {"args", json::array({formula_to_json(f.left()), formula_to_json(f.right())})}};
  }
  return {};
}

Formula formula_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "formula must be an object");
  if (!j.contains("op")) fail(where, "formula is missing 'op'");
  std::string op = as_string(j["op"], where, "'op'");
  if (op == "atom") {
    require_keys(j, {"op", "graph"}, where);
    return Formula::atom(graph_from_json(j["graph"], where));
  }
  require_keys(j, {"op", "args"}, where);
  if (!j["args"].is_array()) fail(where, "'args' must be an array");
  std::vector<Formula> args;
  for (const json& a : j["args"]) args.push_back(formula_from_json(a, where));
  if (op == "not") {
    if (args.size() != 1) fail(where, "'not' takes exactly one argument");
    return Formula::negation(std::move(args[0]));
  }
  if (op != "and" && op != "or") fail(where, "unknown operator '" + op + "'");
  if (args.size() < 2) fail(where, "'" + op + "' takes at least two arguments");
  try {
    Formula acc = std::move(args[0]);
    for (size_t i = 1; i < args.size(); ++i)
      acc = (op == "and") ? Formula::conjunction(std::move(acc), std::move(args[i]))
                          : Formula::disjunction(std::move(acc), std::move(args[i]));
    return acc;
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

namespace {

json mult_to_json(MultVal v) {
  if (v == kMany) return "m";
  return v;
}

MultVal mult_from_json(const json& j, int bound, const std::string& where,
                       const std::string& what) {
  if (j.is_string()) {
    if (j.get<std::string>() == "m") return kMany;
    fail(where, what + ": only \"m\" is a valid string value");
  }
  int v = as_int(j, where, what);
  if (v < 0 || v > bound) fail(where, what + ": value outside 0.." + std::to_string(bound));
  return v;
}

// One side of a pair: a map from item ids to values, defaulted elsewhere.
Annotation annotation_from_json(const json& j, const Graph& carrier, int bound, MultVal dflt,
                                const std::string& where, const std::string& what) {
  if (!j.is_object()) fail(where, what + " must be an object");
  Annotation a;
  a.bound = bound;
  a.node_values.assign(carrier.node_count(), dflt);
  a.edge_values.assign(carrier.edge_count(), dflt);
  for (auto it = j.begin(); it != j.end(); ++it) {
    MultVal v = mult_from_json(it.value(), bound, where, what + " at '" + it.key() + "'");
    int n = carrier.node_index(it.key());
    if (n >= 0) {
      a.node_values[n] = v;
      continue;
    }
    int e = carrier.edge_index(it.key());
    if (e >= 0) {
      a.edge_values[e] = v;
      continue;
    }
    fail(where, what + " references unknown item '" + it.key() + "'");
  }
  return a;
}

json annotation_to_json(const Annotation& a, const Graph& carrier) {
  json out = json::object();
  for (int v = 0; v < carrier.node_count(); ++v)
    out[carrier.node_id(v)] = mult_to_json(a.node_values[v]);
  for (int e = 0; e < carrier.edge_count(); ++e)
    out[carrier.edge_id(e)] = mult_to_json(a.edge_values[e]);
  return out;
}

}  // namespace

json atg_to_json(const MultiAnnotatedGraph& t) {
  json j = graph_to_json(t.graph);
  j["n"] = t.bound;
  json pairs = json::array();
  for (const AnnotationPair& p : t.pairs)
    pairs.push_back({{"lower", annotation_to_json(p.lower, t.graph)},
                     {"upper", annotation_to_json(p.upper, t.graph)}});
  j["pairs"] = pairs;
  return j;
}

MultiAnnotatedGraph atg_from_json(const json& j, const std::string& where) {
  require_keys(j, {"alphabet", "nodes", "edges", "n", "pairs"}, where);
  json graph_part = {{"alphabet", j["alphabet"]}, {"nodes", j["nodes"]}, {"edges", j["edges"]}};
  MultiAnnotatedGraph t;
  t.graph = graph_from_json(graph_part, where);
  // The pair maps key nodes and edges by one id namespace.
  for (int v = 0; v < t.graph.node_count(); ++v)
    if (t.graph.edge_index(t.graph.node_id(v)) >= 0)
      fail(where, "id '" + t.graph.node_id(v) + "' names both a node and an edge");
  t.bound = as_int(j["n"], where, "'n'");
  if (t.bound < 1) fail(where, "'n' must be at least 1");
  if (!j["pairs"].is_array()) fail(where, "'pairs' must be an array");
  for (size_t i = 0; i < j["pairs"].size(); ++i) {
    const json& p = j["pairs"][i];
    std::string pwhere = where + ", pair " + std::to_string(i);
    require_keys(p, {"lower", "upper"}, pwhere);
    Annotation lower =
        annotation_from_json(p["lower"], t.graph, t.bound, 0, pwhere, "'lower'");
    Annotation upper =
        annotation_from_json(p["upper"], t.graph, t.bound, kMany, pwhere, "'upper'");
    for (int v = 0; v < t.graph.node_count(); ++v)
      if (!mult_leq(lower.node_values[v], upper.node_values[v]))
        fail(pwhere, "lower exceeds upper at node '" + t.graph.node_id(v) + "'");
    for (int e = 0; e < t.graph.edge_count(); ++e)
      if (!mult_leq(lower.edge_values[e], upper.edge_values[e]))
        fail(pwhere, "lower exceeds upper at edge '" + t.graph.edge_id(e) + "'");
    t.pairs.push_back(AnnotationPair{std::move(lower), std::move(upper)});
  }
  return t;
}

json rule_to_json(const DpoRule& r) {
  return {{"left", graph_to_json(r.left)},
          {"interface", graph_to_json(r.interface)},
          {"right", graph_to_json(r.right)},
          {"phi_l", morphism_to_json(r.to_left)},
          {"phi_r", morphism_to_json(r.to_right)}};
}

DpoRule rule_from_json(const json& j, const std::string& where) {
  require_keys(j, {"left", "interface", "right", "phi_l", "phi_r"}, where);
  DpoRule r;
  r.left = graph_from_json(j["left"], where + ", left");
  r.interface = graph_from_json(j["interface"], where + ", interface");
  r.right = graph_from_json(j["right"], where + ", right");
  r.to_left = morphism_from_json(j["phi_l"], r.interface, r.left, where + ", phi_l");
  r.to_right = morphism_from_json(j["phi_r"], r.interface, r.right, where + ", phi_r");
  try {
    validate_rule(r);
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
  return r;
}

json word_to_json(const OpWord& w) {
  json out = json::array();
  for (const AtomicOp& op : w) {
    switch (op.kind) {
      case AtomicOp::Kind::add_node:
        out.push_back({{"op", "addnode"}});
        break;
      case AtomicOp::Kind::add_edge:
        out.push_back({{"op", "addedge"}, {"src", op.src}, {"tgt", op.tgt}, {"label", op.label}});
        break;
      case AtomicOp::Kind::remove_node:
        out.push_back({{"op", "removenode"}, {"index", op.index}});
        break;
    }
  }
  return out;
}

OpWord word_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "word must be an array");
  OpWord w;
  for (size_t i = 0; i < j.size(); ++i) {
    const json& o = j[i];
    std::string owhere = where + ", op " + std::to_string(i);
    if (!o.is_object() || !o.contains("op")) fail(owhere, "expected an object with 'op'");
    std::string op = as_string(o["op"], owhere, "'op'");
    if (op == "addnode") {
      require_keys(o, {"op"}, owhere);
      w.push_back(add_node_op());
    } else if (op == "addedge") {
      require_keys(o, {"op", "src", "tgt", "label"}, owhere);
      w.push_back(add_edge_op(as_int(o["src"], owhere, "'src'"), as_int(o["tgt"], owhere, "'tgt'"),
                              as_string(o["label"], owhere, "'label'")));
    } else if (op == "removenode") {
      require_keys(o, {"op", "index"}, owhere);
      w.push_back(remove_node_op(as_int(o["index"], owhere, "'index'")));
    } else {
      fail(owhere, "unknown op '" + op + "'");
    }
  }
  return w;
}

}  // namespace tglab

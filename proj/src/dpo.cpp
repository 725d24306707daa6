#include "tglab/dpo.hpp"

#include <algorithm>
#include <stdexcept>

#include "tglab/core.hpp"
#include "tglab/graph_ops.hpp"
#include "tglab/hom.hpp"

namespace tglab {

void validate_rule(const DpoRule& rule) {
  if (!(rule.to_left.dom == rule.interface) || !(rule.to_left.cod == rule.left) ||
      !(rule.to_right.dom == rule.interface) || !(rule.to_right.cod == rule.right))
    throw std::invalid_argument("rule: morphisms are not wired interface->left/right");
  if (!is_valid_morphism(rule.to_left) || !is_valid_morphism(rule.to_right))
    throw std::invalid_argument("rule: invalid rule morphism");
  if (!(rule.left.alphabet() == rule.interface.alphabet()) ||
      !(rule.left.alphabet() == rule.right.alphabet()))
    throw std::invalid_argument("rule: alphabet mismatch across the rule graphs");
}

std::vector<PushoutComplement> pushout_complements(const Morphism& phi, const Morphism& match) {
  if (!is_valid_morphism(phi) || !is_valid_morphism(match))
    throw std::invalid_argument("pushout_complement: invalid input morphism");
  if (!(phi.cod == match.dom))
    throw std::invalid_argument("pushout_complement: match domain must be phi's codomain");
  if (!injective(phi))
    throw std::invalid_argument("pushout_complement: non-injective rule-side morphisms are not supported");

  const Graph& l = phi.cod;
  const Graph& g = match.cod;

  std::vector<bool> node_kept(l.node_count(), false);
  std::vector<bool> edge_kept(l.edge_count(), false);
  for (int v : phi.node_map) node_kept[v] = true;
  for (int e : phi.edge_map) edge_kept[e] = true;

  // Identification condition: a deleted item may not share its image with
  // any other item.
  std::vector<int> node_hits(g.node_count(), 0);
  std::vector<int> edge_hits(g.edge_count(), 0);
  for (int m : match.node_map) ++node_hits[m];
  for (int m : match.edge_map) ++edge_hits[m];
  std::vector<bool> g_node_deleted(g.node_count(), false);
  std::vector<bool> g_edge_deleted(g.edge_count(), false);
  for (int v = 0; v < l.node_count(); ++v)
    if (!node_kept[v]) {
      if (node_hits[match.node_map[v]] > 1) return {};
      g_node_deleted[match.node_map[v]] = true;
    }
  for (int e = 0; e < l.edge_count(); ++e)
    if (!edge_kept[e]) {
      if (edge_hits[match.edge_map[e]] > 1) return {};
      g_edge_deleted[match.edge_map[e]] = true;
    }

  // Dangling condition: surviving edges may not touch a deleted node.
  for (int e = 0; e < g.edge_count(); ++e)
    if (!g_edge_deleted[e] &&
        (g_node_deleted[g.edge(e).src] || g_node_deleted[g.edge(e).tgt]))
      return {};

  std::vector<int> nodes, edges;
  for (int v = 0; v < g.node_count(); ++v)
    if (!g_node_deleted[v]) nodes.push_back(v);
  for (int e = 0; e < g.edge_count(); ++e)
    if (!g_edge_deleted[e]) edges.push_back(e);
  Graph context = subgraph(g, nodes, edges);

  Morphism from_interface{phi.dom, context, {}, {}};
  for (size_t i = 0; i < phi.node_map.size(); ++i)
    from_interface.node_map.push_back(
        context.node_index(g.node_id(match.node_map[phi.node_map[i]])));
  for (size_t i = 0; i < phi.edge_map.size(); ++i)
    from_interface.edge_map.push_back(
        context.edge_index(g.edge_id(match.edge_map[phi.edge_map[i]])));

  Morphism into_whole{context, g, {}, {}};
  for (int v = 0; v < context.node_count(); ++v)
    into_whole.node_map.push_back(g.node_index(context.node_id(v)));
  for (int e = 0; e < context.edge_count(); ++e)
    into_whole.edge_map.push_back(g.edge_index(context.edge_id(e)));

  return {PushoutComplement{std::move(context), std::move(from_interface), std::move(into_whole)}};
}

std::vector<Graph> apply_rule(const Graph& g, const DpoRule& rule, Direction dir,
                              const Morphism& match) {
  validate_rule(rule);
  const Morphism& deleting = (dir == Direction::forward) ? rule.to_left : rule.to_right;
  const Morphism& inserting = (dir == Direction::forward) ? rule.to_right : rule.to_left;
  if (!(match.dom == deleting.cod) || !(match.cod == g))
    throw std::invalid_argument("apply_rule: match is not wired rule side -> graph");
  MorphismCheck mc = check_morphism(match);
  if (!mc.valid) throw std::invalid_argument("apply_rule: invalid match (" + mc.detail + ")");

  std::vector<Graph> results;
  for (const PushoutComplement& pc : pushout_complements(deleting, match))
    results.push_back(pushout(inserting, pc.from_interface).graph);
  return results;
}

namespace {

// Enumerates restricted-growth strings; assign(i, class) must say whether
// item i may join that class.
void for_each_partition(int n, const std::function<bool(int, int, const std::vector<int>&)>& may,
                        const std::function<void(const std::vector<int>&)>& done) {
  std::vector<int> cls(n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      done(cls);
      return;
    }
    for (int c = 0; c <= used && c < n; ++c) {
      if (!may(i, c, cls)) continue;
      cls[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  if (n == 0)
    done(cls);
  else
    rec(0, 0);
}

}  // namespace

std::vector<JointQuotient> enumerate_jointly_surjective(const Graph& first,
                                                        const Graph& second) {
  if (!(first.alphabet() == second.alphabet()))
    throw std::invalid_argument("enumerate_jointly_surjective: alphabet mismatch");
  CoproductResult cp = coproduct(first, second);
  const Graph& u = cp.graph;
  std::vector<JointQuotient> out;

  for_each_partition(
      u.node_count(), [](int, int, const std::vector<int>&) { return true; },
      [&](const std::vector<int>& node_cls) {
        // Edges may merge only when labels and endpoint classes agree; the
        // first edge of each class is its representative.
        auto may_join = [&](int e, int c, const std::vector<int>& cls) {
          int first_in_c = -1;
          for (int i = 0; i < e; ++i)
            if (cls[i] == c) {
              first_in_c = i;
              break;
            }
          if (first_in_c < 0) return true;  // fresh class
          const Edge& a = u.edge(e);
          const Edge& b = u.edge(first_in_c);
          return u.edge_label(e) == u.edge_label(first_in_c) &&
                 node_cls[a.src] == node_cls[b.src] && node_cls[a.tgt] == node_cls[b.tgt];
        };
        for_each_partition(u.edge_count(), may_join, [&](const std::vector<int>& edge_cls) {
          Graph f(u.alphabet());
          int node_classes = u.node_count() == 0
                                 ? 0
                                 : *std::max_element(node_cls.begin(), node_cls.end()) + 1;
          for (int c = 0; c < node_classes; ++c) f.add_node();
          int edge_classes = u.edge_count() == 0
                                 ? 0
                                 : *std::max_element(edge_cls.begin(), edge_cls.end()) + 1;
          std::vector<int> edge_of_class(edge_classes, -1);
          for (int c = 0; c < edge_classes; ++c) {
            for (int e = 0; e < u.edge_count(); ++e)
              if (edge_cls[e] == c) {
                edge_of_class[c] =
                    f.add_edge(node_cls[u.edge(e).src], node_cls[u.edge(e).tgt], u.edge_label(e));
                break;
              }
          }
          Morphism quot{u, f, node_cls, {}};
          quot.edge_map.reserve(u.edge_count());
          for (int e = 0; e < u.edge_count(); ++e)
            quot.edge_map.push_back(edge_of_class[edge_cls[e]]);
          out.push_back(JointQuotient{f, compose(quot, cp.inj1), compose(quot, cp.inj2)});
        });
      });
  return out;
}

RgClosureVerdict rg_closed_under_rule(const RestrictionGraphSpec& s, const DpoRule& rule) {
  validate_rule(rule);
  for (const JointQuotient& jq : enumerate_jointly_surjective(rule.right, s.restriction_graph)) {
    for (const Graph& e : apply_rule(jq.graph, rule, Direction::backward, jq.from_first))
      if (!hom_exists(s.restriction_graph, e)) return {false, jq.graph, e};
  }
  return {true, std::nullopt, std::nullopt};
}

std::optional<Morphism> find_unextendable_match(const Graph& target, const DpoRule& rule) {
  validate_rule(rule);
  std::vector<Morphism> right_homs = enumerate_homs(rule.right, target);
  std::vector<Morphism> right_composed;
  right_composed.reserve(right_homs.size());
  for (const Morphism& tr : right_homs) right_composed.push_back(compose(tr, rule.to_right));

  std::optional<Morphism> uncovered;
  for_each_hom(rule.left, target, [&](const std::vector<int>& nm, const std::vector<int>& em) {
    Morphism tl{rule.left, target, nm, em};
    Morphism via_left = compose(tl, rule.to_left);
    for (const Morphism& via_right : right_composed)
      if (via_right.node_map == via_left.node_map && via_right.edge_map == via_left.edge_map)
        return true;
    uncovered = std::move(tl);
    return false;
  });
  return uncovered;
}

TgClosureVerdict tg_closed_under_rule(const TypeGraphSpec& t, const DpoRule& rule) {
  Graph k = core(t.type_graph).core;
  if (auto gap = find_unextendable_match(k, rule)) return {false, std::move(gap)};
  return {true, std::nullopt};
}

ClosureOracleResult closure_oracle(const std::function<bool(const Graph&)>& member,
                                   const DpoRule& rule, const GraphUniverse& u) {
  validate_rule(rule);
  for (const Graph& g : enumerate_graphs(u)) {
    if (!member(g)) continue;
    for (const Morphism& m : enumerate_homs(rule.left, g))
      for (const Graph& h : apply_rule(g, rule, Direction::forward, m))
        if (!member(h)) return {true, g, h};
  }
  return {false, std::nullopt, std::nullopt};
}

}  // namespace tglab

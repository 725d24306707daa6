#include "tglab/annot.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tglab/graph_ops.hpp"
#include "tglab/hom.hpp"

namespace tglab {

bool mult_leq(MultVal a, MultVal b) {
  if (b == kMany) return true;
  if (a == kMany) return false;
  return a <= b;
}

MultVal mult_add(MultVal a, MultVal b, int bound) {
  if (a == kMany || b == kMany) return kMany;
  int s = a + b;
  return s > bound ? kMany : s;
}

MultVal mult_join(MultVal a, MultVal b) { return mult_leq(a, b) ? b : a; }
MultVal mult_meet(MultVal a, MultVal b) { return mult_leq(a, b) ? a : b; }

Multiplicity m_add(const Multiplicity& a, const Multiplicity& b) {
  if (a.bound != b.bound) throw std::invalid_argument("m_add: mixed bounds");
  return {a.bound, mult_add(a.value, b.value, a.bound)};
}

bool m_leq(const Multiplicity& a, const Multiplicity& b) {
  if (a.bound != b.bound) throw std::invalid_argument("m_leq: mixed bounds");
  return mult_leq(a.value, b.value);
}

namespace {

void require_carrier(const Annotation& a, const Graph& carrier, const char* op) {
  if (static_cast<int>(a.node_values.size()) != carrier.node_count() ||
      static_cast<int>(a.edge_values.size()) != carrier.edge_count())
    throw std::invalid_argument(std::string(op) + ": carrier mismatch");
}

void require_same_bound(int a, int b, const char* op) {
  if (a != b) throw std::invalid_argument(std::string(op) + ": mixed bounds");
}

Annotation constant_annotation(const Graph& carrier, int bound, MultVal v) {
  if (bound < 1) throw std::invalid_argument("annotation: bound must be at least 1");
  Annotation a;
  a.bound = bound;
  a.node_values.assign(carrier.node_count(), v);
  a.edge_values.assign(carrier.edge_count(), v);
  return a;
}

}  // namespace

Annotation zero_annotation(const Graph& carrier, int bound) {
  return constant_annotation(carrier, bound, 0);
}

Annotation standard_annotation(const Graph& carrier, int bound) {
  return constant_annotation(carrier, bound, 1);
}

bool ann_leq(const Annotation& a, const Annotation& b) {
  require_same_bound(a.bound, b.bound, "ann_leq");
  if (a.node_values.size() != b.node_values.size() ||
      a.edge_values.size() != b.edge_values.size())
    throw std::invalid_argument("ann_leq: carrier mismatch");
  for (size_t i = 0; i < a.node_values.size(); ++i)
    if (!mult_leq(a.node_values[i], b.node_values[i])) return false;
  for (size_t i = 0; i < a.edge_values.size(); ++i)
    if (!mult_leq(a.edge_values[i], b.edge_values[i])) return false;
  return true;
}

namespace {

Annotation pointwise(const Annotation& a, const Annotation& b, MultVal (*op)(MultVal, MultVal),
                     const char* name) {
  require_same_bound(a.bound, b.bound, name);
  if (a.node_values.size() != b.node_values.size() ||
      a.edge_values.size() != b.edge_values.size())
    throw std::invalid_argument(std::string(name) + ": carrier mismatch");
  Annotation r = a;
  for (size_t i = 0; i < r.node_values.size(); ++i)
    r.node_values[i] = op(a.node_values[i], b.node_values[i]);
  for (size_t i = 0; i < r.edge_values.size(); ++i)
    r.edge_values[i] = op(a.edge_values[i], b.edge_values[i]);
  return r;
}

}  // namespace

Annotation ann_join(const Annotation& a, const Annotation& b) {
  return pointwise(a, b, &mult_join, "ann_join");
}

Annotation ann_meet(const Annotation& a, const Annotation& b) {
  return pointwise(a, b, &mult_meet, "ann_meet");
}

Annotation push_annotation(const Morphism& phi, const Annotation& a) {
  require_carrier(a, phi.dom, "push_annotation");
  Annotation r = zero_annotation(phi.cod, a.bound);
  for (size_t v = 0; v < phi.node_map.size(); ++v)
    r.node_values[phi.node_map[v]] =
        mult_add(r.node_values[phi.node_map[v]], a.node_values[v], a.bound);
  for (size_t e = 0; e < phi.edge_map.size(); ++e)
    r.edge_values[phi.edge_map[e]] =
        mult_add(r.edge_values[phi.edge_map[e]], a.edge_values[e], a.bound);
  return r;
}

Annotation reduce_annotation(const Morphism& phi, const Annotation& on_cod) {
  require_carrier(on_cod, phi.cod, "reduce_annotation");
  Annotation r;
  r.bound = on_cod.bound;
  r.node_values.reserve(phi.node_map.size());
  r.edge_values.reserve(phi.edge_map.size());
  // Per item x the join over feasible annotations is attained by the one
  // concentrated at x, so the reduced value is just the value at phi(x).
  for (int v : phi.node_map) r.node_values.push_back(on_cod.node_values.at(v));
  for (int e : phi.edge_map) r.edge_values.push_back(on_cod.edge_values.at(e));
  return r;
}

AnnotationPair make_pair_checked(Annotation lower, Annotation upper) {
  if (!ann_leq(lower, upper))
    throw std::invalid_argument("annotation pair: lower exceeds upper");
  return {std::move(lower), std::move(upper)};
}

bool is_legal(const Morphism& phi, const MultiAnnotatedGraph& source,
              const MultiAnnotatedGraph& target) {
  require_same_bound(source.bound, target.bound, "is_legal");
  if (!(phi.dom == source.graph) || !(phi.cod == target.graph))
    throw std::invalid_argument("is_legal: carrier mismatch");
  for (const AnnotationPair& p : source.pairs) {
    Annotation lo = push_annotation(phi, p.lower);
    Annotation hi = push_annotation(phi, p.upper);
    bool covered = false;
    for (const AnnotationPair& q : target.pairs)
      if (ann_leq(q.lower, lo) && ann_leq(hi, q.upper)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

std::optional<Morphism> atg_membership(const Graph& g, const MultiAnnotatedGraph& t) {
  if (!(g.alphabet() == t.graph.alphabet()))
    throw std::invalid_argument("atg_member: alphabet mismatch");
  Annotation std_g = standard_annotation(g, t.bound);
  std::optional<Morphism> witness;
  for_each_hom(g, t.graph, [&](const std::vector<int>& nm, const std::vector<int>& em) {
    Morphism phi{g, t.graph, nm, em};
    Annotation pushed = push_annotation(phi, std_g);
    for (const AnnotationPair& p : t.pairs)
      if (ann_leq(p.lower, pushed) && ann_leq(pushed, p.upper)) {
        witness = std::move(phi);
        return false;
      }
    return true;
  });
  return witness;
}

bool atg_member(const Graph& g, const MultiAnnotatedGraph& t) {
  return atg_membership(g, t).has_value();
}

namespace {

bool pair_blocked(const Graph& g, const AnnotationPair& p) {
  for (int e = 0; e < g.edge_count(); ++e) {
    if (p.lower.edge_values[e] == 0) continue;  // only lower >= 1 forces the edge
    const Edge& ed = g.edge(e);
    if (p.upper.node_values[ed.src] == 0 || p.upper.node_values[ed.tgt] == 0) return true;
  }
  return false;
}

}  // namespace

bool atg_empty(const MultiAnnotatedGraph& t) {
  for (const AnnotationPair& p : t.pairs)
    if (!pair_blocked(t.graph, p)) return false;
  return true;
}

std::optional<Graph> atg_nonempty_witness(const MultiAnnotatedGraph& t) {
  for (const AnnotationPair& p : t.pairs) {
    if (pair_blocked(t.graph, p)) continue;

    // Drop items with upper bound 0, then realize the remaining lower
    // bounds: k copies of each edge, k-1 extra isolated nodes per node
    // (many counts as bound+1).
    std::vector<int> nodes, edges;
    for (int v = 0; v < t.graph.node_count(); ++v)
      if (p.upper.node_values[v] != 0) nodes.push_back(v);
    for (int e = 0; e < t.graph.edge_count(); ++e) {
      const Edge& ed = t.graph.edge(e);
      if (p.upper.edge_values[e] != 0 && p.upper.node_values[ed.src] != 0 &&
          p.upper.node_values[ed.tgt] != 0)
        edges.push_back(e);
    }
    auto realized = [&](MultVal lower) { return lower == kMany ? t.bound + 1 : lower; };

    Graph g(t.graph.alphabet());
    std::vector<int> first_copy(t.graph.node_count(), -1);
    for (int v : nodes) {
      first_copy[v] = g.add_node(t.graph.node_id(v));
      for (int extra = 1; extra < realized(p.lower.node_values[v]); ++extra)
        g.add_node(t.graph.node_id(v) + "+" + std::to_string(extra));
    }
    for (int e : edges) {
      const Edge& ed = t.graph.edge(e);
      for (int copy = 0; copy < realized(p.lower.edge_values[e]); ++copy)
        g.add_edge(t.graph.edge_id(e) + "+" + std::to_string(copy), first_copy[ed.src],
                   first_copy[ed.tgt], t.graph.edge_label(e));
    }
    return g;
  }
  return std::nullopt;
}

SufficientInclusion atg_inclusion_sufficient(const MultiAnnotatedGraph& t1,
                                             const MultiAnnotatedGraph& t2) {
  if (!(t1.graph.alphabet() == t2.graph.alphabet()))
    throw std::invalid_argument("atg_inclusion_sufficient: alphabet mismatch");
  require_same_bound(t1.bound, t2.bound, "atg_inclusion_sufficient");
  SufficientInclusion out;
  for_each_hom(t1.graph, t2.graph, [&](const std::vector<int>& nm, const std::vector<int>& em) {
    Morphism phi{t1.graph, t2.graph, nm, em};
    if (is_legal(phi, t1, t2)) {
      out = {InclusionHint::included, std::move(phi)};
      return false;
    }
    return true;
  });
  return out;
}

namespace {

// Odometer over all annotations of a carrier with values in {0..n, many}.
struct AnnotationSpace {
  int bound;
  int items;
  explicit AnnotationSpace(const Graph& carrier, int bound_)
      : bound(bound_), items(carrier.node_count() + carrier.edge_count()) {}

  double size() const {
    double s = 1;
    for (int i = 0; i < items; ++i) s *= bound + 2;
    return s;
  }

  bool next(std::vector<MultVal>& vals) const {
    for (int i = 0; i < items; ++i) {
      if (vals[i] == kMany) {
        vals[i] = 0;
        continue;
      }
      vals[i] = (vals[i] == bound) ? kMany : vals[i] + 1;
      return true;
    }
    return false;
  }
};

Annotation from_flat(const Graph& carrier, int bound, const std::vector<MultVal>& vals) {
  Annotation a;
  a.bound = bound;
  a.node_values.assign(vals.begin(), vals.begin() + carrier.node_count());
  a.edge_values.assign(vals.begin() + carrier.node_count(), vals.end());
  return a;
}

// Keeps the minimal (or maximal) elements of a pointwise-ordered set.
std::vector<Annotation> antichain(std::vector<Annotation> xs, bool minimal) {
  std::stable_sort(xs.begin(), xs.end(), [&](const Annotation& a, const Annotation& b) {
    auto weight = [](const Annotation& x) {
      long s = 0;
      for (MultVal v : x.node_values) s += (v == kMany) ? x.bound + 1 : v;
      for (MultVal v : x.edge_values) s += (v == kMany) ? x.bound + 1 : v;
      return s;
    };
    long wa = weight(a), wb = weight(b);
    return minimal ? wa < wb : wa > wb;
  });
  std::vector<Annotation> kept;
  for (const Annotation& x : xs) {
    bool dominated = false;
    for (const Annotation& k : kept)
      if (minimal ? ann_leq(k, x) : ann_leq(x, k)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(x);
  }
  return kept;
}

}  // namespace

MultiAnnotatedGraph atg_intersect(const MultiAnnotatedGraph& t1, const MultiAnnotatedGraph& t2) {
  if (!(t1.graph.alphabet() == t2.graph.alphabet()))
    throw std::invalid_argument("atg_intersect: alphabet mismatch");
  require_same_bound(t1.bound, t2.bound, "atg_intersect");

  ProductResult prod = product(t1.graph, t2.graph);
  MultiAnnotatedGraph out{prod.graph, t1.bound, {}};

  AnnotationSpace space(prod.graph, t1.bound);
  if (space.size() > 2e6)
    throw std::invalid_argument("atg_intersect: annotation space too large");

  // Push both projections once per candidate annotation.
  struct Pushed {
    Annotation a, via1, via2;
  };
  std::vector<Pushed> all;
  std::vector<MultVal> flat(space.items, 0);
  for (bool more = true; more; more = space.next(flat)) {
    Annotation a = from_flat(prod.graph, t1.bound, flat);
    all.push_back({a, push_annotation(prod.proj1, a), push_annotation(prod.proj2, a)});
  }

  std::set<std::pair<std::vector<MultVal>, std::vector<MultVal>>> seen;
  auto flat_of = [](const Annotation& a) {
    std::vector<MultVal> f = a.node_values;
    f.insert(f.end(), a.edge_values.begin(), a.edge_values.end());
    return f;
  };
  for (const AnnotationPair& p1 : t1.pairs)
    for (const AnnotationPair& p2 : t2.pairs) {
      std::vector<Annotation> lows, ups;
      for (const Pushed& c : all) {
        if (ann_leq(p1.lower, c.via1) && ann_leq(p2.lower, c.via2)) lows.push_back(c.a);
        if (ann_leq(c.via1, p1.upper) && ann_leq(c.via2, p2.upper)) ups.push_back(c.a);
      }
      std::vector<Annotation> min_lows = antichain(std::move(lows), true);
      std::vector<Annotation> max_ups = antichain(std::move(ups), false);
      for (const Annotation& lo : min_lows)
        for (const Annotation& hi : max_ups) {
          if (!ann_leq(lo, hi)) continue;
          if (seen.insert({flat_of(lo), flat_of(hi)}).second)
            out.pairs.push_back(AnnotationPair{lo, hi});
        }
    }
  return out;
}

MultiAnnotatedGraph atg_union(const MultiAnnotatedGraph& t1, const MultiAnnotatedGraph& t2) {
  if (!(t1.graph.alphabet() == t2.graph.alphabet()))
    throw std::invalid_argument("atg_union: alphabet mismatch");
  require_same_bound(t1.bound, t2.bound, "atg_union");

  CoproductResult cp = coproduct(t1.graph, t2.graph);
  MultiAnnotatedGraph out{cp.graph, t1.bound, {}};
  for (const AnnotationPair& p : t1.pairs)
    out.pairs.push_back(AnnotationPair{push_annotation(cp.inj1, p.lower),
                                       push_annotation(cp.inj1, p.upper)});
  for (const AnnotationPair& p : t2.pairs)
    out.pairs.push_back(AnnotationPair{push_annotation(cp.inj2, p.lower),
                                       push_annotation(cp.inj2, p.upper)});
  return out;
}

MultiAnnotatedGraph atg_simplify(const MultiAnnotatedGraph& t) {
  MultiAnnotatedGraph out{t.graph, t.bound, {}};
  for (size_t i = 0; i < t.pairs.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < t.pairs.size() && !dominated; ++j) {
      if (i == j) continue;
      bool wider = ann_leq(t.pairs[j].lower, t.pairs[i].lower) &&
                   ann_leq(t.pairs[i].upper, t.pairs[j].upper);
      // Of two identical pairs keep the first.
      bool same = t.pairs[i] == t.pairs[j];
      if (wider && (!same || j < i)) dominated = true;
    }
    if (!dominated) out.pairs.push_back(t.pairs[i]);
  }
  return out;
}

}  // namespace tglab

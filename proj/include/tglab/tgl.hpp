#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "tglab/graph.hpp"

namespace tglab {

/// Boolean formula whose atoms are type graphs. Immutable, cheaply
/// copyable (shared AST).
class Formula {
 public:
  enum class Kind { atom, conjunction, disjunction, negation };

  static Formula atom(Graph type_graph);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula negation(Formula f);

  Kind kind() const;
  const Graph& graph() const;  // atom only
  Formula left() const;        // conjunction/disjunction
  Formula right() const;       // conjunction/disjunction
  Formula child() const;       // negation

  int depth() const;
  /// Alphabet of the first atom; every atom must share it.
  const Alphabet& alphabet() const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// One disjunct of the normal form: a single positive type graph (folded
/// product, flower-augmented) plus negated type graphs.
struct DnfConjunct {
  Graph positive;
  std::vector<Graph> negatives;
};

struct DnfFormula {
  std::vector<DnfConjunct> conjuncts;  // empty disjunction denotes the empty language
};

inline constexpr int kMaxFormulaDepth = 16;

bool tgl_member(const Graph& g, const Formula& f);

/// Disjunctive normal form with the same language; every conjunct's
/// positives are folded into one type graph via the product, seeded with
/// the flower graph so a positive is always present. Rejects formulas
/// deeper than kMaxFormulaDepth.
DnfFormula tgl_to_dnf(const Formula& f);

bool dnf_member(const Graph& g, const DnfFormula& d);

struct TglEmptiness {
  bool empty = false;
  std::optional<Graph> witness;  // member graph when non-empty
};
TglEmptiness tgl_empty(const Formula& f);

struct TglInclusion {
  bool included = false;
  std::optional<Graph> counterexample;  // in L(f1) \ L(f2) when not included
};
TglInclusion tgl_included(const Formula& f1, const Formula& f2);

}  // namespace tglab

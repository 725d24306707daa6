#pragma once

#include <optional>
#include <vector>

#include "tglab/graph.hpp"

namespace tglab {

/// Encoded value of the saturating counter chain 0 <= 1 <= ... <= n <= many.
/// The bound n is carried by the surrounding structure.
using MultVal = int;
inline constexpr MultVal kMany = -1;

bool mult_leq(MultVal a, MultVal b);
MultVal mult_add(MultVal a, MultVal b, int bound);  // saturates past the bound
MultVal mult_join(MultVal a, MultVal b);
MultVal mult_meet(MultVal a, MultVal b);

/// Value with its bound attached; addition of values with different bounds
/// is rejected.
struct Multiplicity {
  int bound = 1;
  MultVal value = 0;

  static Multiplicity many(int bound) { return {bound, kMany}; }
  bool operator==(const Multiplicity&) const = default;
};

Multiplicity m_add(const Multiplicity& a, const Multiplicity& b);
bool m_leq(const Multiplicity& a, const Multiplicity& b);

/// Counter per node and edge of a carrier graph. The carrier is implicit;
/// the vectors must match its item counts.
struct Annotation {
  int bound = 1;
  std::vector<MultVal> node_values;
  std::vector<MultVal> edge_values;

  bool operator==(const Annotation&) const = default;
};

Annotation zero_annotation(const Graph& carrier, int bound);
/// Maps every node and edge to 1.
Annotation standard_annotation(const Graph& carrier, int bound);

bool ann_leq(const Annotation& a, const Annotation& b);
Annotation ann_join(const Annotation& a, const Annotation& b);
Annotation ann_meet(const Annotation& a, const Annotation& b);

/// Transports an annotation forward along a morphism: each codomain item
/// receives the saturating sum over its preimage (0 when empty).
Annotation push_annotation(const Morphism& phi, const Annotation& a);

/// Transports an annotation backward: the join of all annotations whose
/// push is below the given one. For the counter chain this evaluates
/// per item to the value at the image, so an injective phi recovers
/// exactly what push_annotation produced.
Annotation reduce_annotation(const Morphism& phi, const Annotation& on_cod);

/// Lower/upper bound pair over one carrier; lower <= upper is enforced.
struct AnnotationPair {
  Annotation lower;
  Annotation upper;

  bool operator==(const AnnotationPair&) const = default;
};

AnnotationPair make_pair_checked(Annotation lower, Annotation upper);

/// Type graph with a finite set of bound pairs. An empty pair set denotes
/// the empty language.
struct MultiAnnotatedGraph {
  Graph graph;
  int bound = 1;  // the chain parameter n
  std::vector<AnnotationPair> pairs;
};

/// Every source pair must fit inside some target pair after pushing:
/// pushed lower dominates the target lower, pushed upper stays below the
/// target upper.
bool is_legal(const Morphism& phi, const MultiAnnotatedGraph& source,
              const MultiAnnotatedGraph& target);

/// Membership: some morphism G -> T pushes the standard annotation of G
/// inside some pair of T.
std::optional<Morphism> atg_membership(const Graph& g, const MultiAnnotatedGraph& t);
bool atg_member(const Graph& g, const MultiAnnotatedGraph& t);

/// Exact emptiness: empty iff there are no pairs, or every pair forces an
/// edge whose source or target node is forbidden.
bool atg_empty(const MultiAnnotatedGraph& t);

/// Member graph realizing the lower bounds of some satisfiable pair;
/// nullopt iff the language is empty.
std::optional<Graph> atg_nonempty_witness(const MultiAnnotatedGraph& t);

enum class InclusionHint { included, unknown };

struct SufficientInclusion {
  InclusionHint verdict = InclusionHint::unknown;
  std::optional<Morphism> witness;  // legal morphism when included
};

/// One-sided inclusion test: a legal morphism T1 -> T2 proves inclusion,
/// its absence proves nothing.
SufficientInclusion atg_inclusion_sufficient(const MultiAnnotatedGraph& t1,
                                             const MultiAnnotatedGraph& t2);

/// Language intersection over the product carrier. The pair set is the
/// language-equivalent antichain core of all pairs that keep both
/// projections legal: minimal feasible lowers crossed with maximal
/// feasible uppers, per source pair combination.
MultiAnnotatedGraph atg_intersect(const MultiAnnotatedGraph& t1, const MultiAnnotatedGraph& t2);

/// Language union over the coproduct carrier; pairs are transported along
/// the injections, items outside the image get [0,0].
MultiAnnotatedGraph atg_union(const MultiAnnotatedGraph& t1, const MultiAnnotatedGraph& t2);

/// Drops pairs whose bound interval lies inside another pair's interval.
/// Language-preserving; never applied implicitly.
MultiAnnotatedGraph atg_simplify(const MultiAnnotatedGraph& t);

}  // namespace tglab

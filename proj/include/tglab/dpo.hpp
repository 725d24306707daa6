#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "tglab/graph.hpp"
#include "tglab/lang.hpp"
#include "tglab/universe.hpp"

namespace tglab {

/// Rewriting rule left <- interface -> right. The closure checkers require
/// both rule morphisms to be injective; matches stay arbitrary.
struct DpoRule {
  Graph left;
  Graph interface;
  Graph right;
  Morphism to_left;   // interface -> left
  Morphism to_right;  // interface -> right
};

/// Throws std::invalid_argument when the morphisms are invalid, mis-wired,
/// or the three graphs do not share one alphabet.
void validate_rule(const DpoRule& rule);

struct PushoutComplement {
  Graph context;
  Morphism from_interface;  // interface -> context
  Morphism into_whole;      // context -> whole
};

/// All context graphs completing the square over phi : I -> L and
/// match : L -> G, i.e. pushout(phi, from_interface) gives back G. For
/// injective phi there is at most one, and none when the gluing conditions
/// (identification, dangling) fail. Non-injective phi is rejected.
std::vector<PushoutComplement> pushout_complements(const Morphism& phi, const Morphism& match);

enum class Direction { forward, backward };

/// All rewrite results for the given (co-)match: forward takes a match of
/// the left side, backward a co-match of the right side.
std::vector<Graph> apply_rule(const Graph& g, const DpoRule& rule, Direction dir,
                              const Morphism& match);

struct JointQuotient {
  Graph graph;           // F
  Morphism from_first;   // first -> F
  Morphism from_second;  // second -> F
};

/// Every jointly surjective morphism pair out of the two graphs, one per
/// compatible quotient of their disjoint union (node partition, then edge
/// partition respecting labels and endpoint classes). Deterministic order.
std::vector<JointQuotient> enumerate_jointly_surjective(const Graph& first, const Graph& second);

struct RgClosureVerdict {
  bool closed = false;
  std::optional<Graph> merged;       // violating F
  std::optional<Graph> predecessor;  // its backward-rewrite result E without the restriction image
};

/// Exact closure of a restriction graph language under a rule: every
/// jointly surjective overlap of the rule's right side with the
/// restriction graph, rewritten backwards, must still contain an image of
/// the restriction graph.
RgClosureVerdict rg_closed_under_rule(const RestrictionGraphSpec& s, const DpoRule& rule);

/// First morphism of the rule's left side into `target` that admits no
/// commuting extension of the right side; nullopt when every one extends.
std::optional<Morphism> find_unextendable_match(const Graph& target, const DpoRule& rule);

struct TgClosureVerdict {
  bool closed = false;
  std::optional<Morphism> uncovered;  // left-side morphism with no extension
};

/// Exact closure of a type graph language under a rule, decided against the
/// core of the type graph (checking against the type graph itself is
/// strictly stronger and wrong).
TgClosureVerdict tg_closed_under_rule(const TypeGraphSpec& t, const DpoRule& rule);

struct ClosureOracleResult {
  bool violation_found = false;
  std::optional<Graph> before;
  std::optional<Graph> after;
};

/// Bounded simulation: rewrites every member of the universe in every
/// possible way and reports the first result that leaves the language.
ClosureOracleResult closure_oracle(const std::function<bool(const Graph&)>& member,
                                   const DpoRule& rule, const GraphUniverse& u);

}  // namespace tglab

#include "tglab/tgl.hpp"

#include <algorithm>
#include <stdexcept>

#include "tglab/graph_ops.hpp"
#include "tglab/hom.hpp"

namespace tglab {

struct Formula::Node {
  Kind kind;
  Graph atom;  // kind == atom
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

void require_same_alphabet(const Formula& a, const Formula& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw std::invalid_argument("formula: atoms do not share one alphabet");
}

}  // namespace

Formula Formula::atom(Graph type_graph) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::atom;
  n->atom = std::move(type_graph);
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  require_same_alphabet(lhs, rhs);
  auto n = std::make_shared<Node>();
  n->kind = Kind::conjunction;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  require_same_alphabet(lhs, rhs);
  auto n = std::make_shared<Node>();
  n->kind = Kind::disjunction;
  n->lhs = std::move(lhs.node_);
  n->rhs = std::move(rhs.node_);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::negation;
  n->lhs = std::move(f.node_);
  return Formula(std::move(n));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Graph& Formula::graph() const {
  if (node_->kind != Kind::atom) throw std::logic_error("formula: not an atom");
  return node_->atom;
}

Formula Formula::left() const { return Formula(node_->lhs); }

Formula Formula::right() const { return Formula(node_->rhs); }

Formula Formula::child() const { return left(); }

int Formula::depth() const {
  switch (node_->kind) {
    case Kind::atom:
      return 1;
    case Kind::negation:
      return 1 + child().depth();
    default:
      return 1 + std::max(left().depth(), right().depth());
  }
}

const Alphabet& Formula::alphabet() const {
  const Node* n = node_.get();
  while (n->kind != Kind::atom) n = n->lhs.get();
  return n->atom.alphabet();
}

bool tgl_member(const Graph& g, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::atom:
      return hom_exists(g, f.graph());
    case Formula::Kind::conjunction:
      return tgl_member(g, f.left()) && tgl_member(g, f.right());
    case Formula::Kind::disjunction:
      return tgl_member(g, f.left()) || tgl_member(g, f.right());
    case Formula::Kind::negation:
      return !tgl_member(g, f.child());
  }
  return false;
}

namespace {

struct Literals {
  std::vector<Graph> positives;
  std::vector<Graph> negatives;
};

// DNF as lists of literal conjunctions, built by structural recursion with
// negations pushed to the atoms.
std::vector<Literals> dnf_literals(const Formula& f, bool negated) {
  switch (f.kind()) {
    case Formula::Kind::atom: {
      Literals l;
      (negated ? l.negatives : l.positives).push_back(f.graph());
      return {l};
    }
    case Formula::Kind::negation:
      return dnf_literals(f.child(), !negated);
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction: {
      bool conjunctive = (f.kind() == Formula::Kind::conjunction) != negated;
      auto lhs = dnf_literals(f.left(), negated);
      auto rhs = dnf_literals(f.right(), negated);
      if (!conjunctive) {
        lhs.insert(lhs.end(), rhs.begin(), rhs.end());
        return lhs;
      }
      std::vector<Literals> out;
      for (const Literals& a : lhs)
        for (const Literals& b : rhs) {
          Literals merged = a;
          merged.positives.insert(merged.positives.end(), b.positives.begin(),
                                  b.positives.end());
          merged.negatives.insert(merged.negatives.end(), b.negatives.begin(),
                                  b.negatives.end());
          out.push_back(std::move(merged));
        }
      return out;
    }
  }
  return {};
}

}  // namespace

DnfFormula tgl_to_dnf(const Formula& f) {
  if (f.depth() > kMaxFormulaDepth)
    throw std::invalid_argument("tgl_to_dnf: formula exceeds the depth limit");
  DnfFormula d;
  for (Literals& l : dnf_literals(f, false)) {
    // Seeding with the flower keeps exactly one positive per conjunct; the
    // extra factor does not change the language.
    Graph positive = flower(f.alphabet());
    for (const Graph& p : l.positives) positive = product(positive, p).graph;
    d.conjuncts.push_back(DnfConjunct{std::move(positive), std::move(l.negatives)});
  }
  return d;
}

bool dnf_member(const Graph& g, const DnfFormula& d) {
  for (const DnfConjunct& c : d.conjuncts) {
    if (!hom_exists(g, c.positive)) continue;
    bool blocked = false;
    for (const Graph& neg : c.negatives)
      if (hom_exists(g, neg)) {
        blocked = true;
        break;
      }
    if (!blocked) return true;
  }
  return false;
}

TglEmptiness tgl_empty(const Formula& f) {
  for (const DnfConjunct& c : tgl_to_dnf(f).conjuncts) {
    bool unsatisfiable = false;
    for (const Graph& neg : c.negatives)
      if (hom_exists(c.positive, neg)) {
        unsatisfiable = true;
        break;
      }
    // The positive maps into none of the negatives, so it is itself a
    // member of the conjunct's language.
    if (!unsatisfiable) return {false, c.positive};
  }
  return {true, std::nullopt};
}

TglInclusion tgl_included(const Formula& f1, const Formula& f2) {
  require_same_alphabet(f1, f2);
  TglEmptiness e = tgl_empty(Formula::conjunction(f1, Formula::negation(f2)));
  if (e.empty) return {true, std::nullopt};
  return {false, std::move(e.witness)};
}

}  // namespace tglab

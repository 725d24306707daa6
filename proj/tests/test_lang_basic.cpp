#include <doctest.h>

#include "test_support.hpp"
#include "tglab/core.hpp"
#include "tglab/graph_ops.hpp"
#include "tglab/hom.hpp"
#include "tglab/iso.hpp"
#include "tglab/lang.hpp"
#include "tglab/universe.hpp"

using namespace tglab;
using namespace tglab::testing;

TEST_CASE("type graph membership") {
  TypeGraphSpec t{aloop_bedge()};
  CHECK(tg_member(ab_path3(), t));
  CHECK_FALSE(tg_member(b_loop(), t));
  CHECK(tg_member(empty_ab(), t));
  CHECK(tg_member(make_graph({"A", "B"}, 2, {{0, 1, "A"}, {1, 0, "A"}}), t));
  SUBCASE("membership witness validates") {
    auto m = tg_membership(ab_path3(), t);
    REQUIRE(m.has_value());
    CHECK(check_morphism(*m).valid);
  }
  SUBCASE("alphabet mismatch is an error") {
    CHECK_THROWS_AS((void)tg_member(make_graph({"C"}, 1), t), std::invalid_argument);
  }
}

TEST_CASE("type graph emptiness is always false") {
  CHECK_FALSE(tg_empty(TypeGraphSpec{aloop_bedge()}));
  CHECK_FALSE(tg_empty(TypeGraphSpec{empty_ab()}));
  CHECK_FALSE(tg_empty(TypeGraphSpec{flower(ab())}));
  CHECK(tg_member(empty_ab(), TypeGraphSpec{empty_ab()}));
}

TEST_CASE("type graph inclusion") {
  SUBCASE("everything is included in the flower's language") {
    TgInclusion inc = tg_included(TypeGraphSpec{aloop_bedge()}, TypeGraphSpec{flower(ab())});
    CHECK(inc.included);
    CHECK(check_morphism(*inc.witness).valid);
  }
  SUBCASE("incompatible loops, with the first graph as counterexample") {
    TgInclusion inc = tg_included(TypeGraphSpec{a_loop()}, TypeGraphSpec{b_loop()});
    CHECK_FALSE(inc.included);
    REQUIRE(inc.counterexample.has_value());
    CHECK(tg_member(*inc.counterexample, TypeGraphSpec{a_loop()}));
    CHECK_FALSE(tg_member(*inc.counterexample, TypeGraphSpec{b_loop()}));
  }
  SUBCASE("a graph and its core include each other") {
    Graph t = foldable_six();
    Graph c = core(t).core;
    CHECK(tg_included(TypeGraphSpec{c}, TypeGraphSpec{t}).included);
    CHECK(tg_included(TypeGraphSpec{t}, TypeGraphSpec{c}).included);
  }
}

TEST_CASE("restriction graph membership") {
  RestrictionGraphSpec path{ab_path3()};
  SUBCASE("derived via the hom search oracle") {
    // The dual type graph avoids the path, the path itself does not, and a
    // lone A-loop has no B-edge for the path to land on.
    CHECK(rg_member(path_dual(), path) == !hom_exists(ab_path3(), path_dual()));
    CHECK(rg_member(path_dual(), path));
    CHECK_FALSE(rg_member(ab_path3(), path));
    CHECK(rg_member(a_loop(), path));
  }
  SUBCASE("empty restriction graph maps everywhere") {
    RestrictionGraphSpec none{empty_ab()};
    CHECK_FALSE(rg_member(empty_ab(), none));
    CHECK_FALSE(rg_member(ab_path3(), none));
  }
  SUBCASE("the empty graph avoids every non-empty restriction graph") {
    CHECK(rg_member(empty_ab(), path));
    CHECK(rg_member(empty_ab(), RestrictionGraphSpec{single_node()}));
  }
  SUBCASE("blocking witness validates") {
    auto m = rg_blocking_hom(ab_path3(), path);
    REQUIRE(m.has_value());
    CHECK(check_morphism(*m).valid);
  }
}

TEST_CASE("restriction graph emptiness") {
  CHECK(rg_empty(RestrictionGraphSpec{empty_ab()}));
  CHECK_FALSE(rg_empty(RestrictionGraphSpec{single_node()}));
  CHECK_FALSE(rg_empty(RestrictionGraphSpec{flower(ab())}));
  CHECK(rg_member(empty_ab(), RestrictionGraphSpec{single_node()}));
}

TEST_CASE("restriction graph inclusion") {
  Graph a_edge = make_graph({"A", "B"}, 2, {{0, 1, "A"}});
  SUBCASE("identity") {
    CHECK(rg_included(RestrictionGraphSpec{a_edge}, RestrictionGraphSpec{a_edge}).included);
  }
  SUBCASE("a single A-edge maps onto the path's first edge") {
    CHECK(rg_included(RestrictionGraphSpec{a_edge}, RestrictionGraphSpec{ab_path3()}).included);
  }
  SUBCASE("no B-edge available in the other direction") {
    RgInclusion inc =
        rg_included(RestrictionGraphSpec{ab_path3()}, RestrictionGraphSpec{a_edge});
    CHECK_FALSE(inc.included);
    REQUIRE(inc.counterexample.has_value());
    CHECK(rg_member(*inc.counterexample, RestrictionGraphSpec{ab_path3()}));
    CHECK_FALSE(rg_member(*inc.counterexample, RestrictionGraphSpec{a_edge}));
  }
}

TEST_CASE("inclusion agrees with exhaustive membership comparison") {
  GraphUniverse u{ab(), 2, 2};
  std::vector<Graph> all = enumerate_graphs(u);
  std::mt19937 rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    Graph t1 = random_graph(rng, ab(), 2, 2);
    Graph t2 = random_graph(rng, ab(), 2, 2);
    bool exact = tg_included(TypeGraphSpec{t1}, TypeGraphSpec{t2}).included;
    bool bounded = true;
    for (const Graph& g : all)
      if (tg_member(g, TypeGraphSpec{t1}) && !tg_member(g, TypeGraphSpec{t2})) bounded = false;
    CHECK(exact == bounded);

    bool rexact = rg_included(RestrictionGraphSpec{t1}, RestrictionGraphSpec{t2}).included;
    bool rbounded = true;
    for (const Graph& g : all)
      if (rg_member(g, RestrictionGraphSpec{t1}) && !rg_member(g, RestrictionGraphSpec{t2}))
        rbounded = false;
    CHECK(rexact == rbounded);
  }
}

TEST_CASE("bounded duality check") {
  SUBCASE("the path and its dual are consistent on the small universe") {
    DualityVerdict v = duality_check_bounded(ab_path3(), path_dual(), GraphUniverse{ab(), 3, 3});
    CHECK(v.consistent);
  }
  SUBCASE("a single node against the flower fails") {
    DualityVerdict v =
        duality_check_bounded(single_node(), flower(ab()), GraphUniverse{ab(), 2, 2});
    CHECK_FALSE(v.consistent);
    REQUIRE(v.counterexample.has_value());
    const Graph& g = *v.counterexample;
    CHECK(hom_exists(g, flower(ab())) != !hom_exists(single_node(), g));
  }
  SUBCASE("a loop paired with itself fails on itself") {
    DualityVerdict v = duality_check_bounded(a_loop(), a_loop(), GraphUniverse{ab(), 2, 2});
    CHECK_FALSE(v.consistent);
    REQUIRE(v.counterexample.has_value());
    CHECK(is_isomorphic(*v.counterexample, a_loop()));
  }
}

TEST_CASE("tree test on the core") {
  CHECK(core_is_tree(ab_path3()));
  CHECK_FALSE(core_is_tree(a_loop()));
  CHECK(core_is_tree(make_graph({"A", "B"}, 2)));  // folds to a single node
  CHECK_FALSE(core_is_tree(empty_ab()));
  CHECK_FALSE(core_is_tree(path_dual()));
  // Antiparallel edges make an undirected cycle.
  CHECK_FALSE(core_is_tree(make_graph({"A", "B"}, 2, {{0, 1, "A"}, {1, 0, "B"}})));
}

TEST_CASE("closure laws on a small universe") {
  GraphUniverse u{ab(), 2, 2};
  std::vector<Graph> all = enumerate_graphs(u);

  SUBCASE("product realizes intersection, coproduct realizes union") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 8; ++trial) {
      Graph t1 = random_graph(rng, ab(), 2, 2);
      Graph t2 = random_graph(rng, ab(), 2, 2);
      Graph prod = product(t1, t2).graph;
      Graph coprod = coproduct(t1, t2).graph;
      for (const Graph& g : all) {
        CHECK(tg_member(g, TypeGraphSpec{prod}) ==
              (tg_member(g, TypeGraphSpec{t1}) && tg_member(g, TypeGraphSpec{t2})));
        CHECK(rg_member(g, RestrictionGraphSpec{coprod}) ==
              (rg_member(g, RestrictionGraphSpec{t1}) || rg_member(g, RestrictionGraphSpec{t2})));
      }
    }
  }

  SUBCASE("no type graph catches the union of the two loop languages") {
    auto member_union = [&](const Graph& g) {
      return tg_member(g, TypeGraphSpec{a_loop()}) || tg_member(g, TypeGraphSpec{b_loop()});
    };
    for (const Graph& t : all) {
      bool matches = true;
      for (const Graph& g : all)
        if (tg_member(g, TypeGraphSpec{t}) != member_union(g)) {
          matches = false;
          break;
        }
      CHECK_FALSE(matches);
    }
  }

  SUBCASE("no restriction graph catches the intersection of the two loop languages") {
    auto member_isect = [&](const Graph& g) {
      return rg_member(g, RestrictionGraphSpec{a_loop()}) &&
             rg_member(g, RestrictionGraphSpec{b_loop()});
    };
    for (const Graph& r : all) {
      bool matches = true;
      for (const Graph& g : all)
        if (rg_member(g, RestrictionGraphSpec{r}) != member_isect(g)) {
          matches = false;
          break;
        }
      CHECK_FALSE(matches);
    }
  }
}

#include <doctest.h>

#include "gincalc/cohomology.hpp"
#include "gincalc/enumeration.hpp"
#include "gincalc/gen_tree.hpp"
#include "gincalc/rng.hpp"

using namespace gincalc;

namespace {

Monomial m(std::vector<int> e) { return Monomial(std::move(e)); }

MonomialIdeal points_ideal(int arity) {
  return MonomialIdeal(arity, {Monomial::variable(arity, 0), Monomial::variable(arity, 1),
                               Monomial::variable(arity, 2)});
}

}  // namespace

TEST_CASE("tree of the point ideal") {
  GenTree t = GenTree::from_ideal(points_ideal(4));
  CHECK(t.vertex_count() == 4);
  CHECK(t.leaves().size() == 3);
  CHECK(t.nonleaf_count() == 1);
  CHECK(t.ideal() == points_ideal(4));
}

TEST_CASE("tree of the quartic gin") {
  GenTree t = GenTree::from_ideal(rational_quartic_gin(4));
  CHECK(t.nonleaf_count() == 4);
  CHECK(t.vertex_count() == 10);
  CHECK(t.ideal() == rational_quartic_gin(4));
}

TEST_CASE("round trips over enumerated staircases") {
  for (int d = 1; d <= 6; ++d) {
    EnumerationFilter f{d, 0, false, false};
    for (const MonomialIdeal& ideal : enumerate_staircases(3, f)) {
      GenTree t = GenTree::from_ideal(ideal);
      CHECK(t.ideal() == ideal);
      CHECK(t.nonleaf_count() == d);
    }
  }
}

TEST_CASE("non-borel input is rejected") {
  CHECK_THROWS(GenTree::from_ideal(MonomialIdeal(4, {m({0, 1, 0, 0})})));
}

TEST_CASE("initial lambda rules") {
  GenTree start = GenTree::empty(4).apply_lambda(0, Ruleset::nondegenerate_p4);
  CHECK(start.ideal() == points_ideal(4));
  GenTree planar = GenTree::empty(3).apply_lambda(0, Ruleset::planar_p3);
  CHECK(planar.ideal() ==
        MonomialIdeal(3, {Monomial::variable(3, 0), Monomial::variable(3, 1)}));
}

TEST_CASE("the unique degree-2 section ideal") {
  GenTree start = GenTree::empty(4).apply_lambda(0, Ruleset::nondegenerate_p4);
  int legal = 0;
  GenTree next = start;
  for (int leaf : start.leaves()) {
    if (leaf == 0) continue;
    auto r = start.try_apply_lambda(leaf, Ruleset::nondegenerate_p4);
    if (r) {
      ++legal;
      next = *r;
    }
  }
  // only the last-variable leaf admits a rewriting that keeps the tree valid
  CHECK(legal == 1);
  CHECK(next.ideal() ==
        MonomialIdeal(4, {m({1, 0, 0, 0}), m({0, 1, 0, 0}), m({0, 0, 2, 0})}));
}

TEST_CASE("planar x0 rewriting of the point ideal is refused") {
  // gluing (x0^2, x0*x1) under the leaf x0 would leave x0*x1 divisible by
  // the sibling x1, so the application must be rejected
  GenTree planar = GenTree::empty(3).apply_lambda(0, Ruleset::planar_p3);
  auto x0_leaf = planar.find_leaf(Monomial::variable(3, 0));
  REQUIRE(x0_leaf.has_value());
  CHECK_FALSE(planar.try_apply_lambda(*x0_leaf, Ruleset::planar_p3).has_value());
  CHECK_THROWS(planar.apply_lambda(*x0_leaf, Ruleset::planar_p3));
}

TEST_CASE("every lambda application adds one box and one internal vertex") {
  Rng rng(41);
  for (Ruleset rs : {Ruleset::nondegenerate_p4, Ruleset::planar_p3}) {
    const RulesetInfo info = ruleset_info(rs);
    for (int walk = 0; walk < 30; ++walk) {
      Rng child = rng.split();
      GenTree tree = GenTree::empty(info.section_arity).apply_lambda(0, rs);
      long long colength = 1;
      for (int step = 0; step < 8; ++step) {
        std::vector<int> leaves = tree.leaves();
        size_t offset = child.bounded(leaves.size());
        bool applied = false;
        for (size_t j = 0; j < leaves.size() && !applied; ++j) {
          int leaf = leaves[(offset + j) % leaves.size()];
          if (leaf == 0) continue;
          auto r = tree.try_apply_lambda(leaf, rs);
          if (!r) continue;
          tree = *r;
          ++colength;
          applied = true;
        }
        REQUIRE(applied);
        MonomialIdeal ideal = tree.ideal();
        CHECK(is_saturated_borel(ideal));
        CHECK(tree.nonleaf_count() == colength);
        CHECK(hilbert_data(ideal).colength == colength);
      }
    }
  }
}

TEST_CASE("c rules on stated examples") {
  MonomialIdeal cone = case_hyperplane_gin(CaseId::c1).extended(5);
  GenTree tree = GenTree::from_ideal(cone);
  auto top = tree.find_leaf(m({0, 0, 3, 0, 0}));
  REQUIRE(top.has_value());
  GenTree once = tree.apply_c_rule(*top, Ruleset::nondegenerate_p4);
  CHECK(once.ideal().contains(m({0, 0, 4, 0, 0})));
  CHECK(once.ideal().contains(m({0, 0, 3, 1, 0})));
  CHECK_FALSE(once.ideal().contains(m({0, 0, 3, 0, 0})));
  // three chain extensions push x2^3*x3 to x2^3*x3^4
  GenTree chain = once;
  for (int k = 1; k <= 3; ++k) {
    auto leaf = chain.find_leaf(m({0, 0, 3, k, 0}));
    REQUIRE(leaf.has_value());
    chain = chain.apply_c_rule(*leaf, Ruleset::nondegenerate_p4);
  }
  CHECK(chain.ideal().contains(m({0, 0, 3, 4, 0})));
  CHECK(is_saturated_borel(chain.ideal()));
}

TEST_CASE("the recorded six-step traces replay") {
  // case 1 to its genus-0 endpoint
  RewriteTrace fig6;
  fig6.start = case_hyperplane_gin(CaseId::c1).extended(5);
  auto step = [](std::vector<int> e) {
    Monomial t(std::move(e));
    return RewriteStep{RuleFamily::c_rule, Ruleset::nondegenerate_p4, t, t.degree()};
  };
  fig6.steps = {step({0, 0, 3, 0, 0}), step({0, 0, 3, 1, 0}), step({0, 0, 3, 2, 0}),
                step({0, 0, 3, 3, 0}), step({0, 0, 4, 0, 0}), step({0, 0, 4, 1, 0})};
  fig6.end = expected_witness_case1_g0();
  CHECK(replay(fig6) == fig6.end);

  // case 2 to its genus-1 endpoint
  RewriteTrace fig7;
  fig7.start = case_hyperplane_gin(CaseId::c2).extended(5);
  fig7.steps = {step({0, 0, 4, 0, 0}), step({0, 0, 4, 1, 0}), step({0, 0, 4, 2, 0}),
                step({0, 0, 5, 0, 0}), step({0, 0, 5, 1, 0}), step({0, 0, 6, 0, 0})};
  fig7.end = expected_witness_case2_g1();
  CHECK(replay(fig7) == fig7.end);

  // a wrong endpoint is caught
  fig7.end = expected_witness_case1_g0();
  CHECK_THROWS(replay(fig7));
}

TEST_CASE("prune basics") {
  GenTree points = GenTree::from_ideal(points_ideal(4));
  GenTree empty = points.prune();
  CHECK(empty.vertex_count() == 1);
  CHECK(empty.nonleaf_count() == 0);
  CHECK(empty.ideal().is_zero());
  CHECK_THROWS(empty.prune());
  // pruning a case gin keeps the tree in the admissible class
  GenTree c3 = GenTree::from_ideal(case_hyperplane_gin(CaseId::c3));
  MonomialIdeal pruned = c3.prune().ideal();
  CHECK(is_borel_fixed(pruned));
  CHECK(is_saturated_borel(pruned));
}

TEST_CASE("prune inverts a maximal batch of rewritings") {
  Rng rng(57);
  for (int walk = 0; walk < 20; ++walk) {
    Rng child = rng.split();
    // random lambda tree
    GenTree tree = GenTree::empty(4).apply_lambda(0, Ruleset::nondegenerate_p4);
    for (int step = 0; step < 6; ++step) {
      std::vector<int> leaves = tree.leaves();
      size_t offset = child.bounded(leaves.size());
      for (size_t j = 0; j < leaves.size(); ++j) {
        int leaf = leaves[(offset + j) % leaves.size()];
        if (leaf == 0) continue;
        auto r = tree.try_apply_lambda(leaf, Ruleset::nondegenerate_p4);
        if (r) {
          tree = *r;
          break;
        }
      }
    }
    GenTree before = tree;
    // rewrite every leaf of maximal degree once (a full batch)
    int max_deg = 0;
    for (int leaf : tree.leaves())
      max_deg = std::max(max_deg, tree.depth(leaf));
    bool batch_ok = true;
    std::vector<Monomial> targets;
    for (int leaf : before.leaves())
      if (before.depth(leaf) == max_deg) targets.push_back(before.path_monomial(leaf));
    for (const Monomial& target : targets) {
      auto leaf = tree.find_leaf(target);
      if (!leaf) {
        batch_ok = false;
        break;
      }
      auto r = tree.try_apply_lambda(*leaf, Ruleset::nondegenerate_p4);
      if (!r) {
        batch_ok = false;
        break;
      }
      tree = *r;
    }
    if (batch_ok) CHECK(tree.prune() == before);
  }
}

TEST_CASE("contract_saturation matches the ideal-level saturation") {
  GenTree fig6 = GenTree::from_ideal(expected_witness_case1_g0());
  CHECK(fig6.contract_saturation(3).ideal() ==
        case_hyperplane_gin(CaseId::c1).extended(5));
  GenTree fig7 = GenTree::from_ideal(expected_witness_case2_g1());
  CHECK(fig7.contract_saturation(3).ideal() ==
        saturate_wrt(expected_witness_case2_g1(), 3));
  CHECK(fig7.contract_saturation(3).ideal() ==
        case_hyperplane_gin(CaseId::c2).extended(5));
  // trees without the variable are untouched
  GenTree c1 = GenTree::from_ideal(case_hyperplane_gin(CaseId::c1));
  CHECK(c1.contract_saturation(3) == c1);
}

TEST_CASE("dot output is deterministic and complete") {
  GenTree t = GenTree::from_ideal(rational_quartic_gin(4));
  std::string dot = t.to_dot();
  CHECK(dot == GenTree::from_ideal(rational_quartic_gin(4)).to_dot());
  // one node line per vertex
  size_t nodes = 0;
  for (size_t pos = dot.find("label="); pos != std::string::npos;
       pos = dot.find("label=", pos + 1))
    ++nodes;
  CHECK(nodes == 10);
  std::string empty_dot = GenTree::empty(4).to_dot();
  CHECK(empty_dot.find("v0") != std::string::npos);
}

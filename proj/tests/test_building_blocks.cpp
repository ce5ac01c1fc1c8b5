#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

using namespace udpolar;

namespace {

constexpr Polarity U = Polarity::Up;
constexpr Polarity D = Polarity::Down;
constexpr Polarity F = Polarity::Flat;

// (rel L R) with two marked leaves.
struct Triple {
  BinaryDepTree t;
  NodeId left, right, root;
};

Triple triple(const std::string& rel, Polarity top, Polarity l, Polarity r) {
  Triple x;
  x.left = x.t.add_leaf({1, "L", "_", "X", false});
  x.right = x.t.add_leaf({2, "R", "_", "X", false});
  x.root = x.t.add_relation(rel, x.left, x.right);
  x.t.set_root(x.root);
  x.t.set_mark(x.left, l);
  x.t.set_mark(x.right, r);
  x.t.set_mark(x.root, top);
  return x;
}

BinaryDepTree marked(const DependencyGraph& g, Polarity p) {
  auto t = binarize(g);
  for (std::size_t i = 0; i < t.node_count(); ++i) t.set_mark(static_cast<NodeId>(i), p);
  return t;
}

}  // namespace

TEST(NegateSubtree, Leaf) {
  BinaryDepTree t;
  t.set_root(t.add_leaf({1, "a", "_", "X", false}));
  t.set_mark(t.root(), U);
  negate_subtree(t, t.root());
  EXPECT_EQ(t.mark(t.root()), D);
}

TEST(NegateSubtree, MarkToGo) {
  auto g = udpolar::testing::graph_of({{"to", "PART", 2, "mark"}, {"go", "VERB", 0, "root"}});
  auto t = marked(g, U);
  negate_subtree(t, t.root());
  EXPECT_EQ(to_sexpression(t), "(markv tov gov)");
}

TEST(NegateSubtree, TwiceRestores) {
  auto t = binarize(udpolar::testing::no_student_refused());
  Polarizer().polarize(t);
  const auto before = udpolar::testing::marks_of(t);
  negate_subtree(t, t.root());
  negate_subtree(t, t.root());
  EXPECT_EQ(udpolar::testing::marks_of(t), before);
}

TEST(NegateSubtree, FlatStaysFlat) {
  auto x = triple("dep", U, F, D);
  negate_subtree(x.t, x.root);
  EXPECT_EQ(x.t.mark(x.root), D);
  EXPECT_EQ(x.t.mark(x.left), F);
  EXPECT_EQ(x.t.mark(x.right), U);
}

TEST(NegateSubtree, UnassignedThrowsWithoutChanges) {
  auto x = triple("dep", U, U, U);
  x.t[x.right].mark.reset();
  EXPECT_THROW(negate_subtree(x.t, x.root), InvariantError);
  EXPECT_EQ(x.t.mark(x.root), U);
  EXPECT_EQ(x.t.mark(x.left), U);
}

TEST(EqualizeSubtree, Leaf) {
  BinaryDepTree t;
  t.set_root(t.add_leaf({1, "a", "_", "X", false}));
  t.set_mark(t.root(), U);
  equalize_subtree(t, t.root());
  EXPECT_EQ(t.mark(t.root()), F);
}

TEST(EqualizeSubtree, TheRabbit) {
  auto g = udpolar::testing::graph_of({{"the", "DET", 2, "det"}, {"rabbit", "NOUN", 0, "root"}});
  auto t = marked(g, U);
  equalize_subtree(t, t.root());
  EXPECT_EQ(to_sexpression(t), "(det= the= rabbit=)");
}

TEST(EqualizeSubtree, Idempotent) {
  auto t = binarize(udpolar::testing::all_dogs_eat());
  Polarizer().polarize(t);
  equalize_subtree(t, t.root());
  const auto once = udpolar::testing::marks_of(t);
  equalize_subtree(t, t.root());
  EXPECT_EQ(udpolar::testing::marks_of(t), once);
}

TEST(BackwardNegation, Triggered) {
  auto x = triple("obj", U, U, D);
  backward_negation(x.t, x.root);
  EXPECT_EQ(to_sexpression(x.t), "(obj^ Lv Rv)");
}

TEST(BackwardNegation, NotTriggered) {
  auto x = triple("obj", U, U, U);
  backward_negation(x.t, x.root);
  EXPECT_EQ(to_sexpression(x.t), "(obj^ L^ R^)");
}

TEST(BackwardNegation, FlipsWholeLeftSubtree) {
  // (obj (det a dog) R)
  BinaryDepTree t;
  NodeId a = t.add_leaf({1, "a", "_", "DET", false});
  NodeId dog = t.add_leaf({2, "dog", "_", "NOUN", false});
  NodeId det = t.add_relation("det", a, dog);
  NodeId r = t.add_leaf({3, "R", "_", "VERB", false});
  NodeId obj = t.add_relation("obj", det, r);
  t.set_root(obj);
  for (NodeId n : {a, dog, det, obj}) t.set_mark(n, U);
  t.set_mark(r, D);
  backward_negation(t, obj);
  EXPECT_EQ(t.mark(a), D);
  EXPECT_EQ(t.mark(dog), D);
  EXPECT_EQ(t.mark(det), D);
  EXPECT_EQ(t.mark(obj), U);
}

TEST(BackwardEqualization, Triggered) {
  auto x = triple("obj", U, U, F);
  backward_equalization(x.t, x.root);
  EXPECT_EQ(to_sexpression(x.t), "(obj^ L= R=)");
}

TEST(BackwardEqualization, NotTriggered) {
  auto x = triple("obj", U, U, U);
  backward_equalization(x.t, x.root);
  EXPECT_EQ(to_sexpression(x.t), "(obj^ L^ R^)");
}

TEST(BackwardEqualization, NestedLeft) {
  auto t = marked(udpolar::testing::no_student_refused(), U);
  const Node& root = t[t.root()];
  t.set_mark(root.right, F);
  backward_equalization(t, t.root());
  for (NodeId n : t.subtree(root.left)) EXPECT_EQ(t.mark(n), F);
}

TEST(ForwardNegation, Triggered) {
  auto x = triple("advmod", U, D, U);
  forward_negation(x.t, x.root);
  EXPECT_EQ(to_sexpression(x.t), "(advmod^ Lv Rv)");
}

TEST(ForwardNegation, NotTriggered) {
  auto x = triple("advmod", U, U, U);
  forward_negation(x.t, x.root);
  EXPECT_EQ(to_sexpression(x.t), "(advmod^ L^ R^)");
}

TEST(ForwardNegation, DeepRight) {
  BinaryDepTree t;
  NodeId l = t.add_leaf({1, "not", "_", "PART", false});
  // Right side: (a (b (c x y) z) w), depth 3.
  NodeId x = t.add_leaf({2, "x", "_", "X", false});
  NodeId y = t.add_leaf({3, "y", "_", "X", false});
  NodeId c = t.add_relation("c", x, y);
  NodeId z = t.add_leaf({4, "z", "_", "X", false});
  NodeId b = t.add_relation("b", c, z);
  NodeId w = t.add_leaf({5, "w", "_", "X", false});
  NodeId a = t.add_relation("a", b, w);
  NodeId top = t.add_relation("advmod", l, a);
  t.set_root(top);
  for (NodeId n : t.subtree(top)) t.set_mark(n, U);
  t.set_mark(l, D);
  forward_negation(t, top);
  for (NodeId n : t.subtree(a)) EXPECT_EQ(t.mark(n), D);
  EXPECT_EQ(t.mark(top), U);
}

TEST(ForwardEqualization, Triggered) {
  auto x = triple("advmod", U, F, U);
  forward_equalization(x.t, x.root);
  EXPECT_EQ(to_sexpression(x.t), "(advmod^ L= R=)");
}

TEST(ForwardEqualization, NotTriggered) {
  auto x = triple("advmod", U, D, U);
  forward_equalization(x.t, x.root);
  EXPECT_EQ(to_sexpression(x.t), "(advmod^ Lv R^)");
}

TEST(ForwardEqualization, DeepRight) {
  auto t = marked(udpolar::testing::all_dogs_eat(), U);
  const NodeId root = t.root();
  t.set_mark(t[root].left, F);
  forward_equalization(t, root);
  for (NodeId n : t.subtree(t[root].right)) EXPECT_EQ(t.mark(n), F);
}

TEST(TopdownNegation, NoCatFlies) {
  auto g = udpolar::testing::graph_of(
      {{"No", "DET", 2, "det"}, {"cat", "NOUN", 3, "nsubj"}, {"flies", "VERB", 0, "root"}});
  auto t = marked(g, U);
  const NodeId det = t[t.root()].left;
  t.set_mark(t[det].right, D);  // cat
  topdown_negation(t, det);
  EXPECT_EQ(to_sexpression(t), "(nsubjv (det^ No^ catv) fliesv)");
}

TEST(TopdownNegation, OnlyParentInScope) {
  auto x = triple("dep", U, U, U);
  topdown_negation(x.t, x.left);
  EXPECT_EQ(x.t.mark(x.root), D);
  EXPECT_EQ(x.t.mark(x.left), U);
  EXPECT_EQ(x.t.mark(x.right), D);
}

TEST(TopdownNegation, AtRootThrows) {
  auto x = triple("dep", U, U, U);
  EXPECT_THROW(topdown_negation(x.t, x.root), InvariantError);
  EXPECT_THROW(topdown_equalization(x.t, x.root), InvariantError);
}

TEST(TopdownEqualization, FlattensScope) {
  auto x = triple("dep", U, D, U);
  topdown_equalization(x.t, x.left);
  EXPECT_EQ(to_sexpression(x.t), "(dep= Lv R=)");
}

// ----- properties ----------------------------------------------------------

class BuildingBlockAlgebra : public ::testing::Test {
 protected:
  std::mt19937 rng{20240601};
};

TEST_F(BuildingBlockAlgebra, NegateTwiceIsIdentityWithoutFlat) {
  for (int i = 0; i < 500; ++i) {
    auto t = udpolar::testing::random_marked_tree(rng, 6, false);
    const auto before = udpolar::testing::marks_of(t);
    negate_subtree(t, t.root());
    negate_subtree(t, t.root());
    ASSERT_EQ(udpolar::testing::marks_of(t), before) << i;
  }
}

TEST_F(BuildingBlockAlgebra, EqualizeIdempotentAndAbsorbing) {
  for (int i = 0; i < 500; ++i) {
    auto t = udpolar::testing::random_marked_tree(rng, 6, true);
    equalize_subtree(t, t.root());
    const auto once = udpolar::testing::marks_of(t);
    equalize_subtree(t, t.root());
    ASSERT_EQ(udpolar::testing::marks_of(t), once);
    negate_subtree(t, t.root());
    ASSERT_EQ(udpolar::testing::marks_of(t), once);
  }
}

TEST_F(BuildingBlockAlgebra, TopdownTwiceIsIdentity) {
  for (int i = 0; i < 500; ++i) {
    auto t = udpolar::testing::random_marked_tree(rng, 6, false);
    if (t.node_count() == 1) continue;
    std::uniform_int_distribution<std::size_t> pick(0, t.node_count() - 1);
    NodeId n;
    do n = static_cast<NodeId>(pick(rng));
    while (n == t.root());
    const auto before = udpolar::testing::marks_of(t);
    topdown_negation(t, n);
    topdown_negation(t, n);
    ASSERT_EQ(udpolar::testing::marks_of(t), before) << i;
  }
}

TEST_F(BuildingBlockAlgebra, TriggersNeverTouchTheirTrigger) {
  for (int i = 0; i < 500; ++i) {
    auto t = udpolar::testing::random_marked_tree(rng, 6, true);
    if (t[t.root()].is_leaf()) continue;
    const Node& r = t[t.root()];
    auto snapshot = [&](NodeId id) {
      std::vector<Mark> out;
      for (NodeId n : t.subtree(id)) out.push_back(t.mark(n));
      return out;
    };
    const auto right = snapshot(r.right);
    backward_negation(t, t.root());
    backward_equalization(t, t.root());
    ASSERT_EQ(snapshot(r.right), right);
    const auto left = snapshot(r.left);
    forward_negation(t, t.root());
    forward_equalization(t, t.root());
    ASSERT_EQ(snapshot(r.left), left);
  }
}

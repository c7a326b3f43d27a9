#include "doctest.h"

#include <set>

#include "demazure/root_datum.hpp"
#include "demazure/weyl.hpp"

using namespace demazure;

namespace {

CartanMatrix cart(std::vector<std::vector<int>> rows) { return CartanMatrix(rows); }
CartanMatrix a2() { return cart({{2, -1}, {-1, 2}}); }
CartanMatrix b2() { return cart({{2, -1}, {-2, 2}}); }
CartanMatrix affine_a1() { return cart({{2, -2}, {-2, 2}}); }

}  // namespace

TEST_CASE("Cartan matrix validation") {
  CHECK_NOTHROW(cart({{2}}));
  CHECK_NOTHROW(a2());
  CHECK_NOTHROW(affine_a1());
  CHECK_THROWS_AS(cart({{1}}), ValidationError);              // diagonal not 2
  CHECK_THROWS_AS(cart({{2, 1}, {-1, 2}}), ValidationError);  // positive off-diagonal
  CHECK_THROWS_AS(cart({{2, 0}, {-1, 2}}), ValidationError);  // broken zero symmetry
  CHECK_THROWS_AS(cart({{2, -1}}), ValidationError);          // not square
}

TEST_CASE("Coxeter orders from entry products") {
  CHECK(cart({{2, 0}, {0, 2}}).coxeter_order(0, 1) == 2);
  CHECK(a2().coxeter_order(0, 1) == 3);
  CHECK(b2().coxeter_order(0, 1) == 4);
  CHECK(b2().coxeter_order(1, 0) == 4);
  CHECK(cart({{2, -1}, {-3, 2}}).coxeter_order(0, 1) == 6);
  CHECK(affine_a1().coxeter_order(0, 1) == 0);
}

TEST_CASE("root lattice datum reproduces the Cartan matrix") {
  RootDatum d = RootDatum::root_lattice(a2());
  CHECK(d.rank() == 2);
  CHECK(d.lattice_rank() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(d.pairing(d.simple_root_vec(j), i) == a2().at(i, j));
}

TEST_CASE("datum validation rejects bad realizations") {
  CartanMatrix c = a2();
  // simple root with non-unimodular coordinates
  CHECK_THROWS_AS(RootDatum(c, {{2, 0}, {0, 1}}, {{1, 0}, {0, 2}}), ValidationError);
  // dependent simple roots
  CHECK_THROWS_AS(RootDatum(c, {{1, 1}, {1, 1}}, {{1, 1}, {1, 1}}), ValidationError);
  // pairing does not match the Cartan matrix
  CHECK_THROWS_AS(RootDatum(c, {{1, 0}, {0, 1}}, {{2, 0}, {0, 2}}), ValidationError);
  // ambient rank below the Cartan rank
  CHECK_THROWS_AS(RootDatum(c, {{1}, {1}}, {{2}, {2}}), ValidationError);
}

TEST_CASE("weight-style realization on a bigger lattice") {
  // A1 inside Z^2: alpha = (1, -1), coroot pairing <(a,b)> = a - b.
  RootDatum d(cart({{2}}), {{1, -1}}, {{1, -1}});
  CHECK(d.lattice_rank() == 2);
  LatticeVec v{3, 1};
  CHECK(d.reflect(0, v) == LatticeVec{1, 3});  // swap coordinates
}

TEST_CASE("simple reflections act correctly on A2 roots") {
  RootDatum d = RootDatum::root_lattice(a2());
  LatticeVec a1{1, 0}, a12{1, 1};
  CHECK(d.reflect(0, a1) == LatticeVec{-1, 0});
  CHECK(d.reflect(0, LatticeVec{0, 1}) == a12);
  CHECK(d.reflect(1, a1) == a12);
  Root r = d.simple_root(0);
  Root s = d.reflect_root(1, r);  // s_2(alpha_1) = alpha_1 + alpha_2
  CHECK(s.lattice == a12);
  CHECK(s.simple == LatticeVec{1, 1});
  CHECK(s.positive);
  // coroot covector of alpha_1 + alpha_2 pairs to 1 with both simples
  CHECK(s.coroot == LatticeVec{1, 1});
  Root neg = d.reflect_root(0, r);
  CHECK_FALSE(neg.positive);
}

TEST_CASE("A2 slice enumerates the symmetric group S3") {
  RootDatum d = RootDatum::root_lattice(a2());
  WeylSlice w(d, 3);
  CHECK(w.size() == 6);
  CHECK(w.elements_of_length(0).size() == 1);
  CHECK(w.elements_of_length(1).size() == 2);
  CHECK(w.elements_of_length(2).size() == 2);
  CHECK(w.elements_of_length(3).size() == 1);

  int w0 = w.elements_of_length(3)[0];
  CHECK(w.word(w0) == std::vector<int>{0, 1, 0});  // shortlex-least of the two braid words
  CHECK(WeylSlice::word_key(w.word(w0)) == "1.2.1");
  CHECK(WeylSlice::word_key({}) == "e");

  // both braid words fold to the longest element
  CHECK(w.reduce_word({1, 0, 1}) == w0);
  CHECK(w.reduce_word({0, 1, 0}) == w0);
  // non-reduced word folds with cancellation
  CHECK(w.reduce_word({0, 0}) == 0);
  CHECK(w.length(0) == 0);

  CHECK(w.inverse(w0) == w0);
  int s1 = w.simple(0), s2 = w.simple(1);
  int s1s2 = w.mult(s1, s2);
  CHECK(w.inverse(s1s2) == w.mult(s2, s1));
  CHECK(w.length(s1s2) == 2);

  CHECK(w.left_descent(s1s2, 0));
  CHECK_FALSE(w.left_descent(s1s2, 1));
  CHECK(w.right_descent(s1s2, 1));
  CHECK_FALSE(w.right_descent(s1s2, 0));
}

TEST_CASE("A2 inversion sets and root table") {
  RootDatum d = RootDatum::root_lattice(a2());
  WeylSlice w(d, 3);
  int w0 = w.elements_of_length(3)[0];
  auto inv = w.inversion_set(w0);
  CHECK(inv.size() == 3);
  std::set<LatticeVec> vs;
  for (const auto& r : inv) {
    CHECK(r.positive);
    vs.insert(r.lattice);
  }
  CHECK(vs == std::set<LatticeVec>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(w.root_table().size() == 3);

  auto [sign_pos, rp] = w.classify(LatticeVec{1, 1});
  CHECK(sign_pos == 1);
  CHECK(rp->lattice == LatticeVec{1, 1});
  auto [sign_neg, rn] = w.classify(LatticeVec{-1, -1});
  CHECK(sign_neg == -1);
  CHECK(rn->lattice == LatticeVec{1, 1});
  CHECK_THROWS_AS(w.classify(LatticeVec{2, 1}), OutOfSliceError);

  // s_{alpha_1 + alpha_2} = s1 s2 s1
  int refl = w.reflection_of(*rp);
  CHECK(refl == w.reduce_word({0, 1, 0}));
}

TEST_CASE("A2 Bruhat order is the S3 poset") {
  RootDatum d = RootDatum::root_lattice(a2());
  WeylSlice w(d, 3);
  int e = 0, s1 = w.simple(0), s2 = w.simple(1);
  int s1s2 = w.mult(s1, s2), s2s1 = w.mult(s2, s1);
  int w0 = w.mult(s1s2, s1);
  for (int u : {e, s1, s2, s1s2, s2s1, w0}) {
    CHECK(w.bruhat_leq(e, u));
    CHECK(w.bruhat_leq(u, w0));
    CHECK(w.bruhat_leq(u, u));
  }
  CHECK(w.bruhat_leq(s1, s1s2));
  CHECK(w.bruhat_leq(s2, s1s2));
  CHECK_FALSE(w.bruhat_leq(s1s2, s2s1));
  CHECK_FALSE(w.bruhat_leq(s2s1, s1s2));
  CHECK_FALSE(w.bruhat_leq(s1, s2));
  CHECK_FALSE(w.bruhat_leq(w0, s1s2));
}

TEST_CASE("slice boundary behavior") {
  RootDatum d = RootDatum::root_lattice(a2());
  WeylSlice w(d, 2);  // drop the longest element
  CHECK(w.size() == 5);
  int s1 = w.simple(0), s2 = w.simple(1);
  int s1s2 = w.mult(s1, s2);
  CHECK(w.mult(s1s2, s1) == -1);
  CHECK_THROWS_AS(w.mult_checked(s1s2, s1), OutOfSliceError);
  CHECK_THROWS_AS(w.reduce_word({0, 1, 0}), OutOfSliceError);
  CHECK(w.right_mult(s1s2, 1) == s1);  // shortening stays inside
}

TEST_CASE("B2 slice realizes the dihedral group of order eight") {
  RootDatum d = RootDatum::root_lattice(b2());
  WeylSlice w(d, 4);
  CHECK(w.size() == 8);
  int w0 = w.elements_of_length(4)[0];
  CHECK(w.word(w0) == std::vector<int>{0, 1, 0, 1});
  CHECK(w.reduce_word({1, 0, 1, 0}) == w0);
  // four positive roots: a1, a2, a1+a2, a1+2a2
  CHECK(w.root_table().size() == 4);
  CHECK(w.root_table().count(LatticeVec{1, 2}) == 1);
  auto inv = w.inversion_set(w0);
  CHECK(inv.size() == 4);
}

TEST_CASE("affine slice grows two elements per length") {
  RootDatum d = RootDatum::root_lattice(affine_a1());
  WeylSlice w(d, 5);
  CHECK(w.size() == 11);
  for (int l = 1; l <= 5; ++l) CHECK(w.elements_of_length(l).size() == 2);
  // infinite dihedral: each element has a unique (alternating) reduced word
  int u = w.reduce_word({0, 1, 0, 1});
  int v = w.reduce_word({1, 0, 1, 0});
  CHECK(u != v);
  // dihedral Bruhat order compares by length alone
  CHECK(w.bruhat_leq(w.reduce_word({0, 1}), u));
  CHECK(w.bruhat_leq(w.reduce_word({1, 0}), u));
  // inversion roots of s0 s1 s0 s1 climb the ladder (k+1)a0 + k a1
  auto inv = w.inversion_set(u);
  REQUIRE(inv.size() == 4);
  CHECK(inv[0].lattice == LatticeVec{1, 0});
  CHECK(inv[1].lattice == LatticeVec{2, 1});
  CHECK(inv[2].lattice == LatticeVec{3, 2});
  CHECK(inv[3].lattice == LatticeVec{4, 3});
}

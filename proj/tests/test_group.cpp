#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braid/group.hpp"
#include "braid/perm.hpp"
#include "braid/stabchain.hpp"

using namespace braid;

TEST_CASE("group_order basics") {
  // <(1,2),(1,2,3)> = S3
  std::vector<Perm> gens{Perm::from_cycles(3, "(1,2)"), Perm::from_cycles(3, "(1,2,3)")};
  CHECK(group_order(gens) == 6);
  CHECK(group_order({Perm(4)}) == 1);
}

TEST_CASE("stabchain membership and random elements") {
  std::vector<Perm> gens{Perm::from_cycles(5, "(1,2,3,4,5)"), Perm::from_cycles(5, "(1,2,3)")};
  StabChain c(5, gens);
  CHECK(c.order() == 60); // A5
  CHECK(c.contains(Perm::from_cycles(5, "(1,2)(3,4)")));
  CHECK_FALSE(c.contains(Perm::from_cycles(5, "(1,2)")));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) CHECK(c.contains(c.random_element(rng)));
}

TEST_CASE("point stabilizer extraction") {
  std::vector<Perm> gens{Perm::from_cycles(5, "(1,2,3,4,5)"), Perm::from_cycles(5, "(3,4,5)")};
  StabChain c(5, gens, {0});
  CHECK(c.order() == 60);
  CHECK(c.stabilizer_order(1) == 12);
  std::mt19937_64 rng(3);
  auto stab = c.stabilizer_generators(1, rng);
  for (const Perm& g : stab) CHECK(g[0] == 0);
  CHECK(group_order(stab) == 12);
}

TEST_CASE("transitivity and center") {
  FiniteGroup s3(3, {Perm::from_cycles(3, "(1,2)"), Perm::from_cycles(3, "(1,2,3)")}, "s3");
  CHECK(s3.is_transitive());
  CHECK(s3.center_order() == 1);

  // cyclic C4 is its own center
  FiniteGroup c4(4, {Perm::from_cycles(4, "(1,2,3,4)")}, "c4");
  CHECK(c4.center_order() == 4);
  CHECK_THROWS(c4.require_trivial_center());

  FiniteGroup v(4, {Perm::from_cycles(4, "(1,2)(3,4)"), Perm::from_cycles(4, "(1,3)(2,4)")}, "v4");
  CHECK(v.order() == 4);
  CHECK(v.center_order() == 4);
}

TEST_CASE("simultaneous conjugators") {
  Perm a1 = Perm::from_cycles(4, "(1,2)");
  Perm a2 = Perm::from_cycles(4, "(1,2,3,4)");
  Perm t = Perm::from_cycles(4, "(1,3,2)");
  std::vector<Perm> a{a1, a2};
  std::vector<Perm> b{a1.conjugated_by(t), a2.conjugated_by(t)};
  auto sols = simultaneous_conjugators(4, a, b);
  REQUIRE(sols.size() == 1); // S4 has trivial centralizer of a generating pair... exactly t
  CHECK(sols[0] == t);
  // no solution conjugating a 4-cycle to a transposition
  auto none = simultaneous_conjugators(4, {a2}, {a1});
  CHECK(none.empty());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braid/perm.hpp"

using namespace braid;

TEST_CASE("composition is left to right") {
  Perm a = Perm::from_cycles(3, "(1,2)");
  Perm b = Perm::from_cycles(3, "(2,3)");
  Perm ab = a * b;
  // 1 -> 2 -> 3
  CHECK(ab[0] == 2);
  CHECK(ab.to_cycle_string() == "(1,3,2)");
}

TEST_CASE("inverse and conjugation") {
  Perm g = Perm::from_cycles(5, "(1,2,3)(4,5)");
  CHECK((g * g.inverse()).is_identity());
  Perm t = Perm::from_cycles(5, "(1,4)");
  Perm c = g.conjugated_by(t);
  CHECK(c == t.inverse() * g * t);
  CHECK(c.cycle_type() == g.cycle_type());
}

TEST_CASE("order, cycle type, sign") {
  Perm g = Perm::from_cycles(6, "(1,2,3)(4,5)");
  CHECK(g.order() == 6);
  CHECK(g.cycle_type() == std::vector<unsigned>{3, 2, 1});
  CHECK(g.sign() == -1);
  CHECK(g.power(6).is_identity());
  CHECK(g.power(-1) == g.inverse());
  CHECK(Perm(4).sign() == 1);
}

TEST_CASE("worked product convention from the 9-point example") {
  // sigma1 * sigma2 * sigma1 must equal the stated involution
  Perm s1 = Perm::from_cycles(9, "(2,9,4,3,5,7,6)");
  Perm s2 = Perm::from_cycles(9, "(1,4,2,8,7,9,5)");
  Perm s4 = Perm::from_cycles(9, "(1,3)(2,7)(4,5)(6,8)");
  CHECK(s1 * s2 * s1 == s4);
  CHECK(s1 * s2 * s1 == s2 * s1 * s2);
  CHECK((s1 * s2 * s1).order() == 2);
}

TEST_CASE("round trips") {
  Perm g = Perm::from_cycles(9, "(1,3)(2,7)(4,5)(6,8)");
  CHECK(Perm::from_cycles(9, g.to_cycle_string()) == g);
  std::vector<unsigned> imgs;
  for (unsigned i = 0; i < 9; ++i) imgs.push_back((unsigned)g[i] + 1);
  CHECK(Perm::from_images_1based(imgs) == g);
}

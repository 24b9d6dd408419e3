#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "leibkit/cartan.hpp"
#include "leibkit/constructions.hpp"

using namespace leib;

TEST_CASE("an abelian algebra is its own unique Cartan subalgebra") {
  LeibnizAlgebra a = abelian_algebra(FieldSpec::gf(3), 2);
  CHECK(is_cartan(a, Subspace::full(a.field(), 2)));
  CHECK_FALSE(is_cartan(a, Subspace::zero(a.field(), 2)));  // not self-normalizing
  auto result = cartan_subalgebras(a);
  REQUIRE(result.cartans.size() == 1);
  CHECK(result.cartans[0].dim() == 2);
  auto found = find_cartan(a, 4);
  REQUIRE(found.has_value());
  CHECK(*found == Subspace::full(a.field(), 2));
}

TEST_CASE("fitting null component basics") {
  LeibnizAlgebra a = counterexample(2);
  FieldSpec f = a.field();
  CHECK(fitting_null(a, zero_vec(f, 5)) == Subspace::full(f, 5));
  // z acts invertibly on V and kills H, so its null component is H.
  CHECK(fitting_null(a, unit_vec(f, 5, 4)) == heisenberg_H(2));
}

TEST_CASE("the Heisenberg block is a Cartan subalgebra of the Lie variant") {
  LeibnizAlgebra l = heisenberg_example(2);
  Subspace h = heisenberg_H(2);
  CHECK(is_cartan(l, h));
  // span{x, e1} is not closed: x e1 = e2.
  CHECK_THROWS_AS(is_cartan(l, Subspace::span(l.field(), 5,
                                              {unit_vec(l.field(), 5, 2),
                                               unit_vec(l.field(), 5, 0)})),
                  NotASubalgebraError);
}

TEST_CASE("exhaustive and heuristic searches agree on the one-sided algebra") {
  LeibnizAlgebra a = counterexample(2);
  auto result = cartan_subalgebras(a);
  REQUIRE(!result.cartans.empty());
  for (const auto& c : result.cartans) CHECK(is_cartan(a, c));
  auto found = find_cartan(a, 16);
  REQUIRE(found.has_value());
  bool listed = false;
  for (const auto& c : result.cartans) listed = listed || c == *found;
  CHECK(listed);
}

TEST_CASE("heuristic lands on the diagonal line of sl2 over Q") {
  LeibnizAlgebra s = sl2(FieldSpec::rationals());
  auto found = find_cartan(s, 8);
  REQUIRE(found.has_value());
  CHECK(*found ==
        Subspace::span(s.field(), 3, {unit_vec(s.field(), 3, 1)}));  // span(h)
  CHECK(is_cartan(s, *found));
}

TEST_CASE("heuristic over a finite field passes the exhaustive filter") {
  LeibnizAlgebra s = sl2(FieldSpec::gf(5));
  auto found = find_cartan(s, 16);
  REQUIRE(found.has_value());
  CHECK(is_cartan(s, *found));
  auto all = cartan_subalgebras(s);
  bool listed = false;
  for (const auto& c : all.cartans) listed = listed || c == *found;
  CHECK(listed);
}

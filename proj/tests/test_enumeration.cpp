#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "leibkit/constructions.hpp"
#include "leibkit/enumeration.hpp"
#include "leibkit/series.hpp"

using namespace leib;

TEST_CASE("one-dimensional abelian algebra has exactly two subalgebras") {
  LeibnizAlgebra a = abelian_algebra(FieldSpec::gf(2), 1);
  auto subs = all_subalgebras(a);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].dim() == 0);
  CHECK(subs[1].dim() == 1);
}

TEST_CASE("every subspace of an abelian algebra is an ideal") {
  LeibnizAlgebra a = abelian_algebra(FieldSpec::gf(3), 3);
  auto ideals = all_ideals(a);
  CHECK(BigInt(ideals.size()) == total_subspace_count(3, 3));
  auto subs = all_subalgebras(a);
  CHECK(ideals == subs);
}

TEST_CASE("subalgebra sweep results are closed, sorted, and complete") {
  LeibnizAlgebra a = counterexample(2);
  auto subs = all_subalgebras(a);
  for (const auto& s : subs) CHECK(is_subalgebra(a, s));
  for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1] < subs[i]);
  std::set<std::string> seen;
  for (const auto& s : subs) CHECK(seen.insert(s.to_string()).second);
  // Independent recount: raw sweep over every subspace.
  std::size_t brute = 0;
  for (std::size_t k = 0; k <= 5; ++k) {
    SubspaceStream st(a.field(), 5, k);
    while (auto s = st.next()) {
      if (is_subalgebra(a, *s)) ++brute;
    }
  }
  CHECK(subs.size() == brute);
}

TEST_CASE("maximal subalgebras of the one-sided module algebra") {
  // Expected shape: H plus the subalgebras V + M with M maximal in the
  // Heisenberg block; at p = 2 that is 1 + 3 = 4 subalgebras.
  LeibnizAlgebra a = counterexample(2);
  FieldSpec f = a.field();
  auto maxs = maximal_subalgebras(a);
  REQUIRE(maxs.size() == 4);
  Subspace h = heisenberg_H(2);
  Subspace v = Subspace::span(f, 5, {unit_vec(f, 5, 0), unit_vec(f, 5, 1)});
  bool has_h = false;
  for (const auto& m : maxs) {
    if (m == h) {
      has_h = true;
    } else {
      CHECK(m.dim() == 4);
      CHECK(m.contains(v));
    }
  }
  CHECK(has_h);
  // Cross-check maximality against the full lattice.
  auto subs = all_subalgebras(a);
  for (const auto& m : maxs) {
    for (const auto& s : subs) {
      if (s.dim() < 5 && s.contains(m)) CHECK(s == m);
    }
  }
}

TEST_CASE("the module is the unique minimal ideal of the one-sided algebra") {
  LeibnizAlgebra a = counterexample(2);
  FieldSpec f = a.field();
  auto mins = minimal_ideals(a);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0] ==
        Subspace::span(f, 5, {unit_vec(f, 5, 0), unit_vec(f, 5, 1)}));
}

TEST_CASE("simple algebra: the only ideals are 0 and everything") {
  LeibnizAlgebra s = sl2(FieldSpec::gf(5));
  auto ideals = all_ideals(s);
  REQUIRE(ideals.size() == 2);
  auto mins = minimal_ideals(s);
  REQUIRE(mins.size() == 1);
  CHECK(mins[0].dim() == 3);
}

TEST_CASE("complement search returns the unique complement of the module") {
  LeibnizAlgebra a = counterexample(2);
  FieldSpec f = a.field();
  Subspace v = Subspace::span(f, 5, {unit_vec(f, 5, 0), unit_vec(f, 5, 1)});
  auto c = find_complement_subalgebra(a, v);
  REQUIRE(c.has_value());
  CHECK(*c == heisenberg_H(2));
  // Uniqueness, by brute scan.
  std::size_t count = 0;
  for (const auto& s : all_subalgebras(a)) {
    if (s.dim() == 3 && s.intersect(v).dim() == 0) ++count;
  }
  CHECK(count == 1);

  CHECK(find_complement_subalgebra(a, Subspace::zero(f, 5)) ==
        Subspace::full(f, 5));
  CHECK(find_complement_subalgebra(a, Subspace::full(f, 5)) ==
        Subspace::zero(f, 5));
}

TEST_CASE("nilpotent block has no complement to its centre") {
  LeibnizAlgebra h =
      restrict_to(heisenberg_example(2), heisenberg_H(2)).algebra;
  Subspace z = center(h);
  REQUIRE(z.dim() == 1);
  // z = H^2 lies in every maximal subalgebra, so no proper complement can
  // close up: the only candidate dimension is 2 and all of those contain z
  // or fail to close.
  auto c = find_complement_subalgebra(h, z);
  CHECK_FALSE(c.has_value());
}

TEST_CASE("filtered sweeps are worker-count invariant") {
  FieldSpec f = FieldSpec::gf(3);
  auto pred = [](const Subspace& s) {
    return s.dim() == 0 || !s.basis().at(0, 0).is_zero();
  };
  EnumerationGuard one, many;
  many.workers = 4;
  auto r1 = filter_subspaces(f, 4, 0, 4, pred, one);
  auto r4 = filter_subspaces(f, 4, 0, 4, pred, many);
  CHECK(r1 == r4);
  CHECK(!r1.empty());

  LeibnizAlgebra a = counterexample(2);
  clear_enumeration_cache();
  auto s1 = all_subalgebras(a, one);
  clear_enumeration_cache();
  auto s4 = all_subalgebras(a, many);
  CHECK(s1 == s4);
}

TEST_CASE("cached sweeps survive repeated calls") {
  LeibnizAlgebra a = heisenberg_example(2);
  auto first = all_subalgebras(a);
  auto second = all_subalgebras(a);
  CHECK(first == second);
  auto ideals1 = all_ideals(a);
  auto ideals2 = all_ideals(a);
  CHECK(ideals1 == ideals2);
}

TEST_CASE("guard threading through the sweep entry points") {
  LeibnizAlgebra a = counterexample(3);  // dim 6 over GF(3)
  EnumerationGuard tiny;
  tiny.max_subspaces = 100;
  clear_enumeration_cache();
  CHECK_THROWS_AS(all_subalgebras(a, tiny), ResourceGuardError);
  clear_enumeration_cache();
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "leibkit/constructions.hpp"
#include "leibkit/radicals.hpp"

using namespace leib;

namespace {

Subspace module_v(const FieldSpec& f, std::size_t p, std::size_t dim) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < p; ++i) gens.push_back(unit_vec(f, dim, i));
  return Subspace::span(f, dim, gens);
}

}  // namespace

TEST_CASE("nilpotent algebras are their own nilradical") {
  LeibnizAlgebra a = abelian_algebra(FieldSpec::rationals(), 3);
  CHECK(nilradical(a) == Subspace::full(a.field(), 3));
  CHECK(solvable_radical(a) == Subspace::full(a.field(), 3));
  LeibnizAlgebra b = abelian_algebra(FieldSpec::gf(2), 3);
  CHECK(socle(b) == Subspace::full(b.field(), 3));
  CHECK(abelian_socle(b) == Subspace::full(b.field(), 3));
}

TEST_CASE("one-sided module algebra: radicals and socle all collapse to V") {
  LeibnizAlgebra a = counterexample(2);
  FieldSpec f = a.field();
  Subspace v = module_v(f, 2, 5);
  CHECK(nilradical(a) == v);
  CHECK(solvable_radical(a) == Subspace::full(f, 5));  // solvable algebra
  CHECK(socle(a) == v);
  CHECK(abelian_socle(a) == v);
  CHECK_FALSE(is_semisimple(a));
}

TEST_CASE("the Lie variant also has nilradical V") {
  // The dim-3 block square is V + span(z); z acts as the identity on V, so
  // no nilpotent ideal sticks out of V.
  LeibnizAlgebra l = heisenberg_example(2);
  CHECK(nilradical(l) == module_v(l.field(), 2, 5));
}

TEST_CASE("Frattini data of the one-sided module algebra") {
  LeibnizAlgebra a = counterexample(2);
  FieldSpec f = a.field();
  FrattiniData fd = frattini(a);
  CHECK(fd.backend == Backend::Exhaustive);
  CHECK(fd.maximal_subalgebras.size() == 4);
  CHECK(fd.F == Subspace::span(f, 5, {unit_vec(f, 5, 4)}));  // span(z)
  CHECK_FALSE(fd.f_is_ideal);
  CHECK(fd.Phi.dim() == 0);
}

TEST_CASE("Frattini data of the Lie variant and its block") {
  LeibnizAlgebra l = heisenberg_example(2);
  FieldSpec f = l.field();
  FrattiniData fl = frattini(l);
  CHECK(fl.F.dim() == 0);
  CHECK(fl.Phi.dim() == 0);
  CHECK(fl.f_is_ideal);  // the zero subspace is an ideal

  LeibnizAlgebra h = restrict_to(l, heisenberg_H(2)).algebra;
  FrattiniData fh = frattini(h);
  CHECK(fh.F == Subspace::span(f, 3, {unit_vec(f, 3, 2)}));  // span(z)
  CHECK(fh.Phi == fh.F);
  CHECK(fh.f_is_ideal);
}

TEST_CASE("two-dimensional abelian algebra over GF(2): three lines meet in 0") {
  LeibnizAlgebra a = abelian_algebra(FieldSpec::gf(2), 2);
  FrattiniData fd = frattini(a);
  CHECK(fd.maximal_subalgebras.size() == 3);
  CHECK(fd.F.dim() == 0);
}

TEST_CASE("certificate route bounds the Frattini subalgebra over Q") {
  FieldSpec q = FieldSpec::rationals();
  LeibnizAlgebra a =
      type2(make_type2_spec(q, 1, 1, {1}, Type2Spec::RightMode::Negate), q);
  // Every line is a subalgebra here, hence maximal; three of them meet in 0.
  std::vector<Subspace> cert = {
      Subspace::span(q, 2, {unit_vec(q, 2, 0)}),
      Subspace::span(q, 2, {unit_vec(q, 2, 1)}),
      Subspace::span(q, 2, {vec_add(unit_vec(q, 2, 0), unit_vec(q, 2, 1))}),
  };
  Subspace bound = frattini_upper_bound(a, cert);
  CHECK(bound.dim() == 0);
  CHECK(is_ideal(a, bound));

  SUBCASE("non-subalgebra members are rejected") {
    LeibnizAlgebra s = sl2(q);
    std::vector<Subspace> bad = {
        Subspace::span(q, 3, {unit_vec(q, 3, 0), unit_vec(q, 3, 2)})};
    CHECK_THROWS_AS(frattini_upper_bound(s, bad), CertificateError);
  }
  SUBCASE("deep members need a finite field to certify maximality") {
    std::vector<Subspace> deep = {Subspace::zero(q, 2)};
    CHECK_THROWS_AS(frattini_upper_bound(a, deep), CertificateError);
  }
}

TEST_CASE("elementary detection with witnesses") {
  LeibnizAlgebra l = heisenberg_example(2);
  ElementaryResult r = is_elementary(l);
  CHECK_FALSE(r.elementary);
  REQUIRE(r.witness.has_value());
  // The witness subalgebra really does have a nonzero Frattini ideal.
  auto rs = restrict_to(l, *r.witness);
  CHECK(frattini(rs.algebra).Phi.dim() != 0);

  CHECK(is_elementary(abelian_algebra(FieldSpec::gf(3), 2)).elementary);
  CHECK_FALSE(is_elementary(counterexample(2)).elementary);
}

TEST_CASE("solvable fast path agrees with the exhaustive answer") {
  for (auto a : {heisenberg_example(2), counterexample(2),
                 abelian_algebra(FieldSpec::gf(2), 3)}) {
    CHECK(is_elementary_solvable_fast(a) == is_elementary(a).elementary);
  }
  CHECK_THROWS_AS(is_elementary_solvable_fast(sl2(FieldSpec::gf(5))),
                  NotSolvableError);
}

TEST_CASE("semisimple detection") {
  CHECK(is_semisimple(sl2(FieldSpec::gf(5))));
  CHECK(solvable_radical(sl2(FieldSpec::gf(5))).dim() == 0);
  CHECK_FALSE(is_semisimple(heisenberg_example(2)));
}

TEST_CASE("semisimple modules are sums of minimal ideals") {
  LeibnizAlgebra a = counterexample(2);
  FieldSpec f = a.field();
  Subspace v = module_v(f, 2, 5);
  CHECK(is_semisimple_module(a, v));
  CHECK(is_semisimple_module(a, Subspace::zero(f, 5)));
  CHECK_FALSE(is_semisimple_module(a, Subspace::full(f, 5)));
  CHECK_THROWS_AS(is_semisimple_module(a, heisenberg_H(2)), NotAnIdealError);
}

TEST_CASE("infinite-field sweeps are refused, not faked") {
  LeibnizAlgebra s = sl2(FieldSpec::rationals());
  CHECK_THROWS_AS(nilradical(s), UnsupportedBackendError);
  CHECK_THROWS_AS(frattini(s), UnsupportedBackendError);
  CHECK_THROWS_AS(is_elementary(s), UnsupportedBackendError);
}

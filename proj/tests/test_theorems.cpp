#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "leibkit/theorems.hpp"

using namespace leib;

namespace {

LeibnizAlgebra heis_H(std::int64_t p) {
  return restrict_to(heisenberg_example(p), heisenberg_H(p)).algebra;
}

CheckStatus status_of(const std::string& name, const LeibnizAlgebra& a) {
  auto r = run_check(name, a);
  REQUIRE(r.has_value());
  return r->status;
}

}  // namespace

TEST_CASE("check registry") {
  auto names = check_names();
  CHECK(names.size() == 13);
  std::set<std::string> unique(names.begin(), names.end());
  CHECK(unique.size() == names.size());
  CHECK_FALSE(run_check("bogus", abelian_algebra(FieldSpec::gf(2), 1)).has_value());
}

TEST_CASE("minimal-ideal checks on the standard examples") {
  CHECK(status_of("minimal_ideal_dichotomy", counterexample(2)) == CheckStatus::Pass);
  CHECK(status_of("minimal_ideal_dichotomy", heisenberg_example(2)) == CheckStatus::Pass);
  CHECK(status_of("minimal_ideal_central", heis_H(2)) == CheckStatus::Pass);
  CHECK(status_of("minimal_ideal_central", counterexample(2)) == CheckStatus::NotApplicable);
  CHECK(status_of("nilradical_centralizer", counterexample(2)) == CheckStatus::Pass);
  CHECK(status_of("nilradical_centralizer", sl2(FieldSpec::gf(3))) == CheckStatus::Pass);
}

TEST_CASE("socle chain and its collapse") {
  CHECK(status_of("socle_chain", abelian_algebra(FieldSpec::gf(2), 2)) == CheckStatus::Pass);
  CHECK(status_of("socle_chain", counterexample(2)) == CheckStatus::Pass);
  CHECK(status_of("socle_chain", sl2(FieldSpec::gf(5))) == CheckStatus::Pass);

  CHECK(status_of("socle_chain_equality", counterexample(2)) == CheckStatus::Pass);
  CHECK(status_of("socle_chain_equality", heisenberg_example(2)) == CheckStatus::Pass);
  // Nonzero Frattini ideal in the nilpotent block: hypothesis fails.
  auto na = run_check("socle_chain_equality", heis_H(2));
  REQUIRE(na.has_value());
  CHECK(na->status == CheckStatus::NotApplicable);
  CHECK_FALSE(na->detail.empty());
}

TEST_CASE("abelian socle complements") {
  CHECK(status_of("abelian_socle_complement", counterexample(2)) == CheckStatus::Pass);
  CHECK(status_of("abelian_socle_complement", abelian_algebra(FieldSpec::gf(3), 2)) == CheckStatus::Pass);
  CHECK(status_of("abelian_socle_complement", heis_H(2)) == CheckStatus::NotApplicable);
}

TEST_CASE("nilradical through the Frattini quotient") {
  CHECK(status_of("nilradical_mod_frattini", counterexample(2)) == CheckStatus::Pass);
  CHECK(status_of("nilradical_mod_frattini", heis_H(2)) == CheckStatus::Pass);
  CHECK(status_of("nilradical_mod_frattini", abelian_algebra(FieldSpec::gf(2), 3)) == CheckStatus::Pass);
}

TEST_CASE("square complements and Cartan subalgebras") {
  FieldSpec f3 = FieldSpec::gf(3);
  LeibnizAlgebra t2 = type2(make_type2_spec(f3, 1, 1, {1}, Type2Spec::RightMode::Negate), f3);
  CHECK(status_of("square_complement_cartan", t2) == CheckStatus::Pass);
  CHECK(status_of("square_complement_cartan", abelian_algebra(f3, 2)) == CheckStatus::Pass);
  CHECK(status_of("square_complement_cartan", counterexample(2)) == CheckStatus::NotApplicable);
  CHECK(status_of("square_complement_cartan", heis_H(2)) == CheckStatus::Pass);
}

TEST_CASE("elementary equivalences") {
  CHECK(status_of("elementary_equivalences", abelian_algebra(FieldSpec::gf(2), 2)) == CheckStatus::Pass);
  CHECK(status_of("elementary_equivalences", counterexample(2)) == CheckStatus::Pass);
  CHECK(status_of("elementary_equivalences", heisenberg_example(2)) == CheckStatus::Pass);
  CHECK(status_of("elementary_equivalences", sl2(FieldSpec::gf(5))) == CheckStatus::NotApplicable);

  FieldSpec f3 = FieldSpec::gf(3);
  Matrix d(f3, 2, 2);
  d.at(0, 0) = Scalar::one(f3);
  d.at(1, 1) = Scalar::of(f3, 2);
  Type1Spec spec{2, {d}};
  LeibnizAlgebra star =
      type_star(spec, Subspace::span(f3, 3, {unit_vec(f3, 3, 0)}),
                Subspace::span(f3, 3, {unit_vec(f3, 3, 1)}));
  CHECK(status_of("elementary_equivalences", star) == CheckStatus::Pass);
  CHECK(is_elementary(star).elementary);  // zeroing one right action preserves elementarity
}

TEST_CASE("Frattini monotonicity under the nilpotent-square hypothesis") {
  CHECK(status_of("frattini_monotone", abelian_algebra(FieldSpec::gf(2), 3)) == CheckStatus::Pass);
  CHECK(status_of("frattini_monotone", heis_H(2)) == CheckStatus::Pass);
  // The full Lie variant has a non-nilpotent square: its block's nonzero
  // Frattini ideal never has to embed into the trivial one.
  CHECK(status_of("frattini_monotone", heisenberg_example(2)) == CheckStatus::NotApplicable);
}

TEST_CASE("minimal supplements and quotient Frattini computations") {
  CHECK(status_of("minimal_supplement", counterexample(2)) == CheckStatus::Pass);
  CHECK(status_of("minimal_supplement", heis_H(2)) == CheckStatus::Pass);
  CHECK(status_of("quotient_frattini", heis_H(2)) == CheckStatus::Pass);
  CHECK(status_of("quotient_frattini", abelian_algebra(FieldSpec::gf(2), 2)) == CheckStatus::Pass);
}

TEST_CASE("rational Frattini ideal check demands a certificate and Q") {
  FieldSpec q = FieldSpec::rationals();
  LeibnizAlgebra t2 = type2(make_type2_spec(q, 1, 1, {1}, Type2Spec::RightMode::Negate), q);
  CHECK(check_rational_frattini_ideal(t2, {}).status == CheckStatus::Unsupported);
  std::vector<Subspace> cert = {
      Subspace::span(q, 2, {unit_vec(q, 2, 0)}),
      Subspace::span(q, 2, {unit_vec(q, 2, 1)}),
      Subspace::span(q, 2, {vec_add(unit_vec(q, 2, 0), unit_vec(q, 2, 1))}),
  };
  CHECK(check_rational_frattini_ideal(t2, cert).status == CheckStatus::Pass);
  CHECK(check_rational_frattini_ideal(counterexample(2), cert).status ==
        CheckStatus::NotApplicable);
}

TEST_CASE("full check battery on a small algebra produces no failures") {
  for (const auto& r : run_all_checks(counterexample(2))) {
    CHECK(r.status != CheckStatus::Fail);
    if (r.status == CheckStatus::Fail) MESSAGE(r.name, ": ", r.detail);
  }
}

TEST_CASE("structure report collects the one-sided algebra's profile") {
  LeibnizAlgebra a = counterexample(2);
  FieldSpec f = a.field();
  StructureReport rep = structure_report(a);
  CHECK(rep.dim == 5);
  CHECK_FALSE(rep.lie);
  CHECK_FALSE(rep.nilpotent);
  CHECK(rep.solvable);
  CHECK(rep.derived_length == 3);
  Subspace v = Subspace::span(f, 5, {unit_vec(f, 5, 0), unit_vec(f, 5, 1)});
  CHECK(rep.left_center == v);
  REQUIRE(rep.nil.has_value());
  CHECK(*rep.nil == v);
  REQUIRE(rep.frattini_subalgebra.has_value());
  CHECK(*rep.frattini_subalgebra == Subspace::span(f, 5, {unit_vec(f, 5, 4)}));
  REQUIRE(rep.frattini_subalgebra_is_ideal.has_value());
  CHECK_FALSE(*rep.frattini_subalgebra_is_ideal);
  REQUIRE(rep.frattini_ideal.has_value());
  CHECK(rep.frattini_ideal->dim() == 0);
  REQUIRE(rep.maximal_subalgebra_count.has_value());
  CHECK(*rep.maximal_subalgebra_count == 4);
  REQUIRE(rep.elementary.has_value());
  CHECK_FALSE(*rep.elementary);
  CHECK(rep.unsupported_reason.empty());
}

TEST_CASE("structure report degrades honestly over the rationals") {
  StructureReport rep = structure_report(sl2(FieldSpec::rationals()));
  CHECK(rep.lie);
  CHECK_FALSE(rep.solvable);
  CHECK_FALSE(rep.nil.has_value());
  CHECK_FALSE(rep.frattini_subalgebra.has_value());
  CHECK_FALSE(rep.elementary.has_value());
  CHECK_FALSE(rep.unsupported_reason.empty());
}

TEST_CASE("corpus composition") {
  auto corpus = standard_corpus();
  std::set<std::string> names;
  std::size_t small_finite = 0, solvable_count = 0;
  for (const auto& [name, algebra] : corpus) {
    CHECK(names.insert(name).second);
    CHECK(algebra.validated());
    CHECK_FALSE(leibniz_violation(algebra).has_value());
    std::int64_t p = algebra.field().characteristic();
    if ((p == 2 || p == 3) && algebra.dim() <= 6) ++small_finite;
    if (is_solvable(algebra)) ++solvable_count;
  }
  CHECK(small_finite >= 50);
  CHECK(solvable_count >= 20);
}

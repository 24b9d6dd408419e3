#pragma once

#include "leibkit/cartan.hpp"
#include "leibkit/constructions.hpp"
#include "leibkit/radicals.hpp"

namespace leib {

enum class CheckStatus { Pass, Fail, NotApplicable, Unsupported };
std::string to_string(CheckStatus s);

/// Outcome of one structural check.  Fail carries a witness description;
/// NotApplicable names the hypothesis that failed.
struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

/// Every minimal ideal B satisfies BA = 0 or ba = -ab for all a, b.
CheckResult check_minimal_ideal_dichotomy(const LeibnizAlgebra& a,
                                          const EnumerationGuard& guard = {});

/// In a nilpotent algebra every minimal ideal meets the centre nontrivially,
/// hence lies inside it.
CheckResult check_minimal_ideal_central(const LeibnizAlgebra& a,
                                        const EnumerationGuard& guard = {});

/// Nil(A) centralizes every minimal ideal.
CheckResult check_nilradical_centralizer(const LeibnizAlgebra& a,
                                         const EnumerationGuard& guard = {});

/// Asoc(A) subseteq Nil(A) subseteq Z_A(Soc(A)); the three subspaces are
/// computed by independent routes before the containment test.
CheckResult check_socle_chain(const LeibnizAlgebra& a,
                              const EnumerationGuard& guard = {});

/// When Phi(A) = 0 the chain collapses: Asoc = Nil = Z_A(Soc).
CheckResult check_socle_chain_equality(const LeibnizAlgebra& a,
                                       const EnumerationGuard& guard = {});

/// When Phi(A) = 0, Asoc(A) has a complementary subalgebra which is Lie.
CheckResult check_abelian_socle_complement(const LeibnizAlgebra& a,
                                           const EnumerationGuard& guard = {});

/// The image of Nil(A) in A/Phi(A) is Asoc(A/Phi(A)).
CheckResult check_nilradical_mod_frattini(const LeibnizAlgebra& a,
                                          const EnumerationGuard& guard = {});

/// For A with A^2 nilpotent: Phi(A) = 0, "Nil = Soc complemented", and
/// "A^2 abelian semisimple-module complemented" are equivalent, and when they
/// hold the complements of A^2 are exactly the Cartan subalgebras.
CheckResult check_square_complement_cartan(const LeibnizAlgebra& a,
                                           const EnumerationGuard& guard = {});

/// Solvable A: elementary <=> (Phi=0 and A^2 nilpotent) <=> (Phi=0 and
/// metabelian) <=> (Asoc complemented by an abelian subalgebra).  A found
/// abelian-plus-type-I splitting (searched at dim <= 5) must imply
/// elementarity.
CheckResult check_elementary_equivalences(const LeibnizAlgebra& a,
                                          const EnumerationGuard& guard = {});

/// When A^2 is nilpotent, Phi(M) subseteq Phi(A) for every subalgebra M.
CheckResult check_frattini_monotone(const LeibnizAlgebra& a,
                                    const EnumerationGuard& guard = {});

/// For every ideal B and subalgebra U minimal with A = B + U:
/// B intersect U subseteq Phi(U).
CheckResult check_minimal_supplement(const LeibnizAlgebra& a,
                                     const EnumerationGuard& guard = {});

/// For every ideal B inside F(A): F(A/B) is the image of F(A).
CheckResult check_quotient_frattini(const LeibnizAlgebra& a,
                                    const EnumerationGuard& guard = {});

/// Over Q only: given a certified maximal-subalgebra list whose intersection
/// is the claimed F(A), checks that the candidate is an ideal.  Unsupported
/// without a certificate; refuses finite fields, where the statement fails.
CheckResult check_rational_frattini_ideal(
    const LeibnizAlgebra& a, const std::vector<Subspace>& certificate,
    const EnumerationGuard& guard = {});

/// Registry used by the CLI: stable order, stable names.
std::vector<std::string> check_names();
/// Runs one check by name; nullopt for an unknown name.  The rational
/// Frattini check runs certificate-free and reports Unsupported.
std::optional<CheckResult> run_check(const std::string& name,
                                     const LeibnizAlgebra& a,
                                     const EnumerationGuard& guard = {});
std::vector<CheckResult> run_all_checks(const LeibnizAlgebra& a,
                                        const EnumerationGuard& guard = {});

/// Full invariant profile of one algebra.  The enumeration-backed block is
/// absent (with a reason) over infinite fields or when the guard refuses.
struct StructureReport {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::string> labels;

  Subspace square;
  std::vector<Subspace> lower_central, derived, upper_central;
  Subspace center, left_center;

  bool lie = false;
  bool nilpotent = false;
  std::size_t nilpotency_class = 0;
  bool solvable = false;
  std::size_t derived_length = 0;
  bool metabelian = false;

  std::optional<Subspace> nil, rad, soc, asoc, frattini_subalgebra,
      frattini_ideal;
  std::optional<bool> frattini_subalgebra_is_ideal, semisimple, elementary;
  std::optional<std::size_t> maximal_subalgebra_count, cartan_count;
  std::string unsupported_reason;  // nonempty iff the optional block is absent

  StructureReport() : square(Subspace::zero(FieldSpec::rationals(), 0)),
                      center(square), left_center(square) {}
};

StructureReport structure_report(const LeibnizAlgebra& a,
                                 const EnumerationGuard& guard = {});

struct NamedAlgebra {
  std::string name;
  LeibnizAlgebra algebra;
};

/// Deterministic test corpus: the builders at small parameters, their
/// subalgebras and quotients, direct sums, and seeded pseudorandom
/// semidirect sums, all validated.
std::vector<NamedAlgebra> standard_corpus();

}  // namespace leib

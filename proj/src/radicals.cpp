#include "leibkit/radicals.hpp"

namespace leib {

Subspace nilradical(const LeibnizAlgebra& a, const EnumerationGuard& guard) {
  if (is_nilpotent(a)) return Subspace::full(a.field(), a.dim());
  if (!a.field().is_prime_field()) {
    throw UnsupportedBackendError(
        "nilradical of a non-nilpotent algebra needs a finite field");
  }
  Subspace acc = Subspace::zero(a.field(), a.dim());
  for (const auto& i : all_ideals(a, guard)) {
    if (acc.contains(i)) continue;
    if (is_nilpotent(restrict_to(a, i).algebra)) acc = acc + i;
  }
  // The sum of nilpotent ideals is nilpotent; assert it on the result.
  if (!is_nilpotent(restrict_to(a, acc).algebra)) {
    throw Error("internal: nilradical candidate is not nilpotent");
  }
  return acc;
}

Subspace solvable_radical(const LeibnizAlgebra& a,
                          const EnumerationGuard& guard) {
  if (is_solvable(a)) return Subspace::full(a.field(), a.dim());
  if (!a.field().is_prime_field()) {
    throw UnsupportedBackendError(
        "solvable radical of a non-solvable algebra needs a finite field");
  }
  Subspace acc = Subspace::zero(a.field(), a.dim());
  for (const auto& i : all_ideals(a, guard)) {
    if (acc.contains(i)) continue;
    if (is_solvable(restrict_to(a, i).algebra)) acc = acc + i;
  }
  if (!is_solvable(restrict_to(a, acc).algebra)) {
    throw Error("internal: radical candidate is not solvable");
  }
  return acc;
}

bool is_semisimple(const LeibnizAlgebra& a, const EnumerationGuard& guard) {
  return solvable_radical(a, guard).dim() == 0;
}

Subspace socle(const LeibnizAlgebra& a, const EnumerationGuard& guard) {
  Subspace acc = Subspace::zero(a.field(), a.dim());
  for (const auto& b : minimal_ideals(a, guard)) acc = acc + b;
  return acc;
}

Subspace abelian_socle(const LeibnizAlgebra& a, const EnumerationGuard& guard) {
  Subspace acc = Subspace::zero(a.field(), a.dim());
  for (const auto& b : minimal_ideals(a, guard)) {
    if (is_abelian(restrict_to(a, b).algebra)) acc = acc + b;
  }
  return acc;
}

FrattiniData frattini(const LeibnizAlgebra& a, const EnumerationGuard& guard) {
  std::vector<Subspace> maxs = maximal_subalgebras(a, guard);
  // Intersection over an empty list is the whole algebra by convention.
  Subspace f = Subspace::full(a.field(), a.dim());
  for (const auto& m : maxs) f = f.intersect(m);
  Subspace phi = largest_ideal_inside(a, f);
  bool f_ideal = is_ideal(a, f);
  return FrattiniData{std::move(maxs), std::move(f), std::move(phi), f_ideal,
                      Backend::Exhaustive};
}

Subspace frattini_upper_bound(const LeibnizAlgebra& a,
                              const std::vector<Subspace>& mlist,
                              const EnumerationGuard& guard) {
  Subspace bound = Subspace::full(a.field(), a.dim());
  for (const auto& m : mlist) {
    if (m.dim() >= a.dim() || !is_subalgebra(a, m)) {
      throw CertificateError("certificate member is not a proper subalgebra");
    }
    if (m.dim() + 1 == a.dim()) {
      // Codimension-1 subalgebras are automatically maximal.
    } else if (a.field().is_prime_field()) {
      // Maximality is decidable here: adjoining any outside vector must
      // generate the whole algebra.
      auto st = enumerate_subspaces(a.field(), a.dim(), 1, guard);
      while (auto line = st.next()) {
        if (m.contains(*line)) continue;
        if (subalgebra_closure(a, m + *line).dim() != a.dim()) {
          throw CertificateError("certificate member is not maximal");
        }
      }
    } else {
      throw CertificateError(
          "cannot certify maximality of a codimension >= 2 subalgebra over "
          "an infinite field");
    }
    bound = bound.intersect(m);
  }
  return bound;
}

ElementaryResult is_elementary(const LeibnizAlgebra& a,
                               const EnumerationGuard& guard) {
  for (const auto& s : all_subalgebras(a, guard)) {
    auto r = restrict_to(a, s);
    if (frattini(r.algebra, guard).Phi.dim() != 0) {
      return ElementaryResult{false, s};
    }
  }
  return ElementaryResult{true, std::nullopt};
}

bool is_elementary_solvable_fast(const LeibnizAlgebra& a,
                                 const EnumerationGuard& guard) {
  if (!is_solvable(a)) {
    throw NotSolvableError("fast elementary path requires a solvable algebra");
  }
  if (frattini(a, guard).Phi.dim() != 0) return false;
  Subspace sq = algebra_square(a);
  return is_nilpotent(restrict_to(a, sq).algebra);
}

bool is_semisimple_module(const LeibnizAlgebra& a, const Subspace& w,
                          const EnumerationGuard& guard) {
  if (!is_ideal(a, w)) {
    throw NotAnIdealError("semisimple-module test requires an ideal");
  }
  Subspace acc = Subspace::zero(a.field(), a.dim());
  for (const auto& b : minimal_ideals(a, guard)) {
    if (w.contains(b)) acc = acc + b;
  }
  return acc == w;
}

}  // namespace leib

#pragma once

#include "leibkit/enumeration.hpp"
#include "leibkit/series.hpp"

namespace leib {

enum class Backend { Exhaustive, Certificate };

struct FrattiniData {
  std::vector<Subspace> maximal_subalgebras;
  Subspace F;    // intersection of all maximal subalgebras
  Subspace Phi;  // largest ideal inside F
  bool f_is_ideal = false;
  Backend backend = Backend::Exhaustive;
};

/// Largest nilpotent ideal.  Exhaustive over prime fields; over Q only the
/// nilpotent fast path (Nil(A) = A) is supported.
Subspace nilradical(const LeibnizAlgebra& a, const EnumerationGuard& guard = {});

/// Largest solvable ideal.
Subspace solvable_radical(const LeibnizAlgebra& a,
                          const EnumerationGuard& guard = {});
bool is_semisimple(const LeibnizAlgebra& a, const EnumerationGuard& guard = {});

/// Sum of all minimal ideals.
Subspace socle(const LeibnizAlgebra& a, const EnumerationGuard& guard = {});
/// Sum of all abelian minimal ideals.
Subspace abelian_socle(const LeibnizAlgebra& a,
                       const EnumerationGuard& guard = {});

FrattiniData frattini(const LeibnizAlgebra& a,
                      const EnumerationGuard& guard = {});

/// Certificate route for any field: intersects a caller-supplied list of
/// verified maximal subalgebras, an upper bound for F(A).  Codimension-1
/// subalgebras certify themselves; anything deeper needs a prime field.
Subspace frattini_upper_bound(const LeibnizAlgebra& a,
                              const std::vector<Subspace>& mlist,
                              const EnumerationGuard& guard = {});

struct ElementaryResult {
  bool elementary;
  std::optional<Subspace> witness;  // first subalgebra with nonzero Phi
};

/// Frattini ideal of every subalgebra is zero (exhaustive sweep).
ElementaryResult is_elementary(const LeibnizAlgebra& a,
                               const EnumerationGuard& guard = {});

/// Phi(A) = 0 and A^2 nilpotent; the solvable fast path over a perfect field.
bool is_elementary_solvable_fast(const LeibnizAlgebra& a,
                                 const EnumerationGuard& guard = {});

/// W equals the sum of the minimal ideals of a contained in W.
bool is_semisimple_module(const LeibnizAlgebra& a, const Subspace& w,
                          const EnumerationGuard& guard = {});

}  // namespace leib

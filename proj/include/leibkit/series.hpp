#pragma once

#include "leibkit/algebra.hpp"

namespace leib {

/// A canonical descending (or ascending) chain of subspaces, recorded up to
/// and including its stabilisation point.
struct SeriesProfile {
  std::vector<Subspace> terms;
  bool stabilized = true;
  std::size_t length() const { return terms.size(); }
};

/// A^1 = A, A^{n+1} = A A^n; recorded until the terms repeat.
SeriesProfile lower_central_series(const LeibnizAlgebra& a);

/// A, A^(1) = span(A A), A^(i+1) = span(A^(i) A^(i)), until repetition.
SeriesProfile derived_series(const LeibnizAlgebra& a);

/// Z_0 = 0, Z_{i+1} = preimage of the centre of A/Z_i; ascending.
SeriesProfile upper_central_series(const LeibnizAlgebra& a);

struct NilpotencyResult {
  bool nilpotent;
  std::size_t cls = 0;  // meaningful iff nilpotent (0 for the zero algebra)
};
NilpotencyResult nilpotency(const LeibnizAlgebra& a);
bool is_nilpotent(const LeibnizAlgebra& a);

struct SolvabilityResult {
  bool solvable;
  std::size_t derived_length = 0;  // meaningful iff solvable
};
SolvabilityResult solvability(const LeibnizAlgebra& a);
bool is_solvable(const LeibnizAlgebra& a);

Subspace center(const LeibnizAlgebra& a);
Subspace left_center(const LeibnizAlgebra& a);

/// (A^2)^2 = 0.
bool is_metabelian(const LeibnizAlgebra& a);

bool is_abelian(const LeibnizAlgebra& a);

}  // namespace leib

#include "leibkit/series.hpp"

namespace leib {

SeriesProfile lower_central_series(const LeibnizAlgebra& a) {
  SeriesProfile s;
  Subspace cur = Subspace::full(a.field(), a.dim());
  s.terms.push_back(cur);
  Subspace whole = cur;
  for (;;) {
    Subspace next = subspace_product(a, whole, cur);
    if (next == cur) break;
    s.terms.push_back(next);
    cur = next;
  }
  return s;
}

SeriesProfile derived_series(const LeibnizAlgebra& a) {
  SeriesProfile s;
  Subspace cur = Subspace::full(a.field(), a.dim());
  s.terms.push_back(cur);
  for (;;) {
    Subspace next = subspace_product(a, cur, cur);
    if (next == cur) break;
    s.terms.push_back(next);
    cur = next;
  }
  return s;
}

SeriesProfile upper_central_series(const LeibnizAlgebra& a) {
  SeriesProfile s;
  Subspace cur = Subspace::zero(a.field(), a.dim());
  s.terms.push_back(cur);
  for (;;) {
    // Z_{i+1} is the preimage of the centre of A/Z_i.
    auto q = quotient(a, cur);
    Subspace zbar = center(q.algebra);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < cur.dim(); ++i) gens.push_back(cur.basis_row(i));
    // Lift through the projection: quotient coordinate r corresponds to the
    // standard coordinate not pivotal in cur's basis.
    std::vector<std::size_t> nonpivot;
    {
      std::size_t pi = 0;
      for (std::size_t c = 0; c < a.dim(); ++c) {
        if (pi < cur.pivots().size() && cur.pivots()[pi] == c) { ++pi; continue; }
        nonpivot.push_back(c);
      }
    }
    for (std::size_t i = 0; i < zbar.dim(); ++i) {
      Vec lift = zero_vec(a.field(), a.dim());
      for (std::size_t c = 0; c < zbar.ambient_dim(); ++c) {
        lift[nonpivot[c]] = zbar.basis().at(i, c);
      }
      gens.push_back(std::move(lift));
    }
    Subspace next = Subspace::span(a.field(), a.dim(), gens);
    if (next == cur) break;
    s.terms.push_back(next);
    cur = next;
  }
  return s;
}

NilpotencyResult nilpotency(const LeibnizAlgebra& a) {
  SeriesProfile s = lower_central_series(a);
  if (s.terms.back().dim() != 0) return {false, 0};
  return {true, s.terms.size() - 1};
}

bool is_nilpotent(const LeibnizAlgebra& a) { return nilpotency(a).nilpotent; }

SolvabilityResult solvability(const LeibnizAlgebra& a) {
  SeriesProfile s = derived_series(a);
  if (s.terms.back().dim() != 0) return {false, 0};
  return {true, s.terms.size() - 1};
}

bool is_solvable(const LeibnizAlgebra& a) { return solvability(a).solvable; }

Subspace center(const LeibnizAlgebra& a) {
  return centralizer(a, Subspace::full(a.field(), a.dim()));
}

Subspace left_center(const LeibnizAlgebra& a) {
  return left_centralizer(a, Subspace::full(a.field(), a.dim()));
}

bool is_metabelian(const LeibnizAlgebra& a) {
  Subspace sq = algebra_square(a);
  return subspace_product(a, sq, sq).dim() == 0;
}

bool is_abelian(const LeibnizAlgebra& a) {
  return algebra_square(a).dim() == 0;
}

}  // namespace leib

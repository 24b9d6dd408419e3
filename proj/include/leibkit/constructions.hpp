#pragma once

#include "leibkit/algebra.hpp"

namespace leib {

/// Abelian algebra of the given dimension (all products zero).
LeibnizAlgebra abelian_algebra(const FieldSpec& f, std::size_t dim);

/// The solvable Lie algebra L = V + H over GF(p), dim p + 3: V has basis
/// e_1..e_p, H is the Heisenberg algebra span{x, y, z} with [y, x] = z,
/// acting by x e_j = e_{j+1}, y e_j = (j+1) e_{j-1}, z e_j = e_j
/// (subscripts mod p).  Coordinates: e_1..e_p, x, y, z.
LeibnizAlgebra heisenberg_example(std::int64_t p);

/// The H block of heisenberg_example(p) as a subspace (coordinates p..p+2).
Subspace heisenberg_H(std::int64_t p);

/// K = (I + R_{e_1}) H inside heisenberg_example(p); a maximal subalgebra,
/// meeting H trivially whenever p >= 3 (for p = 2 any two 3-dimensional
/// subalgebras of the 5-dimensional algebra intersect).
Subspace heisenberg_K(std::int64_t p);

/// Same as heisenberg_example but with V H = 0: a non-Lie Leibniz algebra
/// whose Frattini subalgebra is not an ideal.
LeibnizAlgebra counterexample(std::int64_t p);

/// Basis (e, h, f): he = 2e, hf = -2f, ef = h, antisymmetric.  Rejects
/// characteristic 2.
LeibnizAlgebra sl2(const FieldSpec& f);

/// Semidirect sum of an abelian module with an abelian algebra of commuting
/// operators, Lie-style (right action = -left action).
struct Type1Spec {
  std::size_t module_dim;
  std::vector<Matrix> actions;  // one commuting matrix per actor basis element
};
LeibnizAlgebra type1(const Type1Spec& spec);

/// Zeroes the right action on the a2 part of a type-1 algebra's module.
/// a1 and a2 must be complementary ideals spanning the module block.
LeibnizAlgebra type_star(const Type1Spec& spec, const Subspace& a1,
                         const Subspace& a2);

/// Normal form with basis e_1..e_m, f_1..f_n: e_i f_j = lambda_ij f_j and
/// f_j e_i = -lambda_ij f_j or 0 per entry; all other products zero.
struct Type2Spec {
  enum class RightMode { Negate, Zero };
  std::size_t m, n;
  std::vector<Scalar> lambda;          // m x n, row-major
  std::vector<RightMode> right_mode;   // m x n, row-major
  const Scalar& lam(std::size_t i, std::size_t j) const {
    return lambda[i * n + j];
  }
  RightMode mode(std::size_t i, std::size_t j) const {
    return right_mode[i * n + j];
  }
};
LeibnizAlgebra type2(const Type2Spec& spec, const FieldSpec& f);

/// Convenience builder: uniform right mode, small integer lambdas.
Type2Spec make_type2_spec(const FieldSpec& f, std::size_t m, std::size_t n,
                          const std::vector<std::int64_t>& lambda,
                          Type2Spec::RightMode mode);

}  // namespace leib

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibkit/linalg.hpp"

namespace leib {

/// First basis triple (lexicographic) on which the defining identity
/// x(yz) = (xy)z + y(xz) fails.
struct LeibnizViolation {
  int i, j, k;
  bool operator==(const LeibnizViolation&) const = default;
};

/// A finite-dimensional Leibniz algebra given by its structure-constant
/// tensor: b_i b_j = sum_k c[i][j][k] b_k.
class LeibnizAlgebra {
 public:
  /// Validating constructor; throws LeibnizViolationError with the witness
  /// triple if the identity fails on some basis triple.
  static LeibnizAlgebra checked(const FieldSpec& f, std::size_t dim,
                                std::vector<Scalar> tensor,
                                std::vector<std::string> labels = {});
  /// Escape hatch for census generation; the tensor is stored as-is.
  static LeibnizAlgebra unchecked(const FieldSpec& f, std::size_t dim,
                                  std::vector<Scalar> tensor,
                                  std::vector<std::string> labels = {});

  const FieldSpec& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  bool validated() const { return validated_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Scalar& sc(std::size_t i, std::size_t j, std::size_t k) const {
    return tensor_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Scalar>& tensor() const { return tensor_; }

  Vec product(const Vec& x, const Vec& y) const;
  Vec basis_product(std::size_t i, std::size_t j) const;
  Matrix left_mult(const Vec& x) const;   // a -> x a
  Matrix right_mult(const Vec& x) const;  // a -> a x
  Matrix left_mult_basis(std::size_t i) const;

  std::string label(std::size_t i) const;
  /// Deterministic cache key derived from (field, dim, tensor).
  std::string tensor_key() const;

  bool operator==(const LeibnizAlgebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && tensor_ == o.tensor_;
  }

 private:
  LeibnizAlgebra(const FieldSpec& f, std::size_t dim,
                 std::vector<Scalar> tensor, std::vector<std::string> labels,
                 bool validated);
  FieldSpec field_;
  std::size_t dim_;
  std::vector<Scalar> tensor_;
  std::vector<std::string> labels_;
  bool validated_;
};

/// Checks the Leibniz identity on all basis triples (sufficient by
/// bilinearity); nullopt means the tensor defines a Leibniz algebra.
std::optional<LeibnizViolation> leibniz_violation(const FieldSpec& f,
                                                  std::size_t dim,
                                                  const std::vector<Scalar>& tensor);
std::optional<LeibnizViolation> leibniz_violation(const LeibnizAlgebra& a);

/// Antisymmetric product; in characteristic 2 additionally demands vanishing
/// squares (antisymmetry alone does not force alternation there).
bool is_lie(const LeibnizAlgebra& a);

bool is_subalgebra(const LeibnizAlgebra& a, const Subspace& s);
bool is_ideal(const LeibnizAlgebra& a, const Subspace& s);

Subspace subalgebra_closure(const LeibnizAlgebra& a, const Subspace& s);
Subspace ideal_closure(const LeibnizAlgebra& a, const Subspace& s);

/// Largest ideal of a contained in s (s need not be a subalgebra); the
/// descending fixpoint I <- {x in I : Ax + xA subseteq I} starting at s.
Subspace largest_ideal_inside(const LeibnizAlgebra& a, const Subspace& s);

/// Span of all products b_i b_j (the term A^2 of both canonical series).
Subspace algebra_square(const LeibnizAlgebra& a);

/// Subspace products: span{uv : u in s, v in t}.
Subspace subspace_product(const LeibnizAlgebra& a, const Subspace& s,
                          const Subspace& t);

struct AlgebraWithMap {
  LeibnizAlgebra algebra;
  /// Quotients: surjection onto quotient coordinates (k x n).
  /// Restrictions: embedding rows (k x n), the canonical basis of the
  /// subalgebra.
  Matrix map;
};

AlgebraWithMap quotient(const LeibnizAlgebra& a, const Subspace& ideal);
AlgebraWithMap restrict_to(const LeibnizAlgebra& a, const Subspace& subalg);

/// Structure constants of a in the basis given by the rows of new_basis
/// (must be invertible).
LeibnizAlgebra change_basis(const LeibnizAlgebra& a, const Matrix& new_basis);

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b);

/// Algebra on V + H coordinates (module first) with V V = 0,
/// h_i v = left_actions[i] v and v h_i = right_actions[i] v; validated.
LeibnizAlgebra semidirect_sum(const LeibnizAlgebra& h, std::size_t module_dim,
                              const std::vector<Matrix>& left_actions,
                              const std::vector<Matrix>& right_actions);

Subspace normalizer(const LeibnizAlgebra& a, const Subspace& subalg);
Subspace centralizer(const LeibnizAlgebra& a, const Subspace& w);
Subspace left_centralizer(const LeibnizAlgebra& a, const Subspace& w);

}  // namespace leib

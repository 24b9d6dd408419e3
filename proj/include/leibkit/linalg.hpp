#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "leibkit/field.hpp"

namespace leib {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldSpec& f, std::size_t n);
Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);

/// Dense matrix over a single exact field.
class Matrix {
 public:
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows,
                          std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  Vec row(std::size_t r) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-() const;
  Matrix pow(std::size_t e) const;  // square matrices only
  Matrix transpose() const;

  bool operator==(const Matrix& o) const;
  bool is_zero() const;

  /// Row-major lexicographic comparison; used for canonical orderings.
  bool lex_less(const Matrix& o) const;

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> entries_;
};

/// Unique reduced row echelon form (row space preserved).
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

class Subspace;

/// {v : m v = 0}, canonical.
Subspace kernel(const Matrix& m);

/// Solve m^T x = v viewing the rows of m as a generating set; returns the
/// coefficient vector if v lies in the row space.
std::optional<Vec> solve_in_row_space(const Matrix& rows, const Vec& v);

/// A subspace of a coordinate space, held as its canonical RREF basis.
/// Equality of subspaces is literal equality of canonical bases.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& f, std::size_t ambient);
  static Subspace full(const FieldSpec& f, std::size_t ambient);
  static Subspace span(const FieldSpec& f, std::size_t ambient,
                       const std::vector<Vec>& gens);
  static Subspace span(const Matrix& gens);

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }

  /// dim x ambient matrix in RREF, pivot columns strictly increasing.
  const Matrix& basis() const { return basis_; }
  Vec basis_row(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Residual of v after reduction by the basis; zero iff contained.
  Vec reduce(const Vec& v) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  Subspace intersect(const Subspace& other) const;  // Zassenhaus

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }
  /// Canonical order: dimension ascending, then lex on the RREF basis.
  bool operator<(const Subspace& o) const;

  std::string to_string() const;

 private:
  explicit Subspace(Matrix canonical_basis);
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Number of k-dimensional subspaces of GF(q)^n (Gaussian binomial).
BigInt subspace_count(std::int64_t q, std::size_t n, std::size_t k);
/// Total number of subspaces of GF(q)^n, all dimensions.
BigInt total_subspace_count(std::int64_t q, std::size_t n);

/// Streams every dim-dimensional subspace of GF(p)^ambient exactly once, in
/// lexicographic order on the flattened RREF basis matrix.
class SubspaceStream {
 public:
  SubspaceStream(const FieldSpec& f, std::size_t ambient, std::size_t dim);
  SubspaceStream(SubspaceStream&&) noexcept;
  SubspaceStream& operator=(SubspaceStream&&) noexcept;
  ~SubspaceStream();

  std::optional<Subspace> next();

 private:
  struct PivotBlock;
  FieldSpec field_;
  std::size_t ambient_, dim_;
  std::vector<std::unique_ptr<PivotBlock>> blocks_;  // live streams
};

}  // namespace leib

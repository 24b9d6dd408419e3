#include "leibkit/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace leib {

Vec zero_vec(const FieldSpec& f, std::size_t n) {
  return Vec(n, Scalar::zero(f));
}

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = Scalar::one(f);
  return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector size mismatch");
  Vec r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols),
      entries_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows,
                         std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != f) {
        throw FieldMismatchError("matrix entry from a different field");
      }
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix/vector size mismatch");
  Vec out = zero_vec(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        out.at(r, c) += at(r, k) * o.at(k, c);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionError("matrix sum shape mismatch");
  }
  Matrix out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] += o.entries_[i];
  }
  return out;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

Matrix Matrix::pow(std::size_t e) const {
  if (rows_ != cols_) throw DimensionError("pow of non-square matrix");
  Matrix acc = identity(field_, rows_);
  for (std::size_t i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
         entries_ == o.entries_;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::lex_less(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw DimensionError("lex comparison of different shapes");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < o.entries_[i]) return true;
    if (o.entries_[i] < entries_[i]) return false;
  }
  return false;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) {
      os << (c ? " " : "") << at(r, c).to_string();
    }
    os << "]";
  }
  return os.str();
}

Matrix rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t r = 0; r < rows && lead < cols; ++r) {
    std::size_t pr = r;
    while (pr < rows && a.at(pr, lead).is_zero()) ++pr;
    if (pr == rows) {
      --r;
      ++lead;
      continue;
    }
    if (pr != r) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(a.at(r, c), a.at(pr, c));
    }
    Scalar inv = a.at(r, lead).inverse();
    for (std::size_t c = lead; c < cols; ++c) a.at(r, c) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, lead).is_zero()) continue;
      Scalar factor = a.at(i, lead);
      for (std::size_t c = lead; c < cols; ++c) {
        a.at(i, c) -= factor * a.at(r, c);
      }
    }
    ++lead;
  }
  return a;
}

std::size_t rank(const Matrix& m) {
  Matrix e = rref(m);
  std::size_t rk = 0;
  for (std::size_t r = 0; r < e.rows(); ++r) {
    bool nonzero = false;
    for (std::size_t c = 0; c < e.cols(); ++c) {
      if (!e.at(r, c).is_zero()) { nonzero = true; break; }
    }
    if (nonzero) ++rk;
  }
  return rk;
}

Subspace kernel(const Matrix& m) {
  Matrix e = rref(m);
  const std::size_t n = m.cols();
  std::vector<std::ptrdiff_t> pivot_row(n, -1);
  std::size_t rk = 0;
  for (std::size_t r = 0; r < e.rows(); ++r) {
    std::size_t c = 0;
    while (c < n && e.at(r, c).is_zero()) ++c;
    if (c < n) {
      pivot_row[c] = static_cast<std::ptrdiff_t>(r);
      ++rk;
    }
  }
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (pivot_row[j] >= 0) continue;
    Vec v = zero_vec(m.field(), n);
    v[j] = Scalar::one(m.field());
    for (std::size_t c = 0; c < n; ++c) {
      if (pivot_row[c] >= 0) {
        v[c] = -e.at(static_cast<std::size_t>(pivot_row[c]), j);
      }
    }
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.field(), n, basis);
}

std::optional<Vec> solve_in_row_space(const Matrix& rows, const Vec& v) {
  const std::size_t k = rows.rows(), n = rows.cols();
  if (v.size() != n) throw DimensionError("solve: vector size mismatch");
  // Augment with an identity to track row combinations.
  Matrix aug(rows.field(), k, n + k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = rows.at(r, c);
    aug.at(r, n + r) = Scalar::one(rows.field());
  }
  Matrix e = rref(aug);
  Vec residual = v;
  Vec comb = zero_vec(rows.field(), k);
  for (std::size_t r = 0; r < k; ++r) {
    std::size_t p = 0;
    while (p < n && e.at(r, p).is_zero()) ++p;
    if (p == n) continue;  // row lives entirely in the tracking block
    Scalar coef = residual[p];
    if (coef.is_zero()) continue;
    for (std::size_t c = 0; c < n; ++c) residual[c] -= coef * e.at(r, c);
    for (std::size_t c = 0; c < k; ++c) comb[c] += coef * e.at(r, n + c);
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  return comb;
}

Subspace::Subspace(Matrix canonical_basis) : basis_(std::move(canonical_basis)) {
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t c = 0;
    while (c < basis_.cols() && basis_.at(r, c).is_zero()) ++c;
    pivots_.push_back(c);
  }
}

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
  return Subspace(Matrix(f, 0, ambient));
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
  return Subspace(Matrix::identity(f, ambient));
}

Subspace Subspace::span(const FieldSpec& f, std::size_t ambient,
                        const std::vector<Vec>& gens) {
  return span(Matrix::from_rows(f, gens, ambient));
}

Subspace Subspace::span(const Matrix& gens) {
  Matrix e = rref(gens);
  std::vector<Vec> nonzero;
  for (std::size_t r = 0; r < e.rows(); ++r) {
    Vec row = e.row(r);
    if (!vec_is_zero(row)) nonzero.push_back(std::move(row));
  }
  return Subspace(Matrix::from_rows(gens.field(), nonzero, gens.cols()));
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != ambient_dim()) {
    throw DimensionError("ambient dimension mismatch");
  }
  Vec r = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar coef = r[pivots_[i]];
    if (coef.is_zero()) continue;
    for (std::size_t c = pivots_[i]; c < ambient_dim(); ++c) {
      r[c] -= coef * basis_.at(i, c);
    }
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_row(i))) return false;
  }
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.field() != b.field()) {
    throw DimensionError("subspace sum: ambient mismatch");
  }
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) gens.push_back(a.basis_row(i));
  for (std::size_t i = 0; i < b.dim(); ++i) gens.push_back(b.basis_row(i));
  return Subspace::span(a.field(), a.ambient_dim(), gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_dim() != other.ambient_dim() || field() != other.field()) {
    throw DimensionError("subspace intersection: ambient mismatch");
  }
  const std::size_t n = ambient_dim();
  // Zassenhaus: rref of [[A A],[B 0]]; rows with zero left block carry the
  // intersection in the right block.
  Matrix block(field(), dim() + other.dim(), 2 * n);
  for (std::size_t r = 0; r < dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      block.at(r, c) = basis_.at(r, c);
      block.at(r, n + c) = basis_.at(r, c);
    }
  }
  for (std::size_t r = 0; r < other.dim(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      block.at(dim() + r, c) = other.basis_.at(r, c);
    }
  }
  Matrix e = rref(block);
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < e.rows(); ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n; ++c) {
      if (!e.at(r, c).is_zero()) { left_zero = false; break; }
    }
    if (!left_zero) continue;
    Vec right(n, Scalar::zero(field()));
    for (std::size_t c = 0; c < n; ++c) right[c] = e.at(r, n + c);
    if (!vec_is_zero(right)) gens.push_back(std::move(right));
  }
  return Subspace::span(field(), n, gens);
}

bool Subspace::operator<(const Subspace& o) const {
  if (dim() != o.dim()) return dim() < o.dim();
  return basis_.lex_less(o.basis_);
}

std::string Subspace::to_string() const {
  if (dim() == 0) return "0";
  return basis_.to_string();
}

BigInt subspace_count(std::int64_t q, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k == 0 || k == n) return 1;
  // q-binomial recurrence, computed bottom-up.
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, k); j-- > 0;) {
      // [m, j+1] = [m-1, j] + q^{j+1} [m-1, j+1]
      BigInt qe = 1;
      for (std::size_t i = 0; i <= j; ++i) qe *= q;
      row[j + 1] = row[j] + qe * row[j + 1];
    }
  }
  return row[k];
}

BigInt total_subspace_count(std::int64_t q, std::size_t n) {
  BigInt total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += subspace_count(q, n, k);
  return total;
}

struct SubspaceStream::PivotBlock {
  FieldSpec field;
  std::size_t ambient = 0, dim = 0;
  std::vector<std::size_t> pivots;                       // ascending
  std::vector<std::pair<std::size_t, std::size_t>> free_pos;  // row-major
  std::vector<std::int64_t> values;  // odometer, most significant first
  bool exhausted = false;
  Matrix current{FieldSpec::rationals(), 0, 0};

  void rebuild() {
    Matrix m(field, dim, ambient);
    for (std::size_t r = 0; r < dim; ++r) {
      m.at(r, pivots[r]) = Scalar::one(field);
    }
    for (std::size_t i = 0; i < free_pos.size(); ++i) {
      m.at(free_pos[i].first, free_pos[i].second) =
          Scalar::residue(field, values[i]);
    }
    current = std::move(m);
  }

  void advance() {
    for (std::size_t i = values.size(); i-- > 0;) {
      if (++values[i] < field.p) {
        for (std::size_t j = i + 1; j < values.size(); ++j) values[j] = 0;
        rebuild();
        return;
      }
    }
    exhausted = true;
  }
};

SubspaceStream::SubspaceStream(const FieldSpec& f, std::size_t ambient,
                               std::size_t dim)
    : field_(f), ambient_(ambient), dim_(dim) {
  if (!f.is_prime_field()) {
    throw UnsupportedBackendError(
        "subspace enumeration requires a finite prime field");
  }
  if (dim > ambient) return;  // empty stream
  // All dim-subsets of column indices as pivot sets.
  std::vector<std::size_t> combo(dim);
  for (std::size_t i = 0; i < dim; ++i) combo[i] = i;
  for (;;) {
    auto block = std::make_unique<PivotBlock>();
    block->field = f;
    block->ambient = ambient;
    block->dim = dim;
    block->pivots = combo;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = combo[r] + 1; c < ambient; ++c) {
        bool is_pivot = std::binary_search(combo.begin(), combo.end(), c);
        if (!is_pivot) block->free_pos.emplace_back(r, c);
      }
    }
    block->values.assign(block->free_pos.size(), 0);
    block->rebuild();
    blocks_.push_back(std::move(block));
    // next combination
    std::size_t i = dim;
    while (i-- > 0) {
      if (combo[i] + (dim - i) < ambient) {
        ++combo[i];
        for (std::size_t j = i + 1; j < dim; ++j) combo[j] = combo[j - 1] + 1;
        break;
      }
      if (i == 0) { combo.clear(); break; }
    }
    if (combo.size() != dim || dim == 0) break;
  }
}

SubspaceStream::SubspaceStream(SubspaceStream&&) noexcept = default;
SubspaceStream& SubspaceStream::operator=(SubspaceStream&&) noexcept = default;
SubspaceStream::~SubspaceStream() = default;

std::optional<Subspace> SubspaceStream::next() {
  PivotBlock* best = nullptr;
  for (auto& b : blocks_) {
    if (b->exhausted) continue;
    if (!best || b->current.lex_less(best->current)) best = b.get();
  }
  if (!best) return std::nullopt;
  Subspace out = Subspace::span(best->current);
  best->advance();
  return out;
}

}  // namespace leib

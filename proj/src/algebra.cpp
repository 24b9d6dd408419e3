#include "leibkit/algebra.hpp"

#include <sstream>

namespace leib {

LeibnizAlgebra::LeibnizAlgebra(const FieldSpec& f, std::size_t dim,
                               std::vector<Scalar> tensor,
                               std::vector<std::string> labels, bool validated)
    : field_(f), dim_(dim), tensor_(std::move(tensor)),
      labels_(std::move(labels)), validated_(validated) {
  if (tensor_.size() != dim_ * dim_ * dim_) {
    throw DimensionError("structure tensor has wrong size");
  }
  for (const auto& s : tensor_) {
    if (s.field() != field_) {
      throw FieldMismatchError("structure constant from a different field");
    }
  }
  if (!labels_.empty() && labels_.size() != dim_) {
    throw DimensionError("label count mismatch");
  }
}

LeibnizAlgebra LeibnizAlgebra::checked(const FieldSpec& f, std::size_t dim,
                                       std::vector<Scalar> tensor,
                                       std::vector<std::string> labels) {
  auto v = leibniz_violation(f, dim, tensor);
  if (v) throw LeibnizViolationError(v->i, v->j, v->k);
  return LeibnizAlgebra(f, dim, std::move(tensor), std::move(labels), true);
}

LeibnizAlgebra LeibnizAlgebra::unchecked(const FieldSpec& f, std::size_t dim,
                                         std::vector<Scalar> tensor,
                                         std::vector<std::string> labels) {
  return LeibnizAlgebra(f, dim, std::move(tensor), std::move(labels), false);
}

Vec LeibnizAlgebra::product(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw DimensionError("product: vector dimension mismatch");
  }
  Vec out = zero_vec(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!sc(i, j, k).is_zero()) out[k] += c * sc(i, j, k);
      }
    }
  }
  return out;
}

Vec LeibnizAlgebra::basis_product(std::size_t i, std::size_t j) const {
  Vec out(dim_, Scalar::zero(field_));
  for (std::size_t k = 0; k < dim_; ++k) out[k] = sc(i, j, k);
  return out;
}

Matrix LeibnizAlgebra::left_mult(const Vec& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!sc(i, j, k).is_zero()) m.at(k, j) += x[i] * sc(i, j, k);
      }
    }
  }
  return m;
}

Matrix LeibnizAlgebra::right_mult(const Vec& x) const {
  Matrix m(field_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!sc(j, i, k).is_zero()) m.at(k, j) += x[i] * sc(j, i, k);
      }
    }
  }
  return m;
}

Matrix LeibnizAlgebra::left_mult_basis(std::size_t i) const {
  return left_mult(unit_vec(field_, dim_, i));
}

std::string LeibnizAlgebra::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "b" + std::to_string(i);
}

std::string LeibnizAlgebra::tensor_key() const {
  std::ostringstream os;
  os << field_.to_string() << ":" << dim_;
  for (const auto& s : tensor_) os << ":" << s.to_string();
  return os.str();
}

std::optional<LeibnizViolation> leibniz_violation(
    const FieldSpec& f, std::size_t dim, const std::vector<Scalar>& tensor) {
  LeibnizAlgebra a = LeibnizAlgebra::unchecked(f, dim, tensor);
  return leibniz_violation(a);
}

std::optional<LeibnizViolation> leibniz_violation(const LeibnizAlgebra& a) {
  const std::size_t n = a.dim();
  // Precompute basis products.
  std::vector<Vec> bp(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) bp[i * n + j] = a.basis_product(i, j);
  }
  auto mul_basis_vec = [&](std::size_t i, const Vec& v) {
    Vec out = zero_vec(a.field(), n);
    for (std::size_t t = 0; t < n; ++t) {
      if (v[t].is_zero()) continue;
      const Vec& p = bp[i * n + t];
      for (std::size_t k = 0; k < n; ++k) {
        if (!p[k].is_zero()) out[k] += v[t] * p[k];
      }
    }
    return out;
  };
  auto mul_vec_basis = [&](const Vec& v, std::size_t j) {
    Vec out = zero_vec(a.field(), n);
    for (std::size_t t = 0; t < n; ++t) {
      if (v[t].is_zero()) continue;
      const Vec& p = bp[t * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!p[k].is_zero()) out[k] += v[t] * p[k];
      }
    }
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = mul_basis_vec(i, bp[j * n + k]);
        Vec rhs = vec_add(mul_vec_basis(bp[i * n + j], k),
                          mul_basis_vec(j, bp[i * n + k]));
        if (lhs != rhs) {
          return LeibnizViolation{static_cast<int>(i), static_cast<int>(j),
                                  static_cast<int>(k)};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_lie(const LeibnizAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a.sc(i, j, k) != -a.sc(j, i, k)) return false;
      }
    }
  }
  if (a.field().characteristic() == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!vec_is_zero(a.basis_product(i, i))) return false;
    }
  }
  return true;
}

bool is_subalgebra(const LeibnizAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) {
    throw DimensionError("subspace ambient does not match algebra");
  }
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (!s.contains(a.product(s.basis_row(i), s.basis_row(j)))) return false;
    }
  }
  return true;
}

bool is_ideal(const LeibnizAlgebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) {
    throw DimensionError("subspace ambient does not match algebra");
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Vec bi = unit_vec(a.field(), a.dim(), i);
    for (std::size_t j = 0; j < s.dim(); ++j) {
      Vec sj = s.basis_row(j);
      if (!s.contains(a.product(bi, sj))) return false;
      if (!s.contains(a.product(sj, bi))) return false;
    }
  }
  return true;
}

Subspace subalgebra_closure(const LeibnizAlgebra& a, const Subspace& s) {
  Subspace cur = s;
  for (;;) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < cur.dim(); ++i) gens.push_back(cur.basis_row(i));
    for (std::size_t i = 0; i < cur.dim(); ++i) {
      for (std::size_t j = 0; j < cur.dim(); ++j) {
        gens.push_back(a.product(cur.basis_row(i), cur.basis_row(j)));
      }
    }
    Subspace next = Subspace::span(a.field(), a.dim(), gens);
    if (next == cur) return cur;
    cur = next;
  }
}

Subspace ideal_closure(const LeibnizAlgebra& a, const Subspace& s) {
  Subspace cur = s;
  for (;;) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < cur.dim(); ++i) gens.push_back(cur.basis_row(i));
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec bi = unit_vec(a.field(), a.dim(), i);
      for (std::size_t j = 0; j < cur.dim(); ++j) {
        gens.push_back(a.product(bi, cur.basis_row(j)));
        gens.push_back(a.product(cur.basis_row(j), bi));
      }
    }
    Subspace next = Subspace::span(a.field(), a.dim(), gens);
    if (next == cur) return cur;
    cur = next;
  }
}

namespace {

/// m x n matrix vanishing exactly on s: reduce by the basis of s, then read
/// off the non-pivot coordinates.
Matrix complement_projection(const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  std::vector<std::size_t> nonpivot;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (pi < s.pivots().size() && s.pivots()[pi] == c) { ++pi; continue; }
      nonpivot.push_back(c);
    }
  }
  Matrix q(s.field(), nonpivot.size(), n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec red = s.reduce(unit_vec(s.field(), n, c));
    for (std::size_t r = 0; r < nonpivot.size(); ++r) {
      q.at(r, c) = red[nonpivot[r]];
    }
  }
  return q;
}

Matrix vstack(const std::vector<Matrix>& mats, const FieldSpec& f,
              std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& m : mats) rows += m.rows();
  Matrix out(f, rows, cols);
  std::size_t r0 = 0;
  for (const auto& m : mats) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < cols; ++c) out.at(r0 + r, c) = m.at(r, c);
    }
    r0 += m.rows();
  }
  return out;
}

}  // namespace

Subspace largest_ideal_inside(const LeibnizAlgebra& a, const Subspace& s) {
  Subspace cur = s;
  for (;;) {
    Matrix q = complement_projection(cur);
    std::vector<Matrix> stack;
    for (std::size_t i = 0; i < a.dim(); ++i) {
      Vec bi = unit_vec(a.field(), a.dim(), i);
      stack.push_back(q * a.left_mult(bi));
      stack.push_back(q * a.right_mult(bi));
    }
    Subspace good = kernel(vstack(stack, a.field(), a.dim()));
    Subspace next = cur.intersect(good);
    if (next == cur) return cur;
    cur = next;
  }
}

Subspace algebra_square(const LeibnizAlgebra& a) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      gens.push_back(a.basis_product(i, j));
    }
  }
  return Subspace::span(a.field(), a.dim(), gens);
}

Subspace subspace_product(const LeibnizAlgebra& a, const Subspace& s,
                          const Subspace& t) {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < t.dim(); ++j) {
      gens.push_back(a.product(s.basis_row(i), t.basis_row(j)));
    }
  }
  return Subspace::span(a.field(), a.dim(), gens);
}

AlgebraWithMap quotient(const LeibnizAlgebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) throw NotAnIdealError("quotient by a non-ideal");
  Matrix proj = complement_projection(ideal);
  const std::size_t m = proj.rows(), n = a.dim();
  // Quotient coordinates are the standard coordinates not pivotal in the
  // ideal's basis; lift of quotient basis vector r is that standard vector.
  std::vector<std::size_t> nonpivot;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (pi < ideal.pivots().size() && ideal.pivots()[pi] == c) { ++pi; continue; }
      nonpivot.push_back(c);
    }
  }
  std::vector<Scalar> tensor(m * m * m, Scalar::zero(a.field()));
  for (std::size_t s = 0; s < m; ++s) {
    for (std::size_t t = 0; t < m; ++t) {
      Vec w = proj.apply(a.basis_product(nonpivot[s], nonpivot[t]));
      for (std::size_t k = 0; k < m; ++k) tensor[(s * m + t) * m + k] = w[k];
    }
  }
  return AlgebraWithMap{LeibnizAlgebra::checked(a.field(), m, std::move(tensor)),
                        proj};
}

AlgebraWithMap restrict_to(const LeibnizAlgebra& a, const Subspace& subalg) {
  if (!is_subalgebra(a, subalg)) {
    throw NotASubalgebraError("restriction to a non-subalgebra");
  }
  const std::size_t k = subalg.dim();
  std::vector<Scalar> tensor(k * k * k, Scalar::zero(a.field()));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Vec w = a.product(subalg.basis_row(i), subalg.basis_row(j));
      // Coordinates against an RREF basis are read off the pivot columns.
      for (std::size_t t = 0; t < k; ++t) {
        tensor[(i * k + j) * k + t] = w[subalg.pivots()[t]];
      }
    }
  }
  return AlgebraWithMap{LeibnizAlgebra::checked(a.field(), k, std::move(tensor)),
                        subalg.basis()};
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& a, const Matrix& new_basis) {
  const std::size_t n = a.dim();
  if (new_basis.rows() != n || new_basis.cols() != n || rank(new_basis) != n) {
    throw DimensionError("change_basis: rows do not form a basis");
  }
  std::vector<Scalar> tensor(n * n * n, Scalar::zero(a.field()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec w = a.product(new_basis.row(i), new_basis.row(j));
      auto coords = solve_in_row_space(new_basis, w);
      for (std::size_t t = 0; t < n; ++t) {
        tensor[(i * n + j) * n + t] = (*coords)[t];
      }
    }
  }
  return LeibnizAlgebra::checked(a.field(), n, std::move(tensor));
}

LeibnizAlgebra direct_sum(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  if (a.field() != b.field()) {
    throw FieldMismatchError("direct sum over different fields");
  }
  const std::size_t n = a.dim() + b.dim();
  std::vector<Scalar> tensor(n * n * n, Scalar::zero(a.field()));
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    tensor[(i * n + j) * n + k] = v;
  };
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t k = 0; k < a.dim(); ++k) put(i, j, k, a.sc(i, j, k));
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      for (std::size_t k = 0; k < b.dim(); ++k) {
        put(a.dim() + i, a.dim() + j, a.dim() + k, b.sc(i, j, k));
      }
    }
  }
  return LeibnizAlgebra::checked(a.field(), n, std::move(tensor));
}

LeibnizAlgebra semidirect_sum(const LeibnizAlgebra& h, std::size_t module_dim,
                              const std::vector<Matrix>& left_actions,
                              const std::vector<Matrix>& right_actions) {
  const std::size_t hd = h.dim(), n = module_dim + hd;
  if (left_actions.size() != hd || right_actions.size() != hd) {
    throw DimensionError("one action matrix per basis element required");
  }
  for (const auto& m : left_actions) {
    if (m.rows() != module_dim || m.cols() != module_dim) {
      throw DimensionError("action matrix shape mismatch");
    }
  }
  for (const auto& m : right_actions) {
    if (m.rows() != module_dim || m.cols() != module_dim) {
      throw DimensionError("action matrix shape mismatch");
    }
  }
  std::vector<Scalar> tensor(n * n * n, Scalar::zero(h.field()));
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
    tensor[(i * n + j) * n + k] = v;
  };
  for (std::size_t i = 0; i < hd; ++i) {
    for (std::size_t j = 0; j < hd; ++j) {
      for (std::size_t k = 0; k < hd; ++k) {
        put(module_dim + i, module_dim + j, module_dim + k, h.sc(i, j, k));
      }
    }
    for (std::size_t j = 0; j < module_dim; ++j) {
      for (std::size_t k = 0; k < module_dim; ++k) {
        put(module_dim + i, j, k, left_actions[i].at(k, j));
        put(j, module_dim + i, k, right_actions[i].at(k, j));
      }
    }
  }
  return LeibnizAlgebra::checked(h.field(), n, std::move(tensor));
}

Subspace normalizer(const LeibnizAlgebra& a, const Subspace& subalg) {
  if (!is_subalgebra(a, subalg)) {
    throw NotASubalgebraError("normalizer of a non-subalgebra");
  }
  Matrix q = complement_projection(subalg);
  std::vector<Matrix> stack;
  for (std::size_t i = 0; i < subalg.dim(); ++i) {
    Vec s = subalg.basis_row(i);
    stack.push_back(q * a.right_mult(s));  // x s in S
    stack.push_back(q * a.left_mult(s));   // s x in S
  }
  if (stack.empty()) return Subspace::full(a.field(), a.dim());
  return kernel(vstack(stack, a.field(), a.dim()));
}

Subspace centralizer(const LeibnizAlgebra& a, const Subspace& w) {
  std::vector<Matrix> stack;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    Vec wi = w.basis_row(i);
    stack.push_back(a.right_mult(wi));  // x w = 0
    stack.push_back(a.left_mult(wi));   // w x = 0
  }
  if (stack.empty()) return Subspace::full(a.field(), a.dim());
  return kernel(vstack(stack, a.field(), a.dim()));
}

Subspace left_centralizer(const LeibnizAlgebra& a, const Subspace& w) {
  std::vector<Matrix> stack;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    stack.push_back(a.right_mult(w.basis_row(i)));
  }
  if (stack.empty()) return Subspace::full(a.field(), a.dim());
  return kernel(vstack(stack, a.field(), a.dim()));
}

}  // namespace leib

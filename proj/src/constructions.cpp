#include "leibkit/constructions.hpp"

namespace leib {

LeibnizAlgebra abelian_algebra(const FieldSpec& f, std::size_t dim) {
  return LeibnizAlgebra::checked(
      f, dim, std::vector<Scalar>(dim * dim * dim, Scalar::zero(f)));
}

namespace {

/// The 3-dimensional Heisenberg Lie algebra with basis (x, y, z), y x = z.
LeibnizAlgebra heisenberg_H_algebra(const FieldSpec& f) {
  const std::size_t n = 3;
  std::vector<Scalar> t(n * n * n, Scalar::zero(f));
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, std::int64_t v) {
    t[(i * n + j) * n + k] = Scalar::of(f, v);
  };
  put(1, 0, 2, 1);   // y x = z
  put(0, 1, 2, -1);  // x y = -z
  return LeibnizAlgebra::checked(f, n, std::move(t), {"x", "y", "z"});
}

/// Left actions of x, y, z on V = span(e_1..e_p); subscripts live in
/// {1..p} with e_{p+1} = e_1 and e_0 = e_p, coefficients in GF(p).
std::vector<Matrix> heisenberg_actions(const FieldSpec& f, std::int64_t p) {
  const std::size_t m = static_cast<std::size_t>(p);
  Matrix ax(f, m, m), ay(f, m, m), az(f, m, m);
  for (std::size_t a = 0; a < m; ++a) {
    // x e_j = e_{j+1}
    ax.at((a + 1) % m, a) = Scalar::one(f);
    // y e_j = (j+1) e_{j-1}, 1-based j = a+1
    ay.at((a + m - 1) % m, a) = Scalar::of(f, static_cast<std::int64_t>(a) + 2);
    // z e_j = e_j
    az.at(a, a) = Scalar::one(f);
  }
  return {std::move(ax), std::move(ay), std::move(az)};
}

std::vector<std::string> heisenberg_labels(std::int64_t p) {
  std::vector<std::string> labels;
  for (std::int64_t j = 1; j <= p; ++j) labels.push_back("e" + std::to_string(j));
  labels.insert(labels.end(), {"x", "y", "z"});
  return labels;
}

LeibnizAlgebra with_labels(LeibnizAlgebra a, std::vector<std::string> labels) {
  return LeibnizAlgebra::checked(a.field(), a.dim(), a.tensor(),
                                 std::move(labels));
}

}  // namespace

LeibnizAlgebra heisenberg_example(std::int64_t p) {
  FieldSpec f = FieldSpec::gf(p);
  auto actions = heisenberg_actions(f, p);
  std::vector<Matrix> right;
  for (const auto& m : actions) right.push_back(-m);
  auto l = semidirect_sum(heisenberg_H_algebra(f), static_cast<std::size_t>(p),
                          actions, right);
  return with_labels(std::move(l), heisenberg_labels(p));
}

Subspace heisenberg_H(std::int64_t p) {
  FieldSpec f = FieldSpec::gf(p);
  const std::size_t n = static_cast<std::size_t>(p) + 3;
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < 3; ++i) {
    gens.push_back(unit_vec(f, n, static_cast<std::size_t>(p) + i));
  }
  return Subspace::span(f, n, gens);
}

Subspace heisenberg_K(std::int64_t p) {
  LeibnizAlgebra l = heisenberg_example(p);
  const std::size_t n = l.dim();
  // e_1 is coordinate 0; K = (I + R_{e_1}) H.  Translating by e_1 keeps the
  // corrections x e_1 = e_2, y e_1 = 2 e_p, z e_1 = e_1 independent for every
  // p >= 3, so K then meets H trivially.
  Matrix r = l.right_mult(unit_vec(l.field(), n, 0));
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < 3; ++i) {
    Vec h = unit_vec(l.field(), n, static_cast<std::size_t>(p) + i);
    gens.push_back(vec_add(h, r.apply(h)));
  }
  Subspace k = Subspace::span(l.field(), n, gens);
  if (!is_subalgebra(l, k)) {
    throw Error("internal: K failed to close under the product");
  }
  return k;
}

LeibnizAlgebra counterexample(std::int64_t p) {
  FieldSpec f = FieldSpec::gf(p);
  auto actions = heisenberg_actions(f, p);
  std::vector<Matrix> right(3, Matrix(f, static_cast<std::size_t>(p),
                                      static_cast<std::size_t>(p)));
  auto a = semidirect_sum(heisenberg_H_algebra(f), static_cast<std::size_t>(p),
                          actions, right);
  return with_labels(std::move(a), heisenberg_labels(p));
}

LeibnizAlgebra sl2(const FieldSpec& f) {
  if (f.characteristic() == 2) {
    throw Error("sl2 is not defined in characteristic 2");
  }
  const std::size_t n = 3;  // basis (e, h, f)
  std::vector<Scalar> t(n * n * n, Scalar::zero(f));
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, std::int64_t v) {
    t[(i * n + j) * n + k] = Scalar::of(f, v);
  };
  put(1, 0, 0, 2);   // h e = 2e
  put(0, 1, 0, -2);  // e h = -2e
  put(1, 2, 2, -2);  // h f = -2f
  put(2, 1, 2, 2);   // f h = 2f
  put(0, 2, 1, 1);   // e f = h
  put(2, 0, 1, -1);  // f e = -h
  return LeibnizAlgebra::checked(f, n, std::move(t), {"e", "h", "f"});
}

LeibnizAlgebra type1(const Type1Spec& spec) {
  if (spec.actions.empty()) throw DimensionError("type1 needs an actor");
  const FieldSpec f = spec.actions.front().field();
  for (const auto& a : spec.actions) {
    if (a.rows() != spec.module_dim || a.cols() != spec.module_dim) {
      throw DimensionError("type1 action shape mismatch");
    }
  }
  for (std::size_t i = 0; i < spec.actions.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.actions.size(); ++j) {
      if (!(spec.actions[i] * spec.actions[j] ==
            spec.actions[j] * spec.actions[i])) {
        throw Error("type1 actions must commute");
      }
    }
  }
  std::vector<Matrix> right;
  for (const auto& a : spec.actions) right.push_back(-a);
  return semidirect_sum(abelian_algebra(f, spec.actions.size()),
                        spec.module_dim, spec.actions, right);
}

LeibnizAlgebra type_star(const Type1Spec& spec, const Subspace& a1,
                         const Subspace& a2) {
  LeibnizAlgebra l = type1(spec);
  const std::size_t m = spec.module_dim, n = l.dim();
  std::vector<Vec> module_gens;
  for (std::size_t i = 0; i < m; ++i) {
    module_gens.push_back(unit_vec(l.field(), n, i));
  }
  Subspace module = Subspace::span(l.field(), n, module_gens);
  if (a1.intersect(a2).dim() != 0 || !(a1 + a2 == module) ||
      !is_ideal(l, a1) || !is_ideal(l, a2)) {
    throw Error("type_star: split must be complementary ideals of the module");
  }
  // Work in a basis adapted to A1 + A2 + B and zero the right action on A2.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a1.dim(); ++i) rows.push_back(a1.basis_row(i));
  for (std::size_t i = 0; i < a2.dim(); ++i) rows.push_back(a2.basis_row(i));
  for (std::size_t i = m; i < n; ++i) rows.push_back(unit_vec(l.field(), n, i));
  LeibnizAlgebra adapted =
      change_basis(l, Matrix::from_rows(l.field(), rows, n));
  std::vector<Scalar> t = adapted.tensor();
  for (std::size_t i = a1.dim(); i < m; ++i) {     // A2 block
    for (std::size_t j = m; j < n; ++j) {          // actor block
      for (std::size_t k = 0; k < n; ++k) t[(i * n + j) * n + k] = Scalar::zero(l.field());
    }
  }
  return LeibnizAlgebra::checked(l.field(), n, std::move(t));
}

LeibnizAlgebra type2(const Type2Spec& spec, const FieldSpec& f) {
  if (spec.lambda.size() != spec.m * spec.n ||
      spec.right_mode.size() != spec.m * spec.n) {
    throw DimensionError("type2 spec shape mismatch");
  }
  const std::size_t n = spec.m + spec.n;
  std::vector<Scalar> t(n * n * n, Scalar::zero(f));
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= spec.m; ++i) labels.push_back("e" + std::to_string(i));
  for (std::size_t j = 1; j <= spec.n; ++j) labels.push_back("f" + std::to_string(j));
  for (std::size_t i = 0; i < spec.m; ++i) {
    for (std::size_t j = 0; j < spec.n; ++j) {
      const std::size_t fj = spec.m + j;
      t[(i * n + fj) * n + fj] = spec.lam(i, j);
      if (spec.mode(i, j) == Type2Spec::RightMode::Negate) {
        t[(fj * n + i) * n + fj] = -spec.lam(i, j);
      }
    }
  }
  return LeibnizAlgebra::checked(f, n, std::move(t), std::move(labels));
}

Type2Spec make_type2_spec(const FieldSpec& f, std::size_t m, std::size_t n,
                          const std::vector<std::int64_t>& lambda,
                          Type2Spec::RightMode mode) {
  Type2Spec spec;
  spec.m = m;
  spec.n = n;
  for (std::int64_t v : lambda) spec.lambda.push_back(Scalar::of(f, v));
  spec.right_mode.assign(m * n, mode);
  return spec;
}

}  // namespace leib

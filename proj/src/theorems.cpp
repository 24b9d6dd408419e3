#include "leibkit/theorems.hpp"

#include <map>
#include <random>
#include <sstream>

namespace leib {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "Pass";
    case CheckStatus::Fail: return "Fail";
    case CheckStatus::NotApplicable: return "NotApplicable";
    case CheckStatus::Unsupported: return "Unsupported";
  }
  return "?";
}

namespace {

/// Pull a subspace of a restricted algebra back into the ambient
/// coordinates; emb rows are the canonical basis of the subalgebra.
Subspace embed(const Subspace& s, const Matrix& emb) {
  return Subspace::span(s.basis() * emb);
}

/// Push a subspace through a quotient projection (k x n).
Subspace project(const Subspace& s, const Matrix& proj) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(proj.apply(s.basis_row(i)));
  return Subspace::span(proj.field(), proj.rows(), rows);
}

template <typename Body>
CheckResult guarded(std::string name, Body&& body) {
  CheckResult r;
  r.name = std::move(name);
  try {
    body(r);
  } catch (const UnsupportedBackendError& e) {
    r.status = CheckStatus::Unsupported;
    r.detail = e.what();
  } catch (const ResourceGuardError& e) {
    r.status = CheckStatus::Unsupported;
    r.detail = e.what();
  } catch (const CertificateError& e) {
    r.status = CheckStatus::Unsupported;
    r.detail = e.what();
  }
  return r;
}

void fail(CheckResult& r, std::string detail) {
  r.status = CheckStatus::Fail;
  r.detail = std::move(detail);
}

void not_applicable(CheckResult& r, std::string hypothesis) {
  r.status = CheckStatus::NotApplicable;
  r.detail = std::move(hypothesis);
}

bool acts_antisymmetrically(const LeibnizAlgebra& a, const Subspace& b) {
  for (std::size_t r = 0; r < b.dim(); ++r) {
    Vec v = b.basis_row(r);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      Vec e = unit_vec(a.field(), a.dim(), j);
      if (!(a.product(v, e) == vec_scale(-Scalar::one(a.field()), a.product(e, v)))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

CheckResult check_minimal_ideal_dichotomy(const LeibnizAlgebra& a,
                                          const EnumerationGuard& guard) {
  return guarded("minimal_ideal_dichotomy", [&](CheckResult& r) {
    Subspace full = Subspace::full(a.field(), a.dim());
    for (const auto& b : minimal_ideals(a, guard)) {
      if (subspace_product(a, b, full).dim() == 0) continue;
      if (!acts_antisymmetrically(a, b)) {
        fail(r, "minimal ideal violates both branches: " + b.to_string());
        return;
      }
    }
  });
}

CheckResult check_minimal_ideal_central(const LeibnizAlgebra& a,
                                        const EnumerationGuard& guard) {
  return guarded("minimal_ideal_central", [&](CheckResult& r) {
    if (!is_nilpotent(a)) {
      not_applicable(r, "algebra is not nilpotent");
      return;
    }
    Subspace z = center(a);
    for (const auto& b : minimal_ideals(a, guard)) {
      if (b.intersect(z).dim() == 0) {
        fail(r, "minimal ideal meets the centre trivially: " + b.to_string());
        return;
      }
      if (!z.contains(b)) {
        fail(r, "minimal ideal not inside the centre: " + b.to_string());
        return;
      }
    }
  });
}

CheckResult check_nilradical_centralizer(const LeibnizAlgebra& a,
                                         const EnumerationGuard& guard) {
  return guarded("nilradical_centralizer", [&](CheckResult& r) {
    Subspace nil = nilradical(a, guard);
    for (const auto& b : minimal_ideals(a, guard)) {
      if (!centralizer(a, b).contains(nil)) {
        fail(r, "nilradical does not centralize " + b.to_string());
        return;
      }
    }
  });
}

CheckResult check_socle_chain(const LeibnizAlgebra& a,
                              const EnumerationGuard& guard) {
  return guarded("socle_chain", [&](CheckResult& r) {
    Subspace asoc = abelian_socle(a, guard);
    Subspace nil = nilradical(a, guard);
    Subspace zsoc = centralizer(a, socle(a, guard));
    if (!nil.contains(asoc)) {
      fail(r, "abelian socle not inside the nilradical: " + asoc.to_string());
      return;
    }
    if (!zsoc.contains(nil)) {
      fail(r, "nilradical not inside the socle centralizer: " + nil.to_string());
    }
  });
}

CheckResult check_socle_chain_equality(const LeibnizAlgebra& a,
                                       const EnumerationGuard& guard) {
  return guarded("socle_chain_equality", [&](CheckResult& r) {
    if (frattini(a, guard).Phi.dim() != 0) {
      not_applicable(r, "Frattini ideal is nonzero");
      return;
    }
    Subspace asoc = abelian_socle(a, guard);
    Subspace nil = nilradical(a, guard);
    Subspace zsoc = centralizer(a, socle(a, guard));
    if (!(asoc == nil) || !(nil == zsoc)) {
      fail(r, "chain is strict: Asoc " + asoc.to_string() + ", Nil " +
                  nil.to_string() + ", Z(Soc) " + zsoc.to_string());
    }
  });
}

CheckResult check_abelian_socle_complement(const LeibnizAlgebra& a,
                                           const EnumerationGuard& guard) {
  return guarded("abelian_socle_complement", [&](CheckResult& r) {
    if (frattini(a, guard).Phi.dim() != 0) {
      not_applicable(r, "Frattini ideal is nonzero");
      return;
    }
    Subspace asoc = abelian_socle(a, guard);
    auto c = find_complement_subalgebra(a, asoc, guard);
    if (!c) {
      fail(r, "no complementary subalgebra for the abelian socle");
      return;
    }
    if (!is_lie(restrict_to(a, *c).algebra)) {
      fail(r, "complement is not a Lie algebra: " + c->to_string());
    }
  });
}

CheckResult check_nilradical_mod_frattini(const LeibnizAlgebra& a,
                                          const EnumerationGuard& guard) {
  return guarded("nilradical_mod_frattini", [&](CheckResult& r) {
    Subspace phi = frattini(a, guard).Phi;
    Subspace nil = nilradical(a, guard);
    AlgebraWithMap q = quotient(a, phi);
    Subspace image = project(nil, q.map);
    Subspace asoc_q = abelian_socle(q.algebra, guard);
    if (!(image == asoc_q)) {
      fail(r, "image of the nilradical is " + image.to_string() +
                  " but the quotient's abelian socle is " + asoc_q.to_string());
    }
  });
}

CheckResult check_square_complement_cartan(const LeibnizAlgebra& a,
                                           const EnumerationGuard& guard) {
  return guarded("square_complement_cartan", [&](CheckResult& r) {
    Subspace sq = algebra_square(a);
    if (!is_nilpotent(restrict_to(a, sq).algebra)) {
      not_applicable(r, "the square of the algebra is not nilpotent");
      return;
    }
    bool c1 = frattini(a, guard).Phi.dim() == 0;
    Subspace nil = nilradical(a, guard);
    bool c2 = nil == socle(a, guard) &&
              find_complement_subalgebra(a, nil, guard).has_value();
    bool c3 = is_abelian(restrict_to(a, sq).algebra) &&
              is_semisimple_module(a, sq, guard) &&
              find_complement_subalgebra(a, sq, guard).has_value();
    if (c1 != c2 || c2 != c3) {
      std::ostringstream os;
      os << "conditions disagree: frattini-trivial=" << c1
         << " socle-complemented=" << c2 << " square-complemented=" << c3;
      fail(r, os.str());
      return;
    }
    if (!c1) return;  // equivalence holds; no complement claim to test
    std::vector<Subspace> complements;
    for (const auto& s : all_subalgebras(a, guard)) {
      if (s.dim() + sq.dim() == a.dim() && s.intersect(sq).dim() == 0) {
        complements.push_back(s);
      }
    }
    std::vector<Subspace> cartans = cartan_subalgebras(a, guard).cartans;
    if (!(complements == cartans)) {
      std::ostringstream os;
      os << complements.size() << " complements vs " << cartans.size()
         << " Cartan subalgebras";
      fail(r, os.str());
    }
  });
}

CheckResult check_elementary_equivalences(const LeibnizAlgebra& a,
                                          const EnumerationGuard& guard) {
  return guarded("elementary_equivalences", [&](CheckResult& r) {
    if (!is_solvable(a)) {
      not_applicable(r, "algebra is not solvable");
      return;
    }
    bool p1 = is_elementary(a, guard).elementary;
    bool phi0 = frattini(a, guard).Phi.dim() == 0;
    Subspace sq = algebra_square(a);
    bool p2 = phi0 && is_nilpotent(restrict_to(a, sq).algebra);
    bool p3 = phi0 && is_metabelian(a);
    Subspace asoc = abelian_socle(a, guard);
    bool p4 = false;
    const auto& subs = all_subalgebras(a, guard);
    for (const auto& s : subs) {
      if (s.dim() + asoc.dim() == a.dim() && s.intersect(asoc).dim() == 0 &&
          is_abelian(restrict_to(a, s).algebra)) {
        p4 = true;
        break;
      }
    }
    if (p1 != p2 || p2 != p3 || p3 != p4) {
      std::ostringstream os;
      os << "predicates disagree: elementary=" << p1
         << " square-nilpotent=" << p2 << " metabelian=" << p3
         << " abelian-complement=" << p4;
      fail(r, os.str());
      return;
    }
    if (a.dim() > 5) return;  // splitting search is exponential; skipped here
    // One direction only: a direct-sum splitting into an abelian summand and
    // a summand with an abelian complement to its abelian socle (the form
    // produced by zeroing one right action of a completely reducible
    // semidirect sum) forces elementarity.
    auto type_one_like = [&](const Subspace& e) {
      auto re = restrict_to(a, e);
      if (!is_solvable(re.algebra)) return false;
      Subspace easoc = abelian_socle(re.algebra, guard);
      for (const auto& c : all_subalgebras(re.algebra, guard)) {
        if (c.dim() + easoc.dim() == re.algebra.dim() &&
            c.intersect(easoc).dim() == 0 &&
            is_abelian(restrict_to(re.algebra, c).algebra)) {
          return true;
        }
      }
      return false;
    };
    std::map<std::string, bool> memo;
    bool found = false;
    for (const auto& b : subs) {
      if (found) break;
      if (!is_abelian(restrict_to(a, b).algebra)) continue;
      for (const auto& e : subs) {
        if (b.dim() + e.dim() != a.dim() || (b + e).dim() != a.dim()) continue;
        if (subspace_product(a, b, e).dim() != 0 ||
            subspace_product(a, e, b).dim() != 0) {
          continue;
        }
        std::string key = e.to_string();
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, type_one_like(e)).first;
        if (it->second) {
          found = true;
          break;
        }
      }
    }
    if (found && !p1) {
      fail(r, "direct sum of an abelian algebra and an elementary summand "
              "is not elementary");
    }
  });
}

CheckResult check_frattini_monotone(const LeibnizAlgebra& a,
                                    const EnumerationGuard& guard) {
  return guarded("frattini_monotone", [&](CheckResult& r) {
    Subspace sq = algebra_square(a);
    if (!is_nilpotent(restrict_to(a, sq).algebra)) {
      not_applicable(r, "the square of the algebra is not nilpotent");
      return;
    }
    Subspace phi = frattini(a, guard).Phi;
    for (const auto& s : all_subalgebras(a, guard)) {
      auto rs = restrict_to(a, s);
      Subspace phi_m = embed(frattini(rs.algebra, guard).Phi, rs.map);
      if (!phi.contains(phi_m)) {
        fail(r, "subalgebra with escaping Frattini ideal: " + s.to_string());
        return;
      }
    }
  });
}

CheckResult check_minimal_supplement(const LeibnizAlgebra& a,
                                     const EnumerationGuard& guard) {
  return guarded("minimal_supplement", [&](CheckResult& r) {
    const auto& subs = all_subalgebras(a, guard);
    for (const auto& b : all_ideals(a, guard)) {
      std::vector<Subspace> supplements;
      for (const auto& u : subs) {
        if ((b + u).dim() == a.dim()) supplements.push_back(u);
      }
      for (const auto& u : supplements) {
        bool minimal = true;
        for (const auto& smaller : supplements) {
          if (smaller.dim() < u.dim() && u.contains(smaller)) {
            minimal = false;
            break;
          }
        }
        if (!minimal) continue;
        auto ru = restrict_to(a, u);
        Subspace phi_u = embed(frattini(ru.algebra, guard).Phi, ru.map);
        if (!phi_u.contains(b.intersect(u))) {
          fail(r, "ideal " + b.to_string() + " with minimal supplement " +
                      u.to_string() + " escapes its Frattini ideal");
          return;
        }
      }
    }
  });
}

CheckResult check_quotient_frattini(const LeibnizAlgebra& a,
                                    const EnumerationGuard& guard) {
  return guarded("quotient_frattini", [&](CheckResult& r) {
    Subspace f = frattini(a, guard).F;
    for (const auto& b : all_ideals(a, guard)) {
      if (!f.contains(b)) continue;
      AlgebraWithMap q = quotient(a, b);
      Subspace fq = frattini(q.algebra, guard).F;
      Subspace image = project(f, q.map);
      if (!(fq == image)) {
        fail(r, "quotient by " + b.to_string() +
                    " has Frattini subalgebra " + fq.to_string() +
                    " instead of " + image.to_string());
        return;
      }
    }
  });
}

CheckResult check_rational_frattini_ideal(const LeibnizAlgebra& a,
                                          const std::vector<Subspace>& certificate,
                                          const EnumerationGuard& guard) {
  return guarded("rational_frattini_ideal", [&](CheckResult& r) {
    if (a.field().is_prime_field()) {
      not_applicable(r, "requires characteristic zero; the statement fails "
                        "over prime fields");
      return;
    }
    if (certificate.empty()) {
      r.status = CheckStatus::Unsupported;
      r.detail = "no maximal-subalgebra certificate supplied";
      return;
    }
    Subspace bound = frattini_upper_bound(a, certificate, guard);
    if (!is_ideal(a, bound)) {
      fail(r, "certified Frattini candidate is not an ideal: " +
                  bound.to_string());
    }
  });
}

namespace {

using CheckFn = CheckResult (*)(const LeibnizAlgebra&, const EnumerationGuard&);

CheckResult rational_frattini_no_cert(const LeibnizAlgebra& a,
                                      const EnumerationGuard& guard) {
  return check_rational_frattini_ideal(a, {}, guard);
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"minimal_ideal_dichotomy", check_minimal_ideal_dichotomy},
      {"minimal_ideal_central", check_minimal_ideal_central},
      {"nilradical_centralizer", check_nilradical_centralizer},
      {"socle_chain", check_socle_chain},
      {"socle_chain_equality", check_socle_chain_equality},
      {"abelian_socle_complement", check_abelian_socle_complement},
      {"nilradical_mod_frattini", check_nilradical_mod_frattini},
      {"square_complement_cartan", check_square_complement_cartan},
      {"elementary_equivalences", check_elementary_equivalences},
      {"frattini_monotone", check_frattini_monotone},
      {"minimal_supplement", check_minimal_supplement},
      {"quotient_frattini", check_quotient_frattini},
      {"rational_frattini_ideal", rational_frattini_no_cert},
  };
  return table;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::optional<CheckResult> run_check(const std::string& name,
                                     const LeibnizAlgebra& a,
                                     const EnumerationGuard& guard) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(a, guard);
  }
  return std::nullopt;
}

std::vector<CheckResult> run_all_checks(const LeibnizAlgebra& a,
                                        const EnumerationGuard& guard) {
  std::vector<CheckResult> results;
  for (const auto& [name, fn] : registry()) results.push_back(fn(a, guard));
  return results;
}

StructureReport structure_report(const LeibnizAlgebra& a,
                                 const EnumerationGuard& guard) {
  StructureReport rep;
  rep.field = a.field();
  rep.dim = a.dim();
  rep.labels = a.labels();
  rep.square = algebra_square(a);
  rep.lower_central = lower_central_series(a).terms;
  rep.derived = derived_series(a).terms;
  rep.upper_central = upper_central_series(a).terms;
  rep.center = leib::center(a);
  rep.left_center = leib::left_center(a);
  rep.lie = is_lie(a);
  auto np = nilpotency(a);
  rep.nilpotent = np.nilpotent;
  rep.nilpotency_class = np.cls;
  auto sp = solvability(a);
  rep.solvable = sp.solvable;
  rep.derived_length = sp.derived_length;
  rep.metabelian = is_metabelian(a);

  auto note = [&](const char* what) {
    if (rep.unsupported_reason.empty()) rep.unsupported_reason = what;
  };
  auto attempt = [&](auto fn) -> std::optional<decltype(fn())> {
    try {
      return fn();
    } catch (const UnsupportedBackendError& e) {
      note(e.what());
      return std::nullopt;
    } catch (const ResourceGuardError& e) {
      note(e.what());
      return std::nullopt;
    }
  };

  rep.nil = attempt([&] { return nilradical(a, guard); });
  rep.rad = attempt([&] { return solvable_radical(a, guard); });
  rep.soc = attempt([&] { return socle(a, guard); });
  rep.asoc = attempt([&] { return abelian_socle(a, guard); });
  auto fd = attempt([&] { return frattini(a, guard); });
  if (fd) {
    rep.frattini_subalgebra = fd->F;
    rep.frattini_ideal = fd->Phi;
    rep.frattini_subalgebra_is_ideal = fd->f_is_ideal;
    rep.maximal_subalgebra_count = fd->maximal_subalgebras.size();
  }
  rep.semisimple = attempt([&] { return is_semisimple(a, guard); });
  rep.elementary =
      attempt([&] { return is_elementary(a, guard).elementary; });
  rep.cartan_count = attempt(
      [&] { return cartan_subalgebras(a, guard).cartans.size(); });
  return rep;
}

namespace {

void push(std::vector<NamedAlgebra>& out, std::string name, LeibnizAlgebra a) {
  out.push_back(NamedAlgebra{std::move(name), std::move(a)});
}

}  // namespace

std::vector<NamedAlgebra> standard_corpus() {
  std::vector<NamedAlgebra> out;
  FieldSpec f2 = FieldSpec::gf(2), f3 = FieldSpec::gf(3);

  for (std::size_t d = 1; d <= 4; ++d) {
    push(out, "abelian" + std::to_string(d) + "_gf2", abelian_algebra(f2, d));
    push(out, "abelian" + std::to_string(d) + "_gf3", abelian_algebra(f3, d));
  }

  LeibnizAlgebra heis2 = heisenberg_example(2);
  LeibnizAlgebra heis3 = heisenberg_example(3);
  LeibnizAlgebra counter2 = counterexample(2);
  LeibnizAlgebra counter3 = counterexample(3);
  push(out, "heis2", heis2);
  push(out, "heis3", heis3);
  push(out, "counter2", counter2);
  push(out, "counter3", counter3);
  push(out, "heis2_H", restrict_to(heis2, heisenberg_H(2)).algebra);
  push(out, "heis3_H", restrict_to(heis3, heisenberg_H(3)).algebra);
  push(out, "heis2_K", restrict_to(heis2, heisenberg_K(2)).algebra);

  push(out, "sl2_gf3", sl2(f3));
  push(out, "sl2_gf5", sl2(FieldSpec::gf(5)));

  using RM = Type2Spec::RightMode;
  push(out, "scaled1x1_gf3", type2(make_type2_spec(f3, 1, 1, {1}, RM::Negate), f3));
  push(out, "scaled1x1z_gf3", type2(make_type2_spec(f3, 1, 1, {1}, RM::Zero), f3));
  push(out, "scaled1x2_gf3", type2(make_type2_spec(f3, 1, 2, {1, 2}, RM::Negate), f3));
  push(out, "scaled2x1z_gf3", type2(make_type2_spec(f3, 2, 1, {1, 2}, RM::Zero), f3));
  push(out, "scaled2x2_gf3", type2(make_type2_spec(f3, 2, 2, {1, 2, 2, 1}, RM::Negate), f3));
  push(out, "scaled1x1_gf2", type2(make_type2_spec(f2, 1, 1, {1}, RM::Negate), f2));
  push(out, "scaled2x2z_gf2", type2(make_type2_spec(f2, 2, 2, {1, 0, 0, 1}, RM::Zero), f2));
  push(out, "scaled1x3_gf2", type2(make_type2_spec(f2, 1, 3, {1, 1, 1}, RM::Negate), f2));

  auto diag = [](const FieldSpec& f, std::vector<std::int64_t> entries) {
    Matrix m(f, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
      m.at(i, i) = Scalar::of(f, entries[i]);
    }
    return m;
  };
  Type1Spec split3{2, {diag(f3, {1, 2})}};
  push(out, "split_diag12_gf3", type1(split3));
  push(out, "split_pair_gf3", type1(Type1Spec{2, {diag(f3, {1, 0}), diag(f3, {0, 1})}}));
  Type1Spec split2{2, {diag(f2, {1, 1})}};
  push(out, "split_id_gf2", type1(split2));
  push(out, "split_proj_gf2", type1(Type1Spec{2, {diag(f2, {1, 0})}}));

  auto line = [](const FieldSpec& f, std::size_t ambient, std::size_t i) {
    return Subspace::span(f, ambient, {unit_vec(f, ambient, i)});
  };
  push(out, "onesided_gf3", type_star(split3, line(f3, 3, 0), line(f3, 3, 1)));
  push(out, "onesided_gf2", type_star(split2, line(f2, 3, 0), line(f2, 3, 1)));

  push(out, "sum_ab1_scaled_gf3",
       direct_sum(abelian_algebra(f3, 1),
                  type2(make_type2_spec(f3, 1, 1, {1}, RM::Negate), f3)));
  push(out, "sum_sl2_ab1_gf3", direct_sum(sl2(f3), abelian_algebra(f3, 1)));
  push(out, "sum_scaled_ab2_gf2",
       direct_sum(type2(make_type2_spec(f2, 1, 1, {1}, RM::Negate), f2),
                  abelian_algebra(f2, 2)));

  for (const auto* base : {&counter2, &heis2}) {
    auto mins = minimal_ideals(*base);
    if (!mins.empty()) {
      push(out,
           std::string(base == &counter2 ? "counter2" : "heis2") + "_mod_min",
           quotient(*base, mins.front()).algebra);
    }
    auto maxs = maximal_subalgebras(*base);
    if (!maxs.empty()) {
      push(out,
           std::string(base == &counter2 ? "counter2" : "heis2") + "_in_max",
           restrict_to(*base, maxs.front()).algebra);
    }
  }
  {
    std::vector<Vec> vgens;
    for (std::size_t i = 0; i < 3; ++i) vgens.push_back(unit_vec(f3, 6, i));
    push(out, "heis3_mod_v",
         quotient(heis3, Subspace::span(f3, 6, vgens)).algebra);
  }

  std::mt19937_64 rng(0xC0FFEE);
  int made = 0;
  for (int t = 0; made < 14 && t < 60; ++t) {
    FieldSpec f = (t % 2 == 0) ? f2 : f3;
    std::size_t m = 1 + rng() % 3;
    std::size_t k = 1 + rng() % 2;
    std::vector<Matrix> left, right;
    for (std::size_t i = 0; i < k; ++i) {
      Matrix act(f, m, m);
      for (std::size_t d = 0; d < m; ++d) {
        act.at(d, d) = Scalar::residue(f, static_cast<std::int64_t>(rng() % f.p));
      }
      bool negate = rng() % 2 == 0;
      left.push_back(act);
      right.push_back(negate ? -act : Matrix(f, m, m));
    }
    try {
      push(out, "rand" + std::to_string(t),
           semidirect_sum(abelian_algebra(f, k), m, left, right));
      ++made;
    } catch (const LeibnizViolationError&) {
      // skewed right actions can break the defining identity; skip those
    }
  }
  return out;
}

}  // namespace leib

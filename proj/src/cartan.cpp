#include "leibkit/cartan.hpp"

#include <random>

namespace leib {

bool is_cartan(const LeibnizAlgebra& a, const Subspace& h) {
  if (!is_subalgebra(a, h)) {
    throw NotASubalgebraError("is_cartan requires a subalgebra");
  }
  if (!is_nilpotent(restrict_to(a, h).algebra)) return false;
  return normalizer(a, h) == h;
}

CartanResult cartan_subalgebras(const LeibnizAlgebra& a,
                                const EnumerationGuard& guard) {
  CartanResult result;
  result.method = CartanResult::Method::Exhaustive;
  for (const auto& s : all_subalgebras(a, guard)) {
    if (is_cartan(a, s)) result.cartans.push_back(s);
  }
  return result;
}

Subspace fitting_null(const LeibnizAlgebra& a, const Vec& x) {
  return kernel(a.left_mult(x).pow(a.dim()));
}

std::optional<Subspace> find_cartan(const LeibnizAlgebra& a,
                                    std::size_t attempts, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto random_scalar = [&]() {
    if (a.field().is_prime_field()) {
      return Scalar::residue(a.field(),
                             static_cast<std::int64_t>(rng() % a.field().p));
    }
    // Small integers are plenty for the rational heuristic.
    return Scalar::of(a.field(), static_cast<std::int64_t>(rng() % 7) - 3);
  };
  for (std::size_t t = 0; t < attempts; ++t) {
    Vec x;
    if (t < a.dim()) {
      // Basis elements first: cheap, and often regular already.
      x = unit_vec(a.field(), a.dim(), t);
    } else {
      x = zero_vec(a.field(), a.dim());
      for (auto& c : x) c = random_scalar();
    }
    Subspace h = subalgebra_closure(a, fitting_null(a, x));
    if (is_cartan(a, h)) return h;
  }
  return std::nullopt;
}

}  // namespace leib

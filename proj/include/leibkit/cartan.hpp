#pragma once

#include "leibkit/enumeration.hpp"
#include "leibkit/series.hpp"

namespace leib {

struct CartanResult {
  std::vector<Subspace> cartans;
  enum class Method { Exhaustive, FittingHeuristic } method;
};

/// Nilpotent (as a restricted algebra) and self-normalizing.
bool is_cartan(const LeibnizAlgebra& a, const Subspace& h);

/// All Cartan subalgebras via the exhaustive subalgebra sweep.
CartanResult cartan_subalgebras(const LeibnizAlgebra& a,
                                const EnumerationGuard& guard = {});

/// Generalised null component of left multiplication by x: ker L_x^n.
Subspace fitting_null(const LeibnizAlgebra& a, const Vec& x);

/// Seeded heuristic: closes fitting_null of pseudorandom elements to a
/// subalgebra and returns the first candidate passing is_cartan.  Works over
/// any field; nullopt after the attempt budget.
std::optional<Subspace> find_cartan(const LeibnizAlgebra& a,
                                    std::size_t attempts,
                                    std::uint64_t seed = 0x5e1b);

}  // namespace leib

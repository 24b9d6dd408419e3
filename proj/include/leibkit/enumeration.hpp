#pragma once

#include <functional>
#include <optional>

#include "leibkit/algebra.hpp"

namespace leib {

/// Budget for exhaustive finite-field sweeps.  The estimated subspace count
/// (a sum of Gaussian binomials) is checked before any enumeration starts.
struct EnumerationGuard {
  BigInt max_subspaces = 10000000;
  bool force = false;
  int workers = 1;
};

/// Streams every subspace of the given dimension after applying the guard.
SubspaceStream enumerate_subspaces(const FieldSpec& f, std::size_t ambient,
                                   std::size_t dim,
                                   const EnumerationGuard& guard = {});

/// Evaluates a predicate over a whole-dimension-range sweep, preserving the
/// canonical order.  Work may be sharded across guard.workers threads; the
/// output is identical for any worker count.
std::vector<Subspace> filter_subspaces(
    const FieldSpec& f, std::size_t ambient, std::size_t dim_lo,
    std::size_t dim_hi, const std::function<bool(const Subspace&)>& pred,
    const EnumerationGuard& guard = {});

/// Every subspace closed under the product, including 0 and the whole
/// algebra; canonical order (dimension ascending, then lex).  Cached per
/// structure tensor within the session.
std::vector<Subspace> all_subalgebras(const LeibnizAlgebra& a,
                                      const EnumerationGuard& guard = {});

/// Proper subalgebras maximal under inclusion among proper subalgebras.
std::vector<Subspace> maximal_subalgebras(const LeibnizAlgebra& a,
                                          const EnumerationGuard& guard = {});

/// All two-sided ideals, canonical order; cached.
std::vector<Subspace> all_ideals(const LeibnizAlgebra& a,
                                 const EnumerationGuard& guard = {});

/// Nonzero ideals containing no smaller nonzero ideal.
std::vector<Subspace> minimal_ideals(const LeibnizAlgebra& a,
                                     const EnumerationGuard& guard = {});

/// First subalgebra C (canonical order) with C intersect I = 0 and
/// C + I = A, or nullopt when the ideal has no complement.
std::optional<Subspace> find_complement_subalgebra(
    const LeibnizAlgebra& a, const Subspace& ideal,
    const EnumerationGuard& guard = {});

/// Drops all cached sweep results (used by tests).
void clear_enumeration_cache();

}  // namespace leib

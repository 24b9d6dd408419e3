#include "leibkit/enumeration.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace leib {

namespace {

void check_guard(const FieldSpec& f, std::size_t ambient, std::size_t dim_lo,
                 std::size_t dim_hi, const EnumerationGuard& guard) {
  if (!f.is_prime_field()) {
    throw UnsupportedBackendError(
        "exhaustive enumeration requires a finite prime field");
  }
  if (guard.force) return;
  BigInt estimate = 0;
  for (std::size_t k = dim_lo; k <= dim_hi && k <= ambient; ++k) {
    estimate += subspace_count(f.p, ambient, k);
  }
  if (estimate > guard.max_subspaces) {
    throw ResourceGuardError("estimated subspace count " + estimate.str() +
                             " exceeds guard " + guard.max_subspaces.str() +
                             " (use force to override)");
  }
}

struct CacheEntry {
  std::optional<std::vector<Subspace>> subalgebras;
  std::optional<std::vector<Subspace>> ideals;
};

std::mutex cache_mutex;
std::map<std::string, std::shared_ptr<CacheEntry>> cache;

std::shared_ptr<CacheEntry> cache_entry(const LeibnizAlgebra& a) {
  std::lock_guard lock(cache_mutex);
  auto& e = cache[a.tensor_key()];
  if (!e) e = std::make_shared<CacheEntry>();
  return e;
}

}  // namespace

void clear_enumeration_cache() {
  std::lock_guard lock(cache_mutex);
  cache.clear();
}

SubspaceStream enumerate_subspaces(const FieldSpec& f, std::size_t ambient,
                                   std::size_t dim,
                                   const EnumerationGuard& guard) {
  check_guard(f, ambient, dim, dim, guard);
  return SubspaceStream(f, ambient, dim);
}

std::vector<Subspace> filter_subspaces(
    const FieldSpec& f, std::size_t ambient, std::size_t dim_lo,
    std::size_t dim_hi, const std::function<bool(const Subspace&)>& pred,
    const EnumerationGuard& guard) {
  check_guard(f, ambient, dim_lo, dim_hi, guard);
  std::vector<Subspace> out;
  const std::size_t batch_size = 512;
  for (std::size_t k = dim_lo; k <= dim_hi && k <= ambient; ++k) {
    SubspaceStream st(f, ambient, k);
    std::vector<Subspace> batch;
    bool done = false;
    while (!done) {
      batch.clear();
      while (batch.size() < batch_size) {
        auto s = st.next();
        if (!s) { done = true; break; }
        batch.push_back(std::move(*s));
      }
      if (batch.empty()) break;
      std::vector<char> keep(batch.size(), 0);
      const int workers = guard.workers;
      if (workers <= 1 || batch.size() < 64) {
        for (std::size_t i = 0; i < batch.size(); ++i) {
          keep[i] = pred(batch[i]) ? 1 : 0;
        }
      } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (batch.size() + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
          std::size_t lo = w * chunk;
          std::size_t hi = std::min(batch.size(), lo + chunk);
          if (lo >= hi) break;
          pool.emplace_back([&, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) {
              keep[i] = pred(batch[i]) ? 1 : 0;
            }
          });
        }
        for (auto& t : pool) t.join();
      }
      for (std::size_t i = 0; i < batch.size(); ++i) {
        if (keep[i]) out.push_back(batch[i]);
      }
    }
  }
  return out;
}

std::vector<Subspace> all_subalgebras(const LeibnizAlgebra& a,
                                      const EnumerationGuard& guard) {
  auto entry = cache_entry(a);
  if (entry->subalgebras) return *entry->subalgebras;
  auto result = filter_subspaces(
      a.field(), a.dim(), 0, a.dim(),
      [&](const Subspace& s) { return is_subalgebra(a, s); }, guard);
  std::lock_guard lock(cache_mutex);
  if (!entry->subalgebras) entry->subalgebras = result;
  return result;
}

std::vector<Subspace> maximal_subalgebras(const LeibnizAlgebra& a,
                                          const EnumerationGuard& guard) {
  {
    auto entry = cache_entry(a);
    if (entry->subalgebras) {
      // Derive from the cached full list.
      const auto& all = *entry->subalgebras;
      std::vector<Subspace> maximals;
      for (const auto& s : all) {
        if (s.dim() == a.dim()) continue;
        bool dominated = false;
        for (const auto& t : all) {
          if (t.dim() == a.dim() || t.dim() <= s.dim()) continue;
          if (t.contains(s)) { dominated = true; break; }
        }
        if (!dominated) maximals.push_back(s);
      }
      return maximals;
    }
  }
  // Dimension-descending sweep: a proper subalgebra not contained in any
  // previously found maximal is itself maximal.
  check_guard(a.field(), a.dim(), 0, a.dim(), guard);
  std::vector<Subspace> maximals;
  for (std::size_t k = a.dim(); k-- > 0;) {
    auto found = filter_subspaces(
        a.field(), a.dim(), k, k,
        [&](const Subspace& s) {
          for (const auto& m : maximals) {
            if (m.contains(s)) return false;
          }
          return is_subalgebra(a, s);
        },
        guard);
    for (auto& s : found) maximals.push_back(std::move(s));
  }
  // Canonical order: dimension ascending, then lex.
  std::sort(maximals.begin(), maximals.end());
  return maximals;
}

std::vector<Subspace> all_ideals(const LeibnizAlgebra& a,
                                 const EnumerationGuard& guard) {
  auto entry = cache_entry(a);
  if (entry->ideals) return *entry->ideals;
  auto result = filter_subspaces(
      a.field(), a.dim(), 0, a.dim(),
      [&](const Subspace& s) { return is_ideal(a, s); }, guard);
  std::lock_guard lock(cache_mutex);
  if (!entry->ideals) entry->ideals = result;
  return result;
}

std::vector<Subspace> minimal_ideals(const LeibnizAlgebra& a,
                                     const EnumerationGuard& guard) {
  auto ideals = all_ideals(a, guard);  // already dimension ascending
  std::vector<Subspace> minimals;
  for (const auto& i : ideals) {
    if (i.dim() == 0) continue;
    bool dominated = false;
    for (const auto& m : minimals) {
      if (i.contains(m)) { dominated = true; break; }
    }
    if (!dominated) minimals.push_back(i);
  }
  return minimals;
}

std::optional<Subspace> find_complement_subalgebra(
    const LeibnizAlgebra& a, const Subspace& ideal,
    const EnumerationGuard& guard) {
  if (!is_ideal(a, ideal)) {
    throw NotAnIdealError("complement search requires an ideal");
  }
  const std::size_t k = a.dim() - ideal.dim();
  auto st = enumerate_subspaces(a.field(), a.dim(), k, guard);
  while (auto s = st.next()) {
    if (s->intersect(ideal).dim() == 0 && is_subalgebra(a, *s)) return *s;
  }
  return std::nullopt;
}

}  // namespace leib

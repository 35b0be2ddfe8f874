#include "fsig/staircase.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fsig {

namespace {

using GenList = std::vector<const Monomial*>;
constexpr std::uint64_t kUnbounded = std::numeric_limits<std::uint64_t>::max();

std::optional<std::uint64_t> count_2d(const GenList& gens) {
  // gens sorted by coordinate 0 ascending.
  if (gens.empty() || (*gens.front())[0] != 0) return std::nullopt;
  std::uint64_t total = 0;
  std::uint64_t height = kUnbounded;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    height = std::min<std::uint64_t>(height, (*gens[i])[1]);
    if (height == 0) return total;
    std::uint64_t next = i + 1 < gens.size() ? (*gens[i + 1])[0] : kUnbounded;
    if (next == kUnbounded) return std::nullopt;
    total += (next - (*gens[i])[0]) * height;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> count_in(const GenList& gens, std::size_t k);

struct Slabs {
  std::vector<std::uint32_t> levels;  // ascending, levels[0] == 0
  std::uint32_t stop = 0;             // pure power exponent of the slicing variable
};

// Slab boundaries for slicing along variable k-1; nullopt when infinite.
std::optional<Slabs> slabs_for(const GenList& gens, std::size_t k) {
  const std::size_t v = k - 1;
  Slabs s;
  bool have_pure = false;
  for (const Monomial* g : gens) {
    s.levels.push_back((*g)[v]);
    bool pure = true;
    for (std::size_t i = 0; i < v; ++i)
      if ((*g)[i] != 0) {
        pure = false;
        break;
      }
    if (pure && (!have_pure || (*g)[v] < s.stop)) {
      s.stop = (*g)[v];
      have_pure = true;
    }
  }
  if (!have_pure) return std::nullopt;
  std::sort(s.levels.begin(), s.levels.end());
  s.levels.erase(std::unique(s.levels.begin(), s.levels.end()), s.levels.end());
  if (s.levels.front() != 0) return std::nullopt;
  std::erase_if(s.levels, [&s](std::uint32_t l) { return l >= s.stop; });
  return s;
}

std::optional<std::uint64_t> slab_count(const GenList& gens, std::size_t k, const Slabs& s, std::size_t i) {
  const std::size_t v = k - 1;
  const std::uint32_t level = s.levels[i];
  const std::uint32_t next = i + 1 < s.levels.size() ? s.levels[i + 1] : s.stop;
  GenList active;
  for (const Monomial* g : gens)
    if ((*g)[v] <= level) active.push_back(g);
  auto c = count_in(active, k - 1);
  if (!c) return std::nullopt;
  return *c * (next - level);
}

std::optional<std::uint64_t> count_in(const GenList& gens, std::size_t k) {
  if (gens.empty()) return std::nullopt;
  if (k == 0) return 0;
  if (k == 1) {
    std::uint64_t m = kUnbounded;
    for (const Monomial* g : gens) m = std::min<std::uint64_t>(m, (*g)[0]);
    return m;
  }
  if (k == 2) return count_2d(gens);
  auto s = slabs_for(gens, k);
  if (!s) return std::nullopt;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < s->levels.size(); ++i) {
    auto c = slab_count(gens, k, *s, i);
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

GenList prepare(const std::vector<Monomial>& minimal) {
  GenList gens;
  gens.reserve(minimal.size());
  for (const auto& m : minimal) gens.push_back(&m);
  return gens;
}

bool lex_less(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::vector<Monomial> minimalize(std::span<const Monomial> generators) {
  std::vector<Monomial> sorted(generators.begin(), generators.end());
  std::sort(sorted.begin(), sorted.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_less(a, b);
  });
  std::vector<Monomial> kept;
  std::vector<std::uint64_t> masks;
  for (const auto& m : sorted) {
    std::uint64_t mask = m.divmask();
    bool redundant = false;
    for (std::size_t i = 0; i < kept.size() && !redundant; ++i)
      redundant = (masks[i] & ~mask) == 0 && kept[i].divides(m);
    if (!redundant) {
      kept.push_back(m);
      masks.push_back(mask);
    }
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return kept;
}

std::optional<std::uint64_t> count_standard_monomials_serial(std::span<const Monomial> generators,
                                                             std::size_t nvars) {
  auto minimal = minimalize(generators);
  return count_in(prepare(minimal), nvars);
}

std::optional<std::uint64_t> count_standard_monomials(std::span<const Monomial> generators,
                                                      std::size_t nvars, int threads) {
  auto minimal = minimalize(generators);
  GenList gens = prepare(minimal);
  if (nvars <= 2 || gens.empty()) return count_in(gens, nvars);
  auto s = slabs_for(gens, nvars);
  if (!s) return std::nullopt;
  const auto nslabs = static_cast<std::int64_t>(s->levels.size());
  std::uint64_t total = 0;
  std::atomic<bool> infinite{false};
#ifdef _OPENMP
  int nthreads = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total) num_threads(nthreads)
#endif
  for (std::int64_t i = 0; i < nslabs; ++i) {
    auto c = slab_count(gens, nvars, *s, static_cast<std::size_t>(i));
    if (!c)
      infinite = true;
    else
      total += *c;
  }
  (void)threads;
  if (infinite) return std::nullopt;
  return total;
}

std::optional<std::vector<Monomial>> enumerate_standard_monomials(std::span<const Monomial> generators,
                                                                  std::size_t nvars, std::size_t limit) {
  auto count = count_standard_monomials_serial(generators, nvars);
  if (!count || *count > limit) return std::nullopt;
  auto minimal = minimalize(generators);
  std::vector<Monomial> out;
  out.reserve(*count);
  // Standard monomials form an order ideal, so a box walk pruned at the first
  // non-standard exponent in each coordinate visits only standard ones plus
  // one boundary step per line.
  Monomial cur(nvars);
  auto in_ideal = [&](const Monomial& m) {
    return std::any_of(minimal.begin(), minimal.end(), [&m](const Monomial& g) { return g.divides(m); });
  };
  auto walk = [&](auto&& self, std::size_t i) -> void {
    if (i == nvars) {
      out.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0;; ++e) {
      cur.set(i, e);
      Monomial probe(nvars);
      for (std::size_t j = 0; j <= i; ++j) probe.set(j, cur[j]);
      if (in_ideal(probe)) break;
      self(self, i + 1);
    }
    cur.set(i, 0);
  };
  if (nvars == 0) {
    if (!in_ideal(cur)) out.push_back(cur);
    return out;
  }
  walk(walk, 0);
  return out;
}

}  // namespace fsig

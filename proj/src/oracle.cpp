#include "fsig/oracle.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <map>
#include <numeric>
#include <string>

#include "fsig/dense_rank.hpp"
#include "fsig/error.hpp"
#include "fsig/rational.hpp"

namespace fsig::oracle {

namespace {

constexpr std::size_t kMaxBlockCells = 150'000'000;

using Packed = std::array<std::uint32_t, 8>;

std::uint64_t degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint64_t{0}); }

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint32_t p) { return a * b % p; }

Packed pack(const Exponents& e) {
  Packed out{};
  std::copy(e.begin(), e.end(), out.begin());
  return out;
}

bool divides(const Exponents& a, const Packed& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

// Integer basis of {w : w.d = 0 for every row d}.
std::vector<std::vector<std::int64_t>> orthogonal_lattice(const std::vector<std::vector<std::int64_t>>& diffs,
                                                          std::size_t n) {
  std::vector<std::vector<Rational>> m;
  for (const auto& d : diffs) {
    std::vector<Rational> row(d.begin(), d.end());
    m.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t k = 0; k < n; ++k) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Rational> w(n, 0);
    w[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) w[pivots[k]] = -m[k][free];
    BigInt scale = 1;
    for (const auto& x : w) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(x));
    std::vector<std::int64_t> iw;
    for (const auto& x : w) {
      Rational s = x * Rational(scale);
      iw.push_back(boost::multiprecision::numerator(s).convert_to<std::int64_t>());
    }
    out.push_back(std::move(iw));
  }
  return out;
}

struct RowRef {
  std::uint32_t gen;
  Packed m;
};

// Macaulay system of I below degree `bound`. The monomial generators are
// eliminated up front: every column they hit is a pivot of a unit row, so those
// columns are dropped and the rank bookkeeping only concerns the rest.
class System {
 public:
  System(const OIdeal& I, unsigned bound, bool truncate) : p_(I.p), n_(I.nvars), bound_(bound), truncate_(truncate) {
    if (n_ > 8) throw DomainError("oracle supports at most 8 variables");
    cap_.assign(n_, bound_);
    for (const auto& g : I.gens) {
      if (g.empty()) continue;
      if (g.size() == 1) {
        monos_.push_back(g.front().exps);
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < n_; ++i)
          if (g.front().exps[i]) ++support, var = i;
        if (support == 1) cap_[var] = std::min<std::uint64_t>(cap_[var], g.front().exps[var]);
        if (support == 0) unit_ = true;
      } else {
        others_.push_back(g);
      }
    }
    std::vector<std::vector<std::int64_t>> diffs;
    for (const auto& g : others_)
      for (std::size_t k = 1; k < g.size(); ++k) {
        std::vector<std::int64_t> d(n_);
        for (std::size_t i = 0; i < n_; ++i)
          d[i] = static_cast<std::int64_t>(g[k].exps[i]) - static_cast<std::int64_t>(g[0].exps[i]);
        diffs.push_back(std::move(d));
      }
    grading_ = orthogonal_lattice(diffs, n_);
  }

  bool unit() const { return unit_; }

  bool is_column(const Packed& c) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += c[i];
    if (d >= bound_) return false;
    for (const auto& mo : monos_)
      if (divides(mo, c, n_)) return false;
    return true;
  }

  std::vector<std::int64_t> key(const Packed& c) const {
    std::vector<std::int64_t> k;
    k.reserve(grading_.size());
    for (const auto& w : grading_) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < n_; ++i) s += w[i] * static_cast<std::int64_t>(c[i]);
      k.push_back(s);
    }
    return k;
  }

  // Number of columns: monomials below the bound outside the monomial part.
  std::uint64_t column_count() const {
    Packed m{};
    return count_columns(0, 0, m);
  }

  // Targets of row g*m restricted to live columns.
  std::vector<std::pair<Packed, std::uint32_t>> targets(const RowRef& r) const {
    std::vector<std::pair<Packed, std::uint32_t>> out;
    for (const auto& t : others_[r.gen]) {
      Packed c = r.m;
      for (std::size_t i = 0; i < n_; ++i) c[i] += t.exps[i];
      if (is_column(c)) out.emplace_back(c, t.coeff);
    }
    return out;
  }

  // Every nonzero row, grouped by grading key.
  std::map<std::vector<std::int64_t>, std::vector<RowRef>> rows_by_block() const {
    std::map<std::vector<std::int64_t>, std::vector<RowRef>> out;
    for (std::uint32_t gi = 0; gi < others_.size(); ++gi) {
      const OPoly& g = others_[gi];
      std::uint64_t maxdeg = 0;
      for (const auto& t : g) maxdeg = std::max(maxdeg, degree_of(t.exps));
      std::vector<std::size_t> live(g.size());
      std::iota(live.begin(), live.end(), 0);
      Packed m{};
      walk(gi, maxdeg, 0, 0, m, live, out);
    }
    return out;
  }

  std::uint32_t p() const { return p_; }
  std::size_t nvars() const { return n_; }

 private:
  std::uint64_t count_columns(std::size_t i, std::uint64_t deg, Packed& m) const {
    if (deg >= bound_) return 0;
    if (i + 1 == n_ || n_ == 0) {
      if (n_ == 0) return is_column(m) ? 1 : 0;
      // Last variable: the admissible exponents form an initial segment.
      std::uint64_t limit = std::min<std::uint64_t>(bound_ - deg, cap_[i]);
      for (const auto& mo : monos_) {
        bool prefix = true;
        for (std::size_t j = 0; j < i; ++j)
          if (mo[j] > m[j]) {
            prefix = false;
            break;
          }
        if (prefix) limit = std::min<std::uint64_t>(limit, mo[i]);
      }
      return limit;
    }
    std::uint64_t total = 0;
    for (std::uint64_t v = 0; v < cap_[i] && deg + v < bound_; ++v) {
      m[i] = static_cast<std::uint32_t>(v);
      total += count_columns(i + 1, deg + v, m);
    }
    m[i] = 0;
    return total;
  }

  void walk(std::uint32_t gi, std::uint64_t maxdeg, std::size_t i, std::uint64_t deg, Packed& m,
            const std::vector<std::size_t>& live, std::map<std::vector<std::int64_t>, std::vector<RowRef>>& out) const {
    const OPoly& g = others_[gi];
    if (!truncate_ && deg + maxdeg >= bound_) return;
    if (i == n_) {
      RowRef r{gi, m};
      if (!targets(r).empty()) {
        Packed first = m;
        for (std::size_t k = 0; k < n_; ++k) first[k] += g.front().exps[k];
        out[key(first)].push_back(r);
      }
      return;
    }
    std::vector<std::size_t> next;
    for (std::uint64_t v = 0; deg + v < bound_; ++v) {
      next.clear();
      for (std::size_t k : live) {
        const auto& t = g[k].exps;
        if (t[i] + v >= cap_[i]) continue;
        if (deg + v + degree_of(t) >= bound_) continue;
        next.push_back(k);
      }
      if (next.empty()) break;
      m[i] = static_cast<std::uint32_t>(v);
      walk(gi, maxdeg, i + 1, deg + v, m, next, out);
    }
    m[i] = 0;
  }

  std::uint32_t p_;
  std::size_t n_;
  unsigned bound_;
  bool truncate_;
  bool unit_ = false;
  std::vector<std::uint64_t> cap_;
  std::vector<Exponents> monos_;
  std::vector<OPoly> others_;
  std::vector<std::vector<std::int64_t>> grading_;
};

struct BlockMatrix {
  DenseMatrix matrix;
  std::map<Packed, std::size_t> columns;
};

struct PackedLess {
  bool operator()(const Packed& a, const Packed& b) const { return a < b; }
};

BlockMatrix build_block(const System& sys, const std::vector<RowRef>& rows) {
  BlockMatrix b;
  std::vector<std::vector<std::pair<Packed, std::uint32_t>>> all;
  all.reserve(rows.size());
  for (const auto& r : rows) {
    all.push_back(sys.targets(r));
    for (const auto& [c, coeff] : all.back()) b.columns.emplace(c, 0);
  }
  std::size_t k = 0;
  for (auto& [c, idx] : b.columns) idx = k++;
  if (rows.size() * b.columns.size() > kMaxBlockCells)
    throw ResourceLimitError("oracle block of " + std::to_string(rows.size()) + " x " +
                             std::to_string(b.columns.size()) + " exceeds the dense size limit");
  b.matrix = DenseMatrix(rows.size(), b.columns.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& [c, coeff] : all[i]) b.matrix.row(i)[b.columns.at(c)] = coeff;
  return b;
}

// Runs body(i) over `threads` OpenMP threads and rethrows the first failure.
template <class F>
void parallel_blocks(std::size_t n, int threads, F&& body) {
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : 1)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::optional<unsigned> auto_bound(const OIdeal& I) {
  std::vector<std::uint64_t> power(I.nvars, 0);
  for (const auto& g : I.gens) {
    if (g.size() != 1) continue;
    const auto& e = g.front().exps;
    std::size_t support = 0, var = 0;
    for (std::size_t i = 0; i < I.nvars; ++i)
      if (e[i]) ++support, var = i;
    if (support == 0) return 0;
    if (support == 1 && (power[var] == 0 || e[var] < power[var])) power[var] = e[var];
  }
  std::uint64_t d = 1;
  for (auto a : power) {
    if (a == 0) return std::nullopt;
    d += a - 1;
  }
  if (d >= (std::uint64_t{1} << 31)) throw ResourceLimitError("oracle degree bound too large");
  return static_cast<unsigned>(d);
}

struct Ranks {
  std::uint64_t full = 0;
  std::uint64_t low = 0;
};

// Sum of block ranks, and of ranks restricted to columns of degree < low_bound.
Ranks block_ranks(const System& sys, unsigned low_bound, int threads) {
  auto blocks = sys.rows_by_block();
  std::vector<const std::vector<RowRef>*> list;
  for (const auto& [k, rows] : blocks) list.push_back(&rows);
  std::vector<Ranks> per(list.size());
  parallel_blocks(list.size(), threads, [&](std::size_t i) {
    BlockMatrix b = build_block(sys, *list[i]);
    std::vector<std::size_t> keep;
    for (const auto& [c, idx] : b.columns) {
      std::uint64_t d = 0;
      for (std::size_t v = 0; v < sys.nvars(); ++v) d += c[v];
      if (d < low_bound) keep.push_back(idx);
    }
    if (keep.size() != b.columns.size()) {
      DenseMatrix low(b.matrix.rows, keep.size());
      for (std::size_t r = 0; r < b.matrix.rows; ++r)
        for (std::size_t k = 0; k < keep.size(); ++k) low.row(r)[k] = b.matrix.row(r)[keep[k]];
      per[i].low = rank_mod_p_serial(std::move(low), sys.p());
      per[i].full = rank_mod_p_serial(std::move(b.matrix), sys.p());
    } else {
      per[i].full = per[i].low = rank_mod_p_serial(std::move(b.matrix), sys.p());
    }
  });
  Ranks total;
  for (const auto& r : per) {
    total.full += r.full;
    total.low += r.low;
  }
  return total;
}

}  // namespace

OPoly from_polynomial(const Polynomial& f) {
  OPoly out;
  for (const auto& t : f.terms()) {
    auto e = t.mono.exponents();
    out.push_back({Exponents(e.begin(), e.end()), t.coeff});
  }
  return out;
}

OIdeal make_ideal(std::uint32_t p, std::size_t nvars, const std::vector<Polynomial>& gens) {
  OIdeal I{p, nvars, {}};
  for (const auto& g : gens)
    if (!g.is_zero()) I.gens.push_back(from_polynomial(g));
  return I;
}

OPoly multiply(const OPoly& a, const OPoly& b, std::uint32_t p) {
  std::map<Exponents, std::uint64_t> acc;
  for (const auto& s : a)
    for (const auto& t : b) {
      Exponents e(s.exps.size());
      for (std::size_t i = 0; i < e.size(); ++i) {
        std::uint64_t v = std::uint64_t{s.exps[i]} + t.exps[i];
        if (v >= (std::uint64_t{1} << 31)) throw OverflowError("exponent overflow in schoolbook product");
        e[i] = static_cast<std::uint32_t>(v);
      }
      auto& c = acc[e];
      c = (c + mulmod(s.coeff, t.coeff, p)) % p;
    }
  OPoly out;
  for (auto& [e, c] : acc)
    if (c) out.push_back({e, static_cast<std::uint32_t>(c)});
  return out;
}

OPoly expand_power(const OPoly& f, std::uint64_t k, std::uint32_t p) {
  if (k == 0) {
    std::size_t n = f.empty() ? 0 : f.front().exps.size();
    return {{Exponents(n, 0), 1 % p}};
  }
  OPoly acc = f;
  for (std::uint64_t i = 1; i < k; ++i) acc = multiply(acc, f, p);
  return acc;
}

std::uint32_t coefficient(const OPoly& f, const Exponents& e) {
  for (const auto& t : f)
    if (t.exps == e) return t.coeff;
  return 0;
}

std::vector<OPoly> frobenius_of_maximal(std::size_t nvars, std::uint64_t q) {
  std::vector<OPoly> out;
  for (std::size_t i = 0; i < nvars; ++i) {
    Exponents e(nvars, 0);
    e[i] = static_cast<std::uint32_t>(q);
    out.push_back({{e, 1}});
  }
  return out;
}

std::optional<std::uint64_t> oracle_colength(const OIdeal& I, std::optional<unsigned> degree_bound, int threads) {
  if (!degree_bound) {
    auto d = auto_bound(I);
    if (!d) return std::nullopt;
    if (*d == 0) return 0;
    System sys(I, *d, true);
    Ranks r = block_ranks(sys, *d, threads);
    return sys.column_count() - r.full;
  }
  const unsigned D = *degree_bound;
  System check(I, D + 1, true);
  if (check.unit()) return 0;
  Ranks r = block_ranks(check, D, threads);
  System low(I, D, true);
  std::uint64_t top_columns = check.column_count() - low.column_count();
  if (r.full - r.low != top_columns)
    throw DomainError("degree bound " + std::to_string(D) + " does not certify m^D inside the ideal");
  return low.column_count() - r.low;
}

bool oracle_member(const OPoly& f, const OIdeal& I, unsigned degree_bound) {
  for (const auto& t : f)
    if (degree_of(t.exps) >= degree_bound) throw DomainError("oracle membership needs deg f below the bound");
  auto d = auto_bound(I);
  if (d && *d == 0) return true;
  const bool exact = d.has_value();
  System sys(I, exact ? std::max(*d, degree_bound) : degree_bound, exact);
  std::map<std::vector<std::int64_t>, std::vector<std::pair<Packed, std::uint32_t>>> parts;
  for (const auto& t : f) {
    Packed c = pack(t.exps);
    if (sys.is_column(c)) parts[sys.key(c)].emplace_back(c, t.coeff);
  }
  if (parts.empty()) return true;
  auto blocks = sys.rows_by_block();
  for (const auto& [k, terms] : parts) {
    auto it = blocks.find(k);
    if (it == blocks.end()) return false;
    BlockMatrix b = build_block(sys, it->second);
    std::vector<std::uint32_t> v(b.columns.size(), 0);
    for (const auto& [c, coeff] : terms) {
      auto at = b.columns.find(c);
      if (at == b.columns.end()) return false;
      v[at->second] = coeff;
    }
    if (!in_row_space(b.matrix, v, sys.p())) return false;
  }
  return true;
}

std::uint64_t oracle_colon_colength(const OIdeal& J, const OPoly& g, std::optional<unsigned> degree_bound,
                                    int threads) {
  auto base = oracle_colength(J, degree_bound, threads);
  if (!base) throw DomainError("colon oracle needs an m-primary ideal");
  OIdeal Jg = J;
  Jg.gens.push_back(g);
  auto with = oracle_colength(Jg, degree_bound, threads);
  return *base - *with;
}

std::uint64_t oracle_splitting_number(std::uint32_t p, std::size_t nvars, const OPoly& f, unsigned e, int threads) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  OIdeal I{p, nvars, frobenius_of_maximal(nvars, q)};
  OPoly power = expand_power(f, q - 1, p);
  if (!power.empty()) I.gens.push_back(std::move(power));
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < nvars; ++i) box *= q;
  return box - *oracle_colength(I, std::nullopt, threads);
}

}  // namespace fsig::oracle

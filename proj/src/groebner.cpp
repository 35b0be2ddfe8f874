#include "fsig/groebner.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "fsig/error.hpp"

namespace fsig {

namespace {

// Divisibility pre-filter: each variable gets 64/n bits, turned on as a
// unary counter whose steps spread evenly up to that variable's largest
// exponent in the input. Monotone in every exponent, so a | b implies
// mask(a) is a subset of mask(b).
class MaskScheme {
 public:
  MaskScheme() = default;
  template <class Range>
  MaskScheme(std::size_t nvars, const Range& polys) : nvars_(nvars) {
    bits_ = nvars ? static_cast<unsigned>(std::min<std::size_t>(64 / nvars, 32)) : 0;
    for (const auto& f : polys)
      for (const auto& t : f.terms())
        for (std::size_t i = 0; i < nvars; ++i) max_[i] = std::max(max_[i], t.mono[i]);
  }
  std::uint64_t operator()(const Monomial& m) const noexcept {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      std::uint64_t e = m[i];
      if (e == 0) continue;
      std::uint64_t top = std::max<std::uint64_t>(max_[i], 1);
      std::uint64_t k = 1 + std::min<std::uint64_t>(bits_ - 1, (e - 1) * bits_ / top);
      std::uint64_t run = k >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
      mask |= run << (bits_ * i);
    }
    return mask;
  }

 private:
  std::size_t nvars_ = 0;
  unsigned bits_ = 0;
  std::array<std::uint32_t, kMaxVariables> max_{};
};

struct Divisor {
  Monomial lm;
  std::uint64_t mask;
  std::size_t index;
};

// Linear lookup of a basis element whose leading monomial divides a given
// monomial. The first match in insertion order wins, which keeps reduction
// deterministic.
class DivisorList {
 public:
  explicit DivisorList(const MaskScheme* scheme) : scheme_(scheme) {}
  void add(const Monomial& lm, std::size_t index) { items_.push_back({lm, (*scheme_)(lm), index}); }
  void remove(std::size_t index) {
    std::erase_if(items_, [index](const Divisor& d) { return d.index == index; });
  }
  const Divisor* find(const Monomial& m) const {
    std::uint64_t mask = (*scheme_)(m);
    for (const auto& d : items_)
      if ((d.mask & ~mask) == 0 && d.lm.divides(m)) return &d;
    return nullptr;
  }
  std::size_t size() const { return items_.size(); }

 private:
  const MaskScheme* scheme_;
  std::vector<Divisor> items_;
};

// Terms of `work[from..]` minus c * m * tail(b), merged in order.
std::vector<Term> subtract_tail(const PolyRing& ring, const std::vector<Term>& work, std::size_t from,
                                Coeff c, const Monomial& m, const Polynomial& b) {
  const auto& F = ring.field();
  Coeff nc = F.neg(c);
  const auto& bt = b.terms();
  std::vector<Term> out;
  out.reserve(work.size() - from + bt.size());
  std::size_t i = from, j = 1;
  while (i < work.size() && j < bt.size()) {
    Monomial mb = bt[j].mono * m;
    auto cmp = ring.compare(work[i].mono, mb);
    if (cmp > 0) {
      out.push_back(work[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{mb, F.mul(bt[j].coeff, nc)});
      ++j;
    } else {
      Coeff s = F.add(work[i].coeff, F.mul(bt[j].coeff, nc));
      if (s) out.push_back(Term{mb, s});
      ++i;
      ++j;
    }
  }
  for (; i < work.size(); ++i) out.push_back(work[i]);
  for (; j < bt.size(); ++j) out.push_back(Term{bt[j].mono * m, F.mul(bt[j].coeff, nc)});
  return out;
}

// Full reduction against monic divisors stored in `polys`.
std::vector<Term> reduce_terms(const PolyRing& ring, std::vector<Term> work, const DivisorList& divisors,
                               const std::vector<Polynomial>& polys, std::size_t max_terms) {
  std::vector<Term> remainder;
  std::size_t idx = 0;
  while (idx < work.size()) {
    const Term t = work[idx];
    const Divisor* d = divisors.find(t.mono);
    if (!d) {
      remainder.push_back(t);
      ++idx;
      continue;
    }
    work = subtract_tail(ring, work, idx + 1, t.coeff, t.mono / d->lm, polys[d->index]);
    idx = 0;
    if (work.size() + remainder.size() > max_terms)
      throw ResourceLimitError("polynomial size exceeds the term budget of " + std::to_string(max_terms));
  }
  return remainder;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint64_t mask;
  std::uint64_t sugar;
};

class Buchberger {
 public:
  Buchberger(const PolyRing& ring, const GbLimits& limits, MaskScheme scheme)
      : ring_(ring), limits_(limits), scheme_(scheme), divisors_(&scheme_), less_{&ring} {}

  void add(Polynomial g, bool known) {
    if (g.is_zero()) return;
    std::uint64_t sugar = g.total_degree();
    if (!known) {
      g = finish(reduce_terms(ring_, g.terms(), divisors_, polys_, limits_.max_terms));
      if (g.is_zero()) return;
    } else {
      g = ring_.monic(g);
    }
    insert(std::move(g), sugar, known);
  }

  std::vector<Polynomial> run() {
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      std::pop_heap(pairs_.begin(), pairs_.end(), greater_);
      Pair pr = pairs_.back();
      pairs_.pop_back();
      if (++processed > limits_.max_pairs)
        throw ResourceLimitError("Buchberger pair budget of " + std::to_string(limits_.max_pairs) + " exceeded");
      const Polynomial& a = polys_[pr.i];
      const Polynomial& b = polys_[pr.j];
      auto work = subtract_tail(ring_, tail_times(a, pr.lcm / a.leading_monomial()), 0, 1,
                                pr.lcm / b.leading_monomial(), b);
      Polynomial h = finish(reduce_terms(ring_, std::move(work), divisors_, polys_, limits_.max_terms));
      if (!h.is_zero()) insert(std::move(h), pr.sugar, false);
    }
    return reduced_basis();
  }

 private:
  struct PairLess {
    const PolyRing* ring;
    bool operator()(const Pair& x, const Pair& y) const {
      if (x.sugar != y.sugar) return x.sugar < y.sugar;
      auto c = ring->compare(x.lcm, y.lcm);
      if (c != 0) return c < 0;
      if (x.i != y.i) return x.i < y.i;
      return x.j < y.j;
    }
  };
  struct PairGreater {
    PairLess less;
    bool operator()(const Pair& x, const Pair& y) const { return less(y, x); }
  };

  Polynomial finish(std::vector<Term> terms) const { return ring_.monic(ring_.make(std::move(terms))); }

  std::vector<Term> tail_times(const Polynomial& a, const Monomial& m) const {
    std::vector<Term> out;
    out.reserve(a.size());
    for (std::size_t k = 1; k < a.size(); ++k) out.push_back(Term{a.terms()[k].mono * m, a.terms()[k].coeff});
    return out;
  }

  // Gebauer-Moeller update with the new element h.
  void insert(Polynomial h, std::uint64_t sugar, bool known) {
    if (polys_.size() >= limits_.max_basis)
      throw ResourceLimitError("Groebner basis size exceeds " + std::to_string(limits_.max_basis));
    const std::size_t hi = polys_.size();
    const Monomial lmh = h.leading_monomial();
    const std::uint64_t maskh = scheme_(lmh);
    const bool h_monomial = h.is_monomial();
    polys_.push_back(std::move(h));
    lms_.push_back(lmh);
    lm_masks_.push_back(maskh);
    monomial_.push_back(h_monomial);
    sugars_.push_back(sugar);
    known_.push_back(known);
    active_.push_back(true);

    // Chain criterion: keep pairs whose lcm is minimal, one per lcm (the
    // oldest partner), and drop a whole lcm class when one of its members has
    // coprime leading terms. `kept` stays an antichain under divisibility.
    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool drop;
    };
    std::vector<Candidate> kept;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!active_[g]) continue;
      if (known && known_[g]) continue;
      // S-polynomial of two monomials vanishes.
      if (h_monomial && monomial_[g]) continue;
      const Monomial& lmg = lms_[g];
      Monomial l = lmg.lcm(lmh);
      bool coprime = l.degree() == lmg.degree() + lmh.degree();
      bool dominated = false;
      for (auto& c : kept) {
        if (c.lcm.divides(l)) {
          dominated = true;
          if (coprime && c.lcm.degree() == l.degree()) c.drop = true;
          break;
        }
      }
      if (dominated) continue;
      std::erase_if(kept, [&l](const Candidate& c) { return l.divides(c.lcm); });
      kept.push_back({g, l, coprime, false});
    }
    // Old pairs made redundant by h.
    bool removed = false;
    std::erase_if(pairs_, [&](const Pair& pr) {
      if ((maskh & ~pr.mask) != 0 || !lmh.divides(pr.lcm)) return false;
      Monomial li = lms_[pr.i].lcm(lmh);
      if (li == pr.lcm) return false;
      Monomial lj = lms_[pr.j].lcm(lmh);
      if (lj == pr.lcm) return false;
      removed = true;
      return true;
    });
    if (removed) std::make_heap(pairs_.begin(), pairs_.end(), greater_);
    for (const auto& c : kept) {
      if (c.drop || c.coprime) continue;
      const Monomial& lmg = lms_[c.g];
      std::uint64_t sg = sugars_[c.g] + (c.lcm.degree() - lmg.degree());
      std::uint64_t sh = sugar + (c.lcm.degree() - lmh.degree());
      pairs_.push_back(Pair{c.g, hi, c.lcm, scheme_(c.lcm), std::max(sg, sh)});
      std::push_heap(pairs_.begin(), pairs_.end(), greater_);
    }
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && (maskh & ~lm_masks_[g]) == 0 && lmh.divides(lms_[g])) {
        active_[g] = false;
        divisors_.remove(g);
      }
    }
    divisors_.add(lmh, hi);
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<std::size_t> idx;
    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g]) idx.push_back(g);
    std::vector<Polynomial> out;
    out.reserve(idx.size());
    for (std::size_t g : idx) {
      const Polynomial& f = polys_[g];
      std::vector<Term> tail(f.terms().begin() + 1, f.terms().end());
      auto reduced = reduce_terms(ring_, std::move(tail), divisors_, polys_, limits_.max_terms);
      reduced.insert(reduced.begin(), f.leading());
      out.push_back(ring_.make(std::move(reduced)));
    }
    std::sort(out.begin(), out.end(), [this](const Polynomial& a, const Polynomial& b) {
      return ring_.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return out;
  }

  const PolyRing& ring_;
  GbLimits limits_;
  std::vector<Polynomial> polys_;
  std::vector<Monomial> lms_;
  std::vector<std::uint64_t> lm_masks_;
  std::vector<std::uint8_t> monomial_;
  std::vector<std::uint64_t> sugars_;
  std::vector<std::uint8_t> known_;
  std::vector<std::uint8_t> active_;
  MaskScheme scheme_;
  DivisorList divisors_;
  PairLess less_;
  PairGreater greater_{less_};
  std::vector<Pair> pairs_;
};

void sort_generators(const PolyRing& ring, std::vector<Polynomial>& gens) {
  std::erase_if(gens, [](const Polynomial& g) { return g.is_zero(); });
  std::stable_sort(gens.begin(), gens.end(), [&ring](const Polynomial& a, const Polynomial& b) {
    return ring.compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
}

bool all_monomials(const std::vector<Polynomial>& gens) {
  return std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

std::vector<Polynomial> minimal_monomial_basis(const PolyRing& ring, std::vector<Polynomial> gens) {
  sort_generators(ring, gens);
  std::vector<Polynomial> out;
  for (const auto& g : gens) {
    const Monomial& m = g.leading_monomial();
    bool redundant = std::any_of(out.begin(), out.end(),
                                 [&m](const Polynomial& o) { return o.leading_monomial().divides(m); });
    if (!redundant) out.push_back(ring.term(m, 1));
  }
  // Ascending order processing keeps out minimal: a later (larger) monomial
  // can never divide an earlier one except when equal.
  return out;
}

}  // namespace

std::vector<Polynomial> groebner_basis(const PolyRing& ring, std::vector<Polynomial> generators,
                                       const GbLimits& limits) {
  sort_generators(ring, generators);
  if (all_monomials(generators)) return minimal_monomial_basis(ring, std::move(generators));
  Buchberger bb(ring, limits, MaskScheme(ring.nvars(), generators));
  for (auto& g : generators) bb.add(std::move(g), false);
  return bb.run();
}

std::vector<Polynomial> extend_groebner_basis(const PolyRing& ring, std::vector<Polynomial> known,
                                              std::vector<Polynomial> extra, const GbLimits& limits) {
  sort_generators(ring, known);
  sort_generators(ring, extra);
  std::vector<Polynomial> all = known;
  all.insert(all.end(), extra.begin(), extra.end());
  if (all_monomials(all)) return minimal_monomial_basis(ring, std::move(all));
  Buchberger bb(ring, limits, MaskScheme(ring.nvars(), all));
  for (auto& g : known) bb.add(std::move(g), true);
  for (auto& g : extra) bb.add(std::move(g), false);
  return bb.run();
}

Polynomial normal_form(const PolyRing& ring, const Polynomial& f, std::span<const Polynomial> basis) {
  MaskScheme scheme(ring.nvars(), basis);
  DivisorList divisors(&scheme);
  std::vector<Polynomial> monic;
  monic.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    divisors.add(g.leading_monomial(), monic.size());
    monic.push_back(ring.monic(g));
  }
  GbLimits limits;
  return ring.make(reduce_terms(ring, f.terms(), divisors, monic, limits.max_terms));
}

Polynomial s_polynomial(const PolyRing& ring, const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) return {};
  Polynomial a = ring.monic(f), b = ring.monic(g);
  Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  return ring.sub(ring.mul_term(a, l / a.leading_monomial(), 1), ring.mul_term(b, l / b.leading_monomial(), 1));
}

bool satisfies_buchberger_criterion(const PolyRing& ring, std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].leading_monomial().coprime(basis[j].leading_monomial())) continue;
      if (!normal_form(ring, s_polynomial(ring, basis[i], basis[j]), basis).is_zero()) return false;
    }
  return true;
}

bool is_reduced_basis(std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || basis[i].leading().coeff != 1) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial& lm = basis[j].leading_monomial();
      for (const auto& t : basis[i].terms())
        if (lm.divides(t.mono)) return false;
    }
  }
  return true;
}

}  // namespace fsig

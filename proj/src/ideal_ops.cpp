#include "fsig/ideal_ops.hpp"

#include <algorithm>

#include "fsig/error.hpp"
#include "fsig/staircase.hpp"

namespace fsig {

namespace {

void require_same_ring(const Ideal& I, const Ideal& J) {
  if (I.ring_ptr() != J.ring_ptr() &&
      !(I.ring().characteristic() == J.ring().characteristic() && I.ring().names() == J.ring().names() &&
        I.ring().order() == J.ring().order()))
    throw DomainError("ideals live in different rings");
}

bool all_monomial(const std::vector<Polynomial>& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

// t-free part of the elimination basis of `gens` (already embedded into `E`).
std::vector<Polynomial> eliminate_first(const PolyRing& base, const PolyRing& E, std::vector<Polynomial> gens) {
  auto gb = groebner_basis(E, std::move(gens));
  std::vector<Polynomial> out;
  for (const auto& g : gb)
    if (g.leading_monomial()[0] == 0) out.push_back(restrict_to_base(base, g, 1));
  return out;
}

Polynomial one_minus_t(const PolyRing& E) { return E.sub(E.constant(1), E.variable(0)); }

}  // namespace

Ideal sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  return add_generators(I, J.generators());
}

Ideal add_generators(const Ideal& I, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> gens = I.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  if (!I.has_basis()) return Ideal(I.ring_ptr(), std::move(gens));
  auto basis = extend_groebner_basis(I.ring(), I.basis(), extra);
  Ideal out = Ideal::from_basis(I.ring_ptr(), std::move(basis));
  return out;
}

Ideal product(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::vector<Polynomial> gens;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) gens.push_back(I.ring().mul(a, b));
  return Ideal(I.ring_ptr(), std::move(gens));
}

Ideal colon(const Ideal& I, const Polynomial& f) {
  const PolyRing& R = I.ring();
  if (f.is_zero()) throw DomainError("colon by the zero polynomial");
  if (f.is_monomial() && f.leading_monomial().is_one()) return I;
  if (I.contains(f)) return Ideal::unit(I.ring_ptr());
  const auto& basis = I.basis();
  if (basis.empty()) return I;
  if (f.is_monomial() && all_monomial(basis)) {
    const Monomial& m = f.leading_monomial();
    std::vector<Polynomial> gens;
    for (const auto& g : basis) gens.push_back(R.term(g.leading_monomial() / g.leading_monomial().gcd(m)));
    return Ideal(I.ring_ptr(), std::move(gens));
  }
  auto E = make_elimination_ring(R);
  const Polynomial t = E->variable(0);
  std::vector<Polynomial> gens;
  for (const auto& g : basis) gens.push_back(E->mul(t, embed(*E, g, 1)));
  gens.push_back(E->mul(one_minus_t(*E), embed(*E, f, 1)));
  std::vector<Polynomial> quotients;
  for (const auto& h : eliminate_first(R, *E, std::move(gens))) {
    auto [q, r] = R.divide(h, f);
    if (!r.is_zero()) throw Error("internal: intersection element not divisible by the colon polynomial");
    quotients.push_back(std::move(q));
  }
  return Ideal::from_basis(I.ring_ptr(), groebner_basis(R, std::move(quotients)));
}

Ideal colon(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::optional<Ideal> acc;
  const auto& gens = J.has_basis() ? J.basis() : J.generators();
  for (const auto& g : gens) {
    Ideal c = colon(I, g);
    acc = acc ? intersect(*acc, c) : c;
  }
  if (!acc) return Ideal::unit(I.ring_ptr());
  return *acc;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  const PolyRing& R = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal(I.ring_ptr(), std::vector<Polynomial>{});
  if (I.is_unit()) return J;
  if (J.is_unit()) return I;
  const auto& bi = I.basis();
  const auto& bj = J.basis();
  if (all_monomial(bi) && all_monomial(bj)) {
    std::vector<Polynomial> gens;
    for (const auto& a : bi)
      for (const auto& b : bj) gens.push_back(R.term(a.leading_monomial().lcm(b.leading_monomial())));
    return Ideal::from_basis(I.ring_ptr(), groebner_basis(R, std::move(gens)));
  }
  auto E = make_elimination_ring(R);
  const Polynomial t = E->variable(0);
  const Polynomial u = one_minus_t(*E);
  std::vector<Polynomial> gens;
  for (const auto& g : bi) gens.push_back(E->mul(t, embed(*E, g, 1)));
  for (const auto& g : bj) gens.push_back(E->mul(u, embed(*E, g, 1)));
  auto elim = eliminate_first(R, *E, std::move(gens));
  return Ideal::from_basis(I.ring_ptr(), std::move(elim));
}

Colength colength(const Ideal& I, int threads) {
  auto lms = I.leading_monomials();
  if (lms.empty()) return I.ring().nvars() == 0 ? Colength::finite(1) : Colength::infinite();
  auto c = count_standard_monomials(lms, I.ring().nvars(), threads);
  return c ? Colength::finite(*c) : Colength::infinite();
}

Staircase staircase(const Ideal& I, std::size_t limit) {
  auto lms = I.leading_monomials();
  Staircase s;
  auto c = count_standard_monomials_serial(lms, I.ring().nvars());
  if (lms.empty() && I.ring().nvars() == 0) c = 1;
  s.finite = c.has_value();
  if (s.finite) s.monomials = enumerate_standard_monomials(lms, I.ring().nvars(), limit);
  return s;
}

std::size_t krull_dimension(const Ideal& I) {
  if (I.is_unit()) throw DomainError("dimension of the unit ideal is undefined");
  auto lms = I.leading_monomials();
  const std::size_t n = I.ring().nvars();
  std::size_t best = 0;
  for (std::uint32_t subset = 0; subset < (1u << n); ++subset) {
    auto size = static_cast<std::size_t>(__builtin_popcount(subset));
    if (size <= best) continue;
    bool independent = std::none_of(lms.begin(), lms.end(), [&](const Monomial& m) {
      for (std::size_t i = 0; i < n; ++i)
        if (m[i] != 0 && !(subset & (1u << i))) return false;
      return true;
    });
    if (independent) best = size;
  }
  return best;
}

bool is_m_primary(const Ideal& I) {
  Colength c = colength(I);
  if (!c.is_finite()) return false;
  if (c.value() == 0) return false;
  const PolyRing& R = I.ring();
  const auto& basis = I.basis();
  // In a local Artinian quotient of length L every element of the maximal
  // ideal satisfies x^L = 0; compute x^L mod I by repeated squaring.
  for (std::size_t v = 0; v < R.nvars(); ++v) {
    Polynomial acc = R.constant(1);
    Polynomial base = normal_form(R, R.variable(v), basis);
    for (std::uint64_t k = c.value(); k; k >>= 1) {
      if (k & 1) acc = normal_form(R, R.mul(acc, base), basis);
      base = normal_form(R, R.mul(base, base), basis);
    }
    if (!acc.is_zero()) return false;
  }
  return true;
}

}  // namespace fsig

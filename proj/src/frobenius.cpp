#include "fsig/frobenius.hpp"

#include "fsig/error.hpp"
#include "fsig/groebner.hpp"
#include "fsig/ideal_ops.hpp"

namespace fsig {

namespace {

Ideal frobenius_of_maximal(const PolyRingPtr& S, std::uint64_t q) {
  if (q >= kExponentLimit) throw OverflowError("bracket power exponent exceeds 2^31");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < S->nvars(); ++i) gens.push_back(S->term(S->variable_monomial(i, static_cast<std::uint32_t>(q))));
  return Ideal::from_basis(S, groebner_basis(*S, std::move(gens)));
}

std::uint64_t require_finite(const Ideal& I, int threads, const char* what) {
  Colength c = colength(I, threads);
  if (!c.is_finite()) throw DomainError(std::string(what) + " is not m-primary");
  return c.value();
}

SplittingIdealRecord finish(const RingPresentation& ring, unsigned e, std::uint64_t q, Ideal I, int threads) {
  const PolyRing& S = ring.poly_ring();
  if (!I.is_unit()) {
    const auto& basis = I.basis();
    for (std::size_t i = 0; i < S.nvars(); ++i)
      if (!normal_form(S, S.term(S.variable_monomial(i, static_cast<std::uint32_t>(q))), basis).is_zero())
        throw Error("internal: splitting ideal does not contain m^[q]");
  }
  std::uint64_t a = I.is_unit() ? 0 : require_finite(I, threads, "splitting ideal");
  return SplittingIdealRecord{e, q, std::move(I), a, splitting_method_label(ring)};
}

SplittingRoute resolve(const RingPresentation& ring, SplittingRoute route) {
  if (route != SplittingRoute::Automatic) return route;
  return ring.hypersurface_equation() ? SplittingRoute::HypersurfaceRecursive : SplittingRoute::General;
}

Ideal general_fedder(const RingPresentation& ring, std::uint64_t q) {
  const PolyRingPtr& S = ring.poly_ring_ptr();
  const Ideal& a = ring.defining_ideal();
  a.basis();
  unsigned e = 0;
  for (std::uint64_t t = q; t > 1; t /= ring.characteristic()) ++e;
  Ideal aq = bracket_power(a, e);
  Ideal splitters = colon(aq, a);
  std::vector<Polynomial> gens = frobenius_of_maximal(S, q).basis();
  for (const auto& g : aq.basis()) gens.push_back(g);
  Ideal target = Ideal::from_basis(S, groebner_basis(*S, std::move(gens)));
  return colon(target, splitters);
}

Ideal direct_hypersurface(const RingPresentation& ring, const Polynomial& f, std::uint64_t q) {
  const PolyRingPtr& S = ring.poly_ring_ptr();
  Ideal c = colon(frobenius_of_maximal(S, q), S->pow(f, q - 1));
  return add_generators(c, {f});
}

}  // namespace

std::uint64_t prime_power(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (std::uint64_t{1} << 62) / p) throw OverflowError("p^e overflows");
    q *= p;
  }
  return q;
}

Ideal bracket_power(const Ideal& I, unsigned e) {
  const PolyRing& S = I.ring();
  std::uint64_t q = prime_power(S.characteristic(), e);
  if (q == 1) return I;
  auto lift = [&](const std::vector<Polynomial>& v) {
    std::vector<Polynomial> out;
    out.reserve(v.size());
    for (const auto& g : v) {
      for (const auto& t : g.terms())
        for (std::size_t i = 0; i < S.nvars(); ++i)
          if (static_cast<std::uint64_t>(t.mono[i]) * q >= kExponentLimit)
            throw OverflowError("bracket power exponent exceeds 2^31");
      out.push_back(S.frobenius(g, q));
    }
    return out;
  };
  if (I.has_basis()) return Ideal::from_basis(I.ring_ptr(), lift(I.basis()));
  return Ideal(I.ring_ptr(), lift(I.generators()));
}

std::string splitting_method_label(const RingPresentation& ring) {
  if (ring.is_polynomial_ring()) return "regular";
  if (ring.hypersurface_equation()) return "Fedder-type (hypersurface)";
  if (ring.is_complete_intersection()) return "Fedder-type (complete intersection)";
  return "Fedder-type (unverified class)";
}

SplittingIdealRecord splitting_ideal(const RingPresentation& ring, unsigned e, SplittingRoute route, int threads) {
  if (e == 0) throw DomainError("splitting ideals start at e = 1");
  auto all = splitting_ideals(ring, e, route, threads);
  return std::move(all.back());
}

std::vector<SplittingIdealRecord> splitting_ideals(const RingPresentation& ring, unsigned e_max, SplittingRoute route,
                                                   int threads) {
  const PolyRingPtr& S = ring.poly_ring_ptr();
  const std::uint32_t p = ring.characteristic();
  std::vector<SplittingIdealRecord> out;
  if (ring.is_polynomial_ring()) {
    for (unsigned e = 1; e <= e_max; ++e) {
      std::uint64_t q = prime_power(p, e);
      out.push_back(finish(ring, e, q, frobenius_of_maximal(S, q), threads));
    }
    return out;
  }
  route = resolve(ring, route);
  auto f = ring.hypersurface_equation();
  if (route != SplittingRoute::General && !f) throw DomainError("hypersurface route on a non-principal defining ideal");
  std::optional<Ideal> previous;
  Polynomial step = f ? S->pow(*f, p - 1) : Polynomial{};
  for (unsigned e = 1; e <= e_max; ++e) {
    std::uint64_t q = prime_power(p, e);
    Ideal I = Ideal::unit(S);
    switch (route) {
      case SplittingRoute::General:
        I = general_fedder(ring, q);
        break;
      case SplittingRoute::HypersurfaceDirect:
        I = direct_hypersurface(ring, *f, q);
        break;
      default: {
        if (previous && previous->is_unit()) break;
        Ideal base = previous ? bracket_power(*previous, 1) : frobenius_of_maximal(S, p);
        I = colon(base, step);
        break;
      }
    }
    I.basis();
    previous = I;
    out.push_back(finish(ring, e, q, std::move(I), threads));
  }
  return out;
}

std::uint64_t splitting_number(const RingPresentation& ring, unsigned e) { return splitting_ideal(ring, e).a_e; }

bool is_f_pure(const RingPresentation& ring) { return splitting_number(ring, 1) > 0; }

std::uint64_t quotient_length(const RingPresentation& ring, const Ideal& K, int threads) {
  Ideal full = ring.with_relations(K);
  if (full.is_unit()) return 0;
  return require_finite(full, threads, "ideal");
}

std::uint64_t bracket_length(const RingPresentation& ring, const Ideal& K, unsigned e, int threads) {
  Ideal full = ring.with_relations(K);
  full.basis();
  Ideal b = bracket_power(full, e);
  Ideal total = ring.is_polynomial_ring() ? b : add_generators(b, ring.relations());
  if (total.is_unit()) return 0;
  return require_finite(total, threads, "bracket power");
}

KunzReport kunz_regularity(const RingPresentation& ring) {
  KunzReport r;
  r.dimension = ring.dimension();
  r.length = bracket_length(ring, Ideal::maximal(ring.poly_ring_ptr()), 1);
  r.expected = prime_power(ring.characteristic(), static_cast<unsigned>(r.dimension));
  r.regular = r.length == r.expected;
  return r;
}

SplittingPrimeApprox splitting_prime_approx(const RingPresentation& ring, unsigned e_max) {
  if (e_max < 2) throw DomainError("splitting prime approximation needs e_max >= 2");
  return splitting_prime_approx(ring, splitting_ideals(ring, e_max));
}

SplittingPrimeApprox splitting_prime_approx(const RingPresentation&,
                                            const std::vector<SplittingIdealRecord>& records) {
  if (records.size() < 2) throw DomainError("splitting prime approximation needs e_max >= 2");
  std::optional<Ideal> acc, before;
  for (const auto& r : records) {
    before = acc;
    if (!acc || acc->contains(r.ideal)) {
      acc = r.ideal;
    } else if (!r.ideal.contains(*acc)) {
      acc = intersect(*acc, r.ideal);
    }
  }
  bool stable = before && acc->same_as(*before);
  return SplittingPrimeApprox{*acc, stable, static_cast<unsigned>(records.size())};
}

}  // namespace fsig

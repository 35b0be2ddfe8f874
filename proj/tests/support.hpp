#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "fsig/golden.hpp"
#include "fsig/polynomial.hpp"
#include "fsig/ring.hpp"

namespace fsig::test {

inline const GoldenValues& golden() {
  static const GoldenValues g = GoldenValues::load(FSIG_GOLDEN_FILE);
  return g;
}

inline PolyRingPtr poly_ring(std::uint32_t p, std::vector<std::string> vars, OrderKind order = OrderKind::Grevlex) {
  return std::make_shared<const PolyRing>(p, std::move(vars), TermOrder{order, 0});
}

inline RingPresentation regular(std::uint32_t p, std::size_t n) {
  static const char* names[] = {"x", "y", "z", "w", "u", "v"};
  return RingPresentation(p, std::vector<std::string>(names, names + n), {});
}
inline RingPresentation node() { return RingPresentation(5, {"x", "y"}, {"x*y"}); }
inline RingPresentation cusp() { return RingPresentation(5, {"x", "y"}, {"x^2 - y^3"}); }
inline RingPresentation a1() { return RingPresentation(7, {"x", "y", "z"}, {"x*y - z^2"}); }
inline RingPresentation monsky() {
  return RingPresentation(2, {"x", "y", "z", "u", "v"}, {"u*v + x^3 + y^3 + x*y*z"});
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, std::uint32_t max_exp) {
  Monomial m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, static_cast<std::uint32_t>(rng() % (max_exp + 1)));
  return m;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const PolyRing& R, std::size_t terms, std::uint32_t max_exp) {
  std::vector<Term> t;
  for (std::size_t k = 0; k < terms; ++k)
    t.push_back({random_monomial(rng, R.nvars(), max_exp), static_cast<Coeff>(rng() % R.characteristic())});
  return R.make(std::move(t));
}

}  // namespace fsig::test

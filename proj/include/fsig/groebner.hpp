#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fsig/polynomial.hpp"

namespace fsig {

// Budget for a single Buchberger run; exceeding it raises ResourceLimitError.
struct GbLimits {
  std::size_t max_pairs = 20'000'000;
  std::size_t max_basis = 2'000'000;
  std::size_t max_terms = 20'000'000;
};

// Reduced Groebner basis of the ideal generated by `generators`, sorted
// ascending by leading monomial. Buchberger with sugar pair selection and the
// Gebauer-Moeller criteria. The zero ideal gives an empty basis.
std::vector<Polynomial> groebner_basis(const PolyRing& ring, std::vector<Polynomial> generators,
                                       const GbLimits& limits = {});

// Reduced Groebner basis of (known) + (extra) where `known` is already a
// Groebner basis; pairs inside `known` are not recomputed.
std::vector<Polynomial> extend_groebner_basis(const PolyRing& ring, std::vector<Polynomial> known,
                                              std::vector<Polynomial> extra,
                                              const GbLimits& limits = {});

// Fully reduced remainder of f by `basis` (any divisor list; unique when
// `basis` is a Groebner basis).
Polynomial normal_form(const PolyRing& ring, const Polynomial& f, std::span<const Polynomial> basis);

Polynomial s_polynomial(const PolyRing& ring, const Polynomial& f, const Polynomial& g);

// Buchberger's criterion: all S-polynomials reduce to zero.
bool satisfies_buchberger_criterion(const PolyRing& ring, std::span<const Polynomial> basis);

// Reduced-ness as a structural check: monic, no leading monomial divides
// another, no term of an element divisible by another element's leading term.
bool is_reduced_basis(std::span<const Polynomial> basis);

}  // namespace fsig

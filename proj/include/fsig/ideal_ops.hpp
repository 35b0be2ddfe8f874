#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fsig/ideal.hpp"

namespace fsig {

// I + J. Reuses I's basis when it is already known.
Ideal sum(const Ideal& I, const Ideal& J);
Ideal add_generators(const Ideal& I, const std::vector<Polynomial>& extra);
Ideal product(const Ideal& I, const Ideal& J);

// (I : f) = {g | g f ∈ I}. Throws DomainError for f = 0.
Ideal colon(const Ideal& I, const Polynomial& f);
// (I : J) = ∩ over generators g of J of (I : g). (I : 0) is the unit ideal.
Ideal colon(const Ideal& I, const Ideal& J);

// I ∩ J via elimination of one auxiliary variable t from t I + (1 - t) J.
Ideal intersect(const Ideal& I, const Ideal& J);

Colength colength(const Ideal& I, int threads = 1);

struct Staircase {
  bool finite = false;
  // Populated when finite and no larger than the enumeration limit.
  std::optional<std::vector<Monomial>> monomials;
};
Staircase staircase(const Ideal& I, std::size_t limit = 1'000'000);

// dim S/I via maximal independent sets of the initial ideal.
// Throws DomainError for the unit ideal.
std::size_t krull_dimension(const Ideal& I);

// Finite colength and every variable nilpotent modulo I, i.e. rad(I) is the
// ideal generated by the variables.
bool is_m_primary(const Ideal& I);

}  // namespace fsig

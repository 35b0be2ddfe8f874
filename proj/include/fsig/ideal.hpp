#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "fsig/groebner.hpp"
#include "fsig/polynomial.hpp"

namespace fsig {

// ℓ(S/I) as a count of standard monomials; infinite when the staircase is.
class Colength {
 public:
  static Colength infinite() { return Colength(); }
  static Colength finite(std::uint64_t v) { return Colength(v); }

  bool is_finite() const noexcept { return value_.has_value(); }
  // Precondition: is_finite().
  std::uint64_t value() const { return *value_; }
  bool operator==(const Colength&) const = default;

 private:
  Colength() = default;
  explicit Colength(std::uint64_t v) : value_(v) {}
  std::optional<std::uint64_t> value_;
};

// Generators of an ideal of a polynomial ring plus a write-once reduced
// Groebner basis. Copies share the basis cache, which is filled at most once
// even under concurrent first use.
class Ideal {
 public:
  Ideal(PolyRingPtr ring, std::vector<Polynomial> generators);
  // `basis` must already be a reduced Groebner basis of the ideal.
  static Ideal from_basis(PolyRingPtr ring, std::vector<Polynomial> basis);
  static Ideal unit(PolyRingPtr ring);
  // (x_1, ..., x_n)
  static Ideal maximal(PolyRingPtr ring);

  const PolyRing& ring() const noexcept { return *ring_; }
  const PolyRingPtr& ring_ptr() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept;

  const std::vector<Polynomial>& basis(const GbLimits& limits = {}) const;
  bool has_basis() const noexcept;

  bool is_unit() const;
  bool is_zero() const;
  bool contains(const Polynomial& f) const;
  // other ⊆ this
  bool contains(const Ideal& other) const;
  // Equality of ideals (identical reduced bases).
  bool same_as(const Ideal& other) const;

  std::vector<Monomial> leading_monomials() const;

 private:
  struct State;
  Ideal(PolyRingPtr ring, std::shared_ptr<State> state);

  PolyRingPtr ring_;
  std::shared_ptr<State> state_;
};

}  // namespace fsig

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fsig/field.hpp"
#include "fsig/monomial.hpp"

namespace fsig {

struct Term {
  Monomial mono;
  Coeff coeff;

  bool operator==(const Term&) const = default;
};

// Sparse polynomial over F_p. Terms are sorted strictly descending in the
// owning ring's term order, coefficients are nonzero, monomials distinct.
// Only PolyRing builds these, so every value in circulation is normalized.
class Polynomial {
 public:
  Polynomial() = default;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  // Precondition: !is_zero().
  const Term& leading() const noexcept { return terms_.front(); }
  const Monomial& leading_monomial() const noexcept { return terms_.front().mono; }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  std::uint64_t total_degree() const noexcept;

  bool operator==(const Polynomial&) const = default;

 private:
  friend class PolyRing;
  explicit Polynomial(std::vector<Term> normalized) : terms_(std::move(normalized)) {}
  std::vector<Term> terms_;
};

class PolyRing {
 public:
  // Throws DomainError for a non-prime characteristic, too many variables,
  // or invalid / duplicate variable names.
  PolyRing(std::uint32_t characteristic, std::vector<std::string> names,
           TermOrder order = {});

  const PrimeField& field() const noexcept { return field_; }
  std::uint32_t characteristic() const noexcept { return field_.characteristic(); }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const TermOrder& order() const noexcept { return order_; }
  // Index of a variable name, or -1.
  int index_of(std::string_view name) const noexcept;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b);
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  Monomial one_monomial() const { return Monomial(nvars()); }
  Monomial variable_monomial(std::size_t i, std::uint32_t e = 1) const;

  // Sorts, merges duplicates, reduces and drops zero coefficients.
  Polynomial make(std::vector<Term> terms) const;
  Polynomial zero() const { return {}; }
  Polynomial constant(std::int64_t c) const;
  Polynomial term(const Monomial& m, Coeff c = 1) const;
  Polynomial variable(std::size_t i) const { return term(variable_monomial(i)); }

  Polynomial add(const Polynomial& a, const Polynomial& b) const;
  Polynomial sub(const Polynomial& a, const Polynomial& b) const;
  Polynomial neg(const Polynomial& a) const;
  Polynomial scale(const Polynomial& a, Coeff c) const;
  Polynomial mul_term(const Polynomial& a, const Monomial& m, Coeff c) const;
  Polynomial mul(const Polynomial& a, const Polynomial& b) const;
  // a - c * m * b, the elementary reduction step.
  Polynomial sub_mul_term(const Polynomial& a, Coeff c, const Monomial& m,
                          const Polynomial& b) const;
  Polynomial monic(const Polynomial& a) const;

  // Frobenius on a polynomial: exponents scaled by q, each coefficient raised
  // to the q-th power (identity on F_p). Requires q to be a power of p.
  Polynomial frobenius(const Polynomial& a, std::uint64_t q) const;
  // f^k: base-p digits of k give products of Frobenius images of f^digit.
  Polynomial pow(const Polynomial& a, std::uint64_t k) const;

  // Multivariate division by a single divisor: a = quotient * b + remainder,
  // no term of remainder divisible by lm(b). Requires b nonzero.
  std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) const;

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  TermOrder order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

// A polynomial ring with `count` auxiliary variables placed first and
// eliminated before the base ring's order. Names are "_t0", "_t1", ...
PolyRingPtr make_elimination_ring(const PolyRing& base, std::size_t count = 1);
// Moves a polynomial across rings that differ only by leading auxiliaries.
Polynomial embed(const PolyRing& target, const Polynomial& f, std::size_t shift);
Polynomial restrict_to_base(const PolyRing& base, const Polynomial& f, std::size_t shift);

}  // namespace fsig

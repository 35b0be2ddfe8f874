#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>

namespace fsig {

// Includes the auxiliary elimination variable, so rings get one fewer.
inline constexpr std::size_t kMaxVariables = 8;
inline constexpr std::size_t kMaxRingVariables = kMaxVariables - 1;
// Exponents must stay strictly below this; reaching it is an OverflowError.
inline constexpr std::uint64_t kExponentLimit = std::uint64_t{1} << 31;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::span<const std::uint32_t> exponents);
  Monomial(std::initializer_list<std::uint32_t> exponents);

  std::size_t size() const noexcept { return nvars_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, std::uint32_t e);
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  std::span<const std::uint32_t> exponents() const noexcept { return {exps_.data(), nvars_}; }

  // Bit j of variable i's byte is set iff exponent_i >= 2^j.
  // a | b implies mask(a) is a subset of mask(b).
  std::uint64_t divmask() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  // Throws OverflowError when an exponent would reach 2^31.
  Monomial operator*(const Monomial& other) const;
  // Requires divides(other) from the right: returns this / d.
  Monomial operator/(const Monomial& d) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;
  Monomial gcd(const Monomial& other) const noexcept;
  // Every exponent multiplied by k (the term-wise Frobenius on monomials).
  Monomial scaled(std::uint64_t k) const;

  // Drop the first `count` variables / prepend `count` zero exponents.
  Monomial drop_front(std::size_t count) const noexcept;
  Monomial prepend_zeros(std::size_t count) const;

  bool operator==(const Monomial& other) const noexcept;
  std::size_t hash() const noexcept;

 private:
  std::array<std::uint32_t, kMaxVariables> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class OrderKind { Grevlex, Lex, Grlex };

std::string_view to_string(OrderKind kind) noexcept;
// Accepts "grevlex", "lex", "grlex". Throws DomainError otherwise.
OrderKind parse_order_kind(std::string_view name);

// When elim_block > 0 the first elim_block variables are compared
// lexicographically first and ties are broken by `kind` on the remaining
// variables; this is an elimination order for those leading variables.
struct TermOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::uint8_t elim_block = 0;

  // Throws DomainError on length mismatch.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool operator==(const TermOrder&) const = default;
};

}  // namespace fsig

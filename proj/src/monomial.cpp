#include "fsig/monomial.hpp"

#include <algorithm>
#include <string>

#include "fsig/error.hpp"

namespace fsig {

namespace {

void check_size(std::size_t nvars) {
  if (nvars > kMaxVariables)
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
}

std::uint32_t checked_exponent(std::uint64_t e) {
  if (e >= kExponentLimit) throw OverflowError("exponent " + std::to_string(e) + " reaches 2^31");
  return static_cast<std::uint32_t>(e);
}

std::strong_ordering compare_range(OrderKind kind, const Monomial& a, const Monomial& b,
                                   std::size_t begin, std::size_t end) {
  if (kind != OrderKind::Lex) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = begin; i < end; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
  }
  if (kind == OrderKind::Grevlex) {
    for (std::size_t i = end; i-- > begin;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }
  for (std::size_t i = begin; i < end; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) { check_size(nvars); }

Monomial::Monomial(std::size_t nvars, std::span<const std::uint32_t> exponents) : Monomial(nvars) {
  if (exponents.size() != nvars) throw DomainError("exponent vector length does not match variable count");
  for (std::size_t i = 0; i < nvars; ++i) set(i, exponents[i]);
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (auto e : exponents) set(i++, e);
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  checked_exponent(e);
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = e;
}

std::uint64_t Monomial::divmask() const noexcept {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    std::uint32_t e = exps_[i];
    std::uint64_t byte = 0;
    for (unsigned j = 0; j < 8 && e >= (1u << j); ++j) byte |= 1u << j;
    mask |= byte << (8 * i);
  }
  return mask;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    r.exps_[i] = checked_exponent(std::uint64_t{exps_[i]} + other.exps_[i]);
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& d) const noexcept {
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] -= d.exps_[i];
  r.degree_ = degree_ - d.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const noexcept {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && k >= kExponentLimit) checked_exponent(k);
    r.exps_[i] = checked_exponent(std::uint64_t{exps_[i]} * k);
  }
  r.degree_ = degree_ * k;
  return r;
}

Monomial Monomial::drop_front(std::size_t count) const noexcept {
  Monomial r(nvars_ - count);
  for (std::size_t i = count; i < nvars_; ++i) {
    r.exps_[i - count] = exps_[i];
    r.degree_ += exps_[i];
  }
  return r;
}

Monomial Monomial::prepend_zeros(std::size_t count) const {
  Monomial r(nvars_ + count);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i + count] = exps_[i];
  r.degree_ = degree_;
  return r;
}

bool Monomial::operator==(const Monomial& other) const noexcept {
  return nvars_ == other.nvars_ && degree_ == other.degree_ &&
         std::equal(exps_.begin(), exps_.begin() + nvars_, other.exps_.begin());
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::string_view to_string(OrderKind kind) noexcept {
  switch (kind) {
    case OrderKind::Grevlex: return "grevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Grlex: return "grlex";
  }
  return "grevlex";
}

OrderKind parse_order_kind(std::string_view name) {
  if (name == "grevlex") return OrderKind::Grevlex;
  if (name == "lex") return OrderKind::Lex;
  if (name == "grlex") return OrderKind::Grlex;
  throw DomainError("unknown term order '" + std::string(name) + "'");
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw DomainError("monomial length mismatch in comparison");
  std::size_t n = a.size();
  std::size_t block = std::min<std::size_t>(elim_block, n);
  for (std::size_t i = 0; i < block; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return compare_range(kind, a, b, block, n);
}

}  // namespace fsig

#include "fsig/polynomial.hpp"

#include <algorithm>
#include <unordered_set>

#include "fsig/error.hpp"

namespace fsig {

std::uint64_t Polynomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

PolyRing::PolyRing(std::uint32_t characteristic, std::vector<std::string> names, TermOrder order)
    : field_(characteristic), names_(std::move(names)), order_(order) {
  if (names_.size() > kMaxVariables)
    throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw DomainError("empty variable name");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  }
}

int PolyRing::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

Monomial PolyRing::variable_monomial(std::size_t i, std::uint32_t e) const {
  Monomial m(nvars());
  m.set(i, e);
  return m;
}

Polynomial PolyRing::make(std::vector<Term> terms) const {
  for (auto& t : terms) t.coeff %= characteristic();
  std::sort(terms.begin(), terms.end(),
            [this](const Term& a, const Term& b) { return greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = field_.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial PolyRing::constant(std::int64_t c) const {
  Coeff r = field_.reduce(c);
  if (r == 0) return {};
  return Polynomial({Term{one_monomial(), r}});
}

Polynomial PolyRing::term(const Monomial& m, Coeff c) const {
  c %= characteristic();
  if (c == 0) return {};
  return Polynomial({Term{m, c}});
}

namespace {

// Merge of a with map_b applied to each term of b. map_b must preserve the
// order of b's terms, which holds for multiplication by a term.
template <class MapB>
std::vector<Term> merge(const PolyRing& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                        MapB&& map_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const auto& F = ring.field();
  while (i < a.size() && j < b.size()) {
    Term tb = map_b(b[j]);
    auto c = ring.compare(a[i].mono, tb.mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(tb);
      ++j;
    } else {
      Coeff s = F.add(a[i].coeff, tb.coeff);
      if (s != 0) out.push_back(Term{a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(map_b(b[j]));
  return out;
}

}  // namespace

Polynomial PolyRing::add(const Polynomial& a, const Polynomial& b) const {
  return Polynomial(merge(*this, a.terms_, b.terms_, [](const Term& t) { return t; }));
}

Polynomial PolyRing::sub(const Polynomial& a, const Polynomial& b) const {
  return Polynomial(merge(*this, a.terms_, b.terms_,
                          [this](const Term& t) { return Term{t.mono, field_.neg(t.coeff)}; }));
}

Polynomial PolyRing::neg(const Polynomial& a) const {
  std::vector<Term> out = a.terms_;
  for (auto& t : out) t.coeff = field_.neg(t.coeff);
  return Polynomial(std::move(out));
}

Polynomial PolyRing::scale(const Polynomial& a, Coeff c) const {
  c %= characteristic();
  if (c == 0) return {};
  std::vector<Term> out = a.terms_;
  for (auto& t : out) t.coeff = field_.mul(t.coeff, c);
  return Polynomial(std::move(out));
}

Polynomial PolyRing::mul_term(const Polynomial& a, const Monomial& m, Coeff c) const {
  c %= characteristic();
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms_) out.push_back(Term{t.mono * m, field_.mul(t.coeff, c)});
  return Polynomial(std::move(out));
}

Polynomial PolyRing::sub_mul_term(const Polynomial& a, Coeff c, const Monomial& m,
                                  const Polynomial& b) const {
  Coeff nc = field_.neg(c % characteristic());
  if (nc == 0) return a;
  return Polynomial(merge(*this, a.terms_, b.terms_, [&](const Term& t) {
    return Term{t.mono * m, field_.mul(t.coeff, nc)};
  }));
}

Polynomial PolyRing::mul(const Polynomial& a, const Polynomial& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  if (small.size() <= 8) {
    Polynomial acc;
    for (const auto& t : small.terms_) {
      Polynomial row = mul_term(large, t.mono, t.coeff);
      acc = add(acc, row);
    }
    return acc;
  }
  std::vector<Term> all;
  all.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) all.push_back(Term{s.mono * t.mono, field_.mul(s.coeff, t.coeff)});
  return make(std::move(all));
}

Polynomial PolyRing::monic(const Polynomial& a) const {
  if (a.is_zero() || a.leading().coeff == 1) return a;
  return scale(a, field_.inv(a.leading().coeff));
}

Polynomial PolyRing::frobenius(const Polynomial& a, std::uint64_t q) const {
  std::uint64_t p = characteristic();
  for (std::uint64_t r = q; r > 1; r /= p)
    if (r % p != 0) throw DomainError("Frobenius exponent " + std::to_string(q) + " is not a power of p");
  std::vector<Term> out;
  out.reserve(a.size());
  // Scaling exponents by q preserves every supported term order.
  for (const auto& t : a.terms_) out.push_back(Term{t.mono.scaled(q), t.coeff});
  return Polynomial(std::move(out));
}

Polynomial PolyRing::pow(const Polynomial& a, std::uint64_t k) const {
  Polynomial result = constant(1);
  if (k == 0) return result;
  if (a.is_zero()) return {};
  std::uint64_t p = characteristic();
  std::uint64_t q = 1;
  while (k) {
    std::uint64_t digit = k % p;
    if (digit) {
      Polynomial block = constant(1);
      for (std::uint64_t i = 0; i < digit; ++i) block = mul(block, a);
      result = mul(result, frobenius(block, q));
    }
    k /= p;
    if (k) {
      if (q > kExponentLimit / p) throw OverflowError("power exceeds exponent range");
      q *= p;
    }
  }
  return result;
}

std::pair<Polynomial, Polynomial> PolyRing::divide(const Polynomial& a, const Polynomial& b) const {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const Monomial& lm = b.leading_monomial();
  Coeff inv_lc = field_.inv(b.leading().coeff);
  std::vector<Term> quotient, remainder;
  Polynomial rest = a;
  while (!rest.is_zero()) {
    const Term lead = rest.leading();
    if (lm.divides(lead.mono)) {
      Monomial m = lead.mono / lm;
      Coeff c = field_.mul(lead.coeff, inv_lc);
      quotient.push_back(Term{m, c});
      rest = sub_mul_term(rest, c, m, b);
    } else {
      remainder.push_back(lead);
      rest.terms_.erase(rest.terms_.begin());
    }
  }
  return {Polynomial(std::move(quotient)), Polynomial(std::move(remainder))};
}

PolyRingPtr make_elimination_ring(const PolyRing& base, std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("_t" + std::to_string(i));
  names.insert(names.end(), base.names().begin(), base.names().end());
  TermOrder order{base.order().kind, static_cast<std::uint8_t>(base.order().elim_block + count)};
  return std::make_shared<const PolyRing>(base.characteristic(), std::move(names), order);
}

Polynomial embed(const PolyRing& target, const Polynomial& f, std::size_t shift) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) out.push_back(Term{t.mono.prepend_zeros(shift), t.coeff});
  return target.make(std::move(out));
}

Polynomial restrict_to_base(const PolyRing& base, const Polynomial& f, std::size_t shift) {
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < shift; ++i)
      if (t.mono[i] != 0) throw DomainError("polynomial involves an eliminated variable");
    out.push_back(Term{t.mono.drop_front(shift), t.coeff});
  }
  return base.make(std::move(out));
}

}  // namespace fsig

#include "fsig/parser.hpp"

#include <cctype>

#include "fsig/error.hpp"

namespace fsig {

namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, std::size_t base_offset, const PolyRing& ring)
      : text_(text), base_(base_offset), ring_(ring) {}

  Polynomial expr() {
    std::vector<Term> terms;
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    terms.push_back(term(negate));
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        terms.push_back(term(c == '-'));
      } else {
        break;
      }
    }
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return ring_.make(std::move(terms));
  }

 private:
  Term term(bool negate) {
    Coeff c = 1;
    Monomial m = ring_.one_monomial();
    factor(c, m);
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      factor(c, m);
    }
    return Term{m, negate ? ring_.field().neg(c) : c};
  }

  void factor(Coeff& c, Monomial& m) {
    skip_ws();
    char ch = peek();
    if (is_digit(ch)) {
      c = ring_.field().mul(c, integer_mod_p());
    } else if (is_letter(ch)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (is_letter(text_[pos_]) || is_digit(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      int idx = ring_.index_of(name);
      if (idx < 0) fail_at("unknown variable '" + std::string(name) + "'", start);
      std::uint64_t e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (!is_digit(peek())) fail("expected exponent");
        e = exponent();
      }
      std::uint64_t total = std::uint64_t{m[idx]} + e;
      if (total >= kExponentLimit) throw OverflowError("exponent of '" + std::string(name) + "' reaches 2^31");
      m.set(static_cast<std::size_t>(idx), static_cast<std::uint32_t>(total));
    } else if (ch == '\0') {
      fail("unexpected end of input");
    } else {
      fail("unexpected character '" + std::string(1, ch) + "'");
    }
  }

  Coeff integer_mod_p() {
    std::uint64_t p = ring_.characteristic();
    std::uint64_t v = 0;
    while (pos_ < text_.size() && is_digit(text_[pos_])) v = (v * 10 + (text_[pos_++] - '0')) % p;
    return static_cast<Coeff>(v);
  }

  std::uint64_t exponent() {
    std::uint64_t v = 0;
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v >= kExponentLimit)
        throw OverflowError("exponent reaches 2^31 at offset " + std::to_string(base_ + start));
    }
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, base_ + at);
  }

  std::string_view text_;
  std::size_t base_;
  const PolyRing& ring_;
  std::size_t pos_ = 0;
};

void append_coeff_and_monomial(std::string& out, Coeff c, const Monomial& m, const PolyRing& ring) {
  bool wrote = false;
  if (c != 1 || m.is_one()) {
    out += std::to_string(c);
    wrote = true;
  }
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (wrote) out += '*';
    out += ring.names()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
    wrote = true;
  }
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const PolyRing& ring) {
  return Parser(text, 0, ring).expr();
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const PolyRing& ring) {
  std::vector<Polynomial> out;
  bool blank = true;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (blank) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    out.push_back(Parser(piece, start, ring).expr());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string render(const Polynomial& f, const PolyRing& ring) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) out += " + ";
    append_coeff_and_monomial(out, t.coeff, t.mono, ring);
    first = false;
  }
  return out;
}

bool is_valid_variable_name(std::string_view name) noexcept {
  if (name.empty() || !is_letter(name.front())) return false;
  for (char c : name)
    if (!is_letter(c) && !is_digit(c)) return false;
  return true;
}

}  // namespace fsig

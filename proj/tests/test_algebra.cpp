#include <doctest.h>

#include <random>

#include "fsig/error.hpp"
#include "fsig/field.hpp"
#include "fsig/parser.hpp"
#include "support.hpp"

using namespace fsig;
using fsig::test::golden;
using fsig::test::poly_ring;

namespace {

Coeff coeff_of(const Polynomial& f, const Monomial& m) {
  for (const auto& t : f.terms())
    if (t.mono == m) return t.coeff;
  return 0;
}

}  // namespace

TEST_CASE("parse_polynomial reduces coefficients and orders terms") {
  auto R = poly_ring(5, {"x", "y"});
  Polynomial f = parse_polynomial("x^2*y - 3", *R);
  REQUIRE(f.terms().size() == 2);
  CHECK(f.terms()[0].mono == Monomial{2, 1});
  CHECK(f.terms()[0].coeff == 1);
  CHECK(f.terms()[1].mono.is_one());
  CHECK(f.terms()[1].coeff == 2);

  CHECK(parse_polynomial("0", *R).is_zero());

  auto S = poly_ring(7, {"x", "y", "z"});
  Polynomial g = parse_polynomial("x*y - z^2", *S);
  REQUIRE(g.terms().size() == 2);
  CHECK(g.terms()[0].mono == Monomial{1, 1, 0});
  CHECK(g.terms()[1].mono == Monomial{0, 0, 2});
  CHECK(g.terms()[1].coeff == 6);
}

TEST_CASE("parser errors") {
  auto R = poly_ring(5, {"x", "y"});
  CHECK_THROWS_AS(parse_polynomial("x +", *R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x * * y", *R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("t", *R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^2147483648", *R), OverflowError);
  try {
    parse_polynomial("x + q", *R);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK(parse_polynomial(" - x ^ 2 + y ", *R) == R->sub(R->variable(1), R->pow(R->variable(0), 2)));
}

TEST_CASE("poly_pow") {
  auto R2 = poly_ring(2, {"x", "y"});
  CHECK(R2->pow(parse_polynomial("x + y", *R2), 2) == parse_polynomial("x^2 + y^2", *R2));
  CHECK(R2->pow(parse_polynomial("x + y", *R2), 0) == R2->constant(1));

  auto R5 = poly_ring(5, {"x", "y", "z"});
  Polynomial f4 = R5->pow(parse_polynomial("x*y - z^2", *R5), 4);
  const auto& g = golden();
  CHECK(coeff_of(f4, Monomial{2, 2, 4}) == g.integer("algebra.pow.xy_minus_z2_p5_k4.coeff_x2y2z4"));
  CHECK(coeff_of(f4, Monomial{4, 0, 4}) == g.integer("algebra.pow.xy_minus_z2_p5_k4.coeff_x4z4"));
  CHECK(f4.terms().size() == g.integer("algebra.pow.xy_minus_z2_p5_k4.terms"));
}

TEST_CASE("monomial_compare examples") {
  TermOrder grevlex{OrderKind::Grevlex, 0};
  TermOrder lex{OrderKind::Lex, 0};
  CHECK(grevlex.compare(Monomial{2, 0}, Monomial{1, 1}) > 0);
  CHECK(lex.compare(Monomial{0, 5}, Monomial{1, 0}) < 0);
  for (auto kind : {OrderKind::Grevlex, OrderKind::Lex, OrderKind::Grlex}) {
    TermOrder o{kind, 0};
    CHECK(o.compare(Monomial{3, 1, 4}, Monomial{3, 1, 4}) == 0);
  }
  CHECK_THROWS_AS(grevlex.compare(Monomial{1, 0}, Monomial{1, 0, 0}), DomainError);
}

TEST_CASE("field axioms on random triples") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
    PrimeField F(p);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 500; ++i) {
      Coeff a = rng() % p, b = rng() % p, c = rng() % p;
      CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.add(a, F.neg(a)) == 0);
      if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
    }
    CHECK_THROWS_AS(F.inv(0), DomainError);
  }
  CHECK_THROWS_AS(PrimeField(6), DomainError);
  CHECK_THROWS_AS(PrimeField(1), DomainError);
}

TEST_CASE("parser round trip on random polynomials") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 101u}) {
    auto R = poly_ring(p, {"x", "y", "z1"});
    for (int i = 0; i < 200; ++i) {
      Polynomial f = fsig::test::random_polynomial(rng, *R, 1 + rng() % 6, 5);
      std::string text = render(f, *R);
      CHECK(parse_polynomial(text, *R) == f);
    }
  }
}

TEST_CASE("poly_pow(f, p) is the term-wise Frobenius") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R = poly_ring(p, {"x", "y", "z"});
    for (int i = 0; i < 50; ++i) {
      Polynomial f = fsig::test::random_polynomial(rng, *R, 1 + rng() % 5, 4);
      Polynomial naive = R->constant(1);
      for (std::uint32_t k = 0; k < p; ++k) naive = R->mul(naive, f);
      CHECK(R->pow(f, p) == R->frobenius(f, p));
      CHECK(naive == R->frobenius(f, p));
    }
  }
}

TEST_CASE("term order laws on random monomials") {
  std::mt19937_64 rng(5);
  for (auto kind : {OrderKind::Grevlex, OrderKind::Lex, OrderKind::Grlex}) {
    TermOrder o{kind, 0};
    Monomial one(3);
    for (int i = 0; i < 1000; ++i) {
      Monomial a = fsig::test::random_monomial(rng, 3, 6);
      Monomial b = fsig::test::random_monomial(rng, 3, 6);
      Monomial c = fsig::test::random_monomial(rng, 3, 6);
      auto ab = o.compare(a, b);
      CHECK((ab < 0 || ab > 0 || a == b));
      CHECK(o.compare(b, a) == (0 <=> ab));
      CHECK(o.compare(one, a) <= 0);
      if (ab < 0) CHECK(o.compare(a * c, b * c) < 0);
      if (o.compare(a, b) < 0 && o.compare(b, c) < 0) CHECK(o.compare(a, c) < 0);
    }
  }
}

TEST_CASE("monomial arithmetic") {
  Monomial a{2, 0, 3}, b{1, 4, 3};
  CHECK(a.lcm(b) == Monomial{2, 4, 3});
  CHECK(a.gcd(b) == Monomial{1, 0, 3});
  CHECK(Monomial{1, 0, 3}.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a.scaled(5) == Monomial{10, 0, 15});
  CHECK_THROWS_AS((Monomial{1u << 30, 0}.scaled(2)), OverflowError);
  CHECK((a * b) / b == a);
}

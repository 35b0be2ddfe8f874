#include <doctest.h>

#include <random>

#include "fsig/error.hpp"
#include "fsig/frobenius.hpp"
#include "fsig/groebner.hpp"
#include "fsig/ideal_ops.hpp"
#include "fsig/oracle.hpp"
#include "fsig/parser.hpp"
#include "support.hpp"

using namespace fsig;
using fsig::test::golden;
using fsig::test::poly_ring;

namespace {

Ideal ideal(const PolyRingPtr& R, const char* gens) { return Ideal(R, parse_polynomial_list(gens, *R)); }

std::vector<Polynomial> basis_of(const PolyRingPtr& R, const char* gens) { return ideal(R, gens).basis(); }

// m-primary: a pure power of each variable plus a few random polynomials.
std::vector<Polynomial> random_m_primary(std::mt19937_64& rng, const PolyRing& R, std::uint32_t max_exp) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < R.nvars(); ++i)
    gens.push_back(R.term(R.variable_monomial(i, 1 + static_cast<std::uint32_t>(rng() % max_exp))));
  std::size_t extra = rng() % 4;
  for (std::size_t k = 0; k < extra; ++k) {
    Polynomial f = fsig::test::random_polynomial(rng, R, 1 + rng() % 3, max_exp);
    std::vector<Term> t;
    for (const auto& term : f.terms())
      if (!term.mono.is_one()) t.push_back(term);
    f = R.make(std::move(t));
    if (!f.is_zero()) gens.push_back(f);
  }
  return gens;
}

}  // namespace

TEST_CASE("groebner_basis examples") {
  auto R7 = poly_ring(7, {"x", "y", "z"});
  auto G = basis_of(R7, "x*y - z^2, x");
  CHECK(G == basis_of(R7, "x, z^2"));
  REQUIRE(G.size() == 2);

  auto R3 = poly_ring(3, {"x", "y"});
  auto H = basis_of(R3, "x^3, y^3");
  CHECK(H.size() == 2);
  CHECK(is_reduced_basis(H));
  CHECK(groebner_basis(*R3, {}).empty());
  CHECK(Ideal(R3, std::vector<Polynomial>{}).is_zero());
}

TEST_CASE("normal_form examples") {
  auto R7 = poly_ring(7, {"x", "y", "z"});
  Ideal I = ideal(R7, "x, z^2");
  CHECK(normal_form(*R7, parse_polynomial("z^3 + x", *R7), I.basis()).is_zero());
  CHECK(I.contains(parse_polynomial("z^3 + x", *R7)) == golden().boolean("groebner.member.z3_plus_x_in_x_z2"));
  Ideal J = ideal(R7, "x*y - z^2, x");
  CHECK(J.contains(parse_polynomial("z^2", *R7)) == golden().boolean("groebner.member.z2_in_xy_minus_z2_x"));

  auto R5 = poly_ring(5, {"x", "y"});
  Polynomial y = parse_polynomial("y", *R5);
  CHECK(normal_form(*R5, y, ideal(R5, "x").basis()) == y);
  for (const auto& g : J.generators()) CHECK(normal_form(*R7, g, J.basis()).is_zero());
}

TEST_CASE("colength examples") {
  auto R3 = poly_ring(3, {"x", "y"});
  CHECK(colength(ideal(R3, "x^3, y^3")).value() == golden().integer("groebner.colength.x3_y3_p3"));
  CHECK(colength(ideal(R3, "x^2, x*y, y^3")).value() == golden().integer("groebner.colength.x2_xy_y3_p3"));
  auto R5 = poly_ring(5, {"x", "y"});
  CHECK(colength(ideal(R5, "x^5, y^5, x*y")).value() == golden().integer("groebner.colength.x5_y5_xy_p5"));
  CHECK_FALSE(colength(ideal(R3, "x")).is_finite());
  CHECK(colength(Ideal::unit(R3)).value() == 0);

  Staircase s = staircase(ideal(R3, "x^2, x*y, y^3"));
  REQUIRE(s.monomials);
  CHECK(s.monomials->size() == 4);
}

TEST_CASE("colon examples") {
  auto R5 = poly_ring(5, {"x", "y"});
  Ideal K = colon(ideal(R5, "x^5, y^5"), parse_polynomial("x^4*y^4", *R5));
  CHECK(K.same_as(ideal(R5, "x, y")));
  CHECK(colength(K).value() == golden().integer("groebner.colon.x5_y5_by_x4y4.colength"));
  CHECK(colon(ideal(R5, "x^2"), parse_polynomial("x", *R5)).same_as(ideal(R5, "x")));
  Ideal I = ideal(R5, "x^3 + y, y^2");
  CHECK(colon(I, R5->constant(1)).same_as(I));
  CHECK_THROWS_AS(colon(I, R5->zero()), DomainError);
  CHECK(colon(I, Ideal(R5, std::vector<Polynomial>{})).is_unit());
}

TEST_CASE("intersect examples") {
  auto R5 = poly_ring(5, {"x", "y"});
  CHECK(intersect(ideal(R5, "x"), ideal(R5, "y")).same_as(ideal(R5, "x*y")));
  Ideal I = ideal(R5, "x^2 + y^3, x*y");
  CHECK(intersect(I, I).same_as(I));
  Ideal K = intersect(ideal(R5, "x^2, x*y"), ideal(R5, "y"));
  CHECK(K.same_as(ideal(R5, "x*y")));
  std::uint64_t count = 0;
  for (std::uint32_t a = 0; a <= 4; ++a)
    for (std::uint32_t b = 0; a + b <= 4; ++b)
      if (K.contains(R5->term(Monomial{a, b}))) ++count;
  CHECK(count == golden().integer("groebner.intersect.x2_xy_and_y.monomials_deg_le4"));
}

TEST_CASE("krull_dimension examples") {
  CHECK(fsig::test::regular(5, 2).dimension() == 2);
  CHECK(RingPresentation(5, {"x", "y"}, {"x*y"}).dimension() == 1);
  CHECK(fsig::test::monsky().dimension() == 4);
  CHECK(RingPresentation(5, {"x", "y"}, {"x", "y - x"}).dimension() == 0);
  CHECK_THROWS_AS(krull_dimension(Ideal::unit(poly_ring(5, {"x"}))), DomainError);
}

TEST_CASE("Buchberger criterion and normal form idempotence on random ideals") {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (auto kind : {OrderKind::Grevlex, OrderKind::Lex, OrderKind::Grlex}) {
      auto R = poly_ring(p, {"x", "y", "z"}, kind);
      for (int i = 0; i < 8; ++i) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 3; ++k) gens.push_back(fsig::test::random_polynomial(rng, *R, 1 + rng() % 3, 3));
        auto G = groebner_basis(*R, gens);
        CHECK(satisfies_buchberger_criterion(*R, G));
        CHECK(is_reduced_basis(G));
        for (const auto& g : gens) CHECK(normal_form(*R, g, G).is_zero());
        for (const auto& g : G) CHECK(Ideal(R, gens).contains(g));
        for (int k = 0; k < 5; ++k) {
          Polynomial f = fsig::test::random_polynomial(rng, *R, 4, 4);
          Polynomial r = normal_form(*R, f, G);
          CHECK(normal_form(*R, R->sub(f, r), G).is_zero());
          CHECK(normal_form(*R, r, G) == r);
        }
      }
    }
  }
}

TEST_CASE("basis is independent of generator order") {
  std::mt19937_64 rng(23);
  auto R = poly_ring(5, {"x", "y", "z"});
  for (int i = 0; i < 20; ++i) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(fsig::test::random_polynomial(rng, *R, 3, 3));
    auto G = groebner_basis(*R, gens);
    std::reverse(gens.begin(), gens.end());
    CHECK(groebner_basis(*R, gens) == G);
  }
}

TEST_CASE("colength agrees with the oracle on random m-primary ideals") {
  std::mt19937_64 rng(2024);
  int compared = 0;
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t n = 1; n <= 3; ++n) {
      std::vector<std::string> names{"x", "y", "z"};
      names.resize(n);
      auto R = poly_ring(p, names);
      for (int i = 0; i < 14; ++i) {
        auto gens = random_m_primary(rng, *R, 6);
        Colength c = colength(Ideal(R, gens));
        auto o = oracle::oracle_colength(oracle::make_ideal(p, n, gens));
        REQUIRE(c.is_finite());
        REQUIRE(o.has_value());
        CHECK(c.value() == *o);
        ++compared;
      }
    }
  CHECK(compared >= 100);
}

TEST_CASE("colon soundness and completeness against the oracle") {
  std::mt19937_64 rng(31);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R = poly_ring(p, {"x", "y"});
    for (int i = 0; i < 12; ++i) {
      auto gens = random_m_primary(rng, *R, 5);
      Ideal I(R, gens);
      Polynomial f = fsig::test::random_polynomial(rng, *R, 1 + rng() % 3, 3);
      if (f.is_zero()) continue;
      Ideal K = colon(I, f);
      for (const auto& g : K.basis()) CHECK(I.contains(R->mul(g, f)));
      auto expected = oracle::oracle_colon_colength(oracle::make_ideal(p, 2, gens), oracle::from_polynomial(f));
      CHECK(colength(K).value() == expected);
      // A standard monomial m of K with m f in I would be a missed element of the colon.
      auto st = staircase(K);
      REQUIRE(st.monomials);
      for (const auto& m : *st.monomials) CHECK_FALSE(I.contains(R->mul_term(f, m, 1)));
    }
  }
}

TEST_CASE("oracle membership matches normal forms") {
  std::mt19937_64 rng(41);
  auto R = poly_ring(3, {"x", "y", "z"});
  int members = 0;
  for (int i = 0; i < 40; ++i) {
    auto gens = random_m_primary(rng, *R, 4);
    Ideal I(R, gens);
    auto O = oracle::make_ideal(3, 3, gens);
    for (int k = 0; k < 4; ++k) {
      Polynomial f = fsig::test::random_polynomial(rng, *R, 3, 3);
      if (k == 3 && !gens.empty()) f = R->mul(gens.back(), R->variable(rng() % 3));
      bool in = I.contains(f);
      members += in;
      std::uint64_t deg = 0;
      for (const auto& t : f.terms()) deg = std::max(deg, t.mono.degree());
      CHECK(oracle::oracle_member(oracle::from_polynomial(f), O, static_cast<unsigned>(deg + 1)) == in);
    }
  }
  CHECK(members > 0);
}

TEST_CASE("bracket power does not depend on the generating set") {
  std::mt19937_64 rng(43);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto R = poly_ring(p, {"x", "y", "z"});
    for (int i = 0; i < 8; ++i) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 2; ++k) gens.push_back(fsig::test::random_polynomial(rng, *R, 2, 2));
      // Same ideal, different generators: g0 + h g1, g1, and a redundant g0 g1.
      Polynomial h = fsig::test::random_polynomial(rng, *R, 2, 2);
      std::vector<Polynomial> other{R->add(gens[0], R->mul(h, gens[1])), gens[1], R->mul(gens[0], gens[1])};
      Ideal A(R, gens), B(R, other);
      REQUIRE(A.same_as(B));
      for (unsigned e = 1; e <= 2; ++e) {
        Ideal Ab = bracket_power(A, e);
        Ideal Bb = bracket_power(B, e);
        CHECK(Ab.same_as(Bb));
        CHECK(Ideal(R, Ab.generators()).basis() == Ideal(R, Bb.generators()).basis());
      }
    }
  }
}

TEST_CASE("resource limits") {
  auto R = poly_ring(5, {"x", "y", "z"});
  GbLimits tight;
  tight.max_pairs = 3;
  auto gens = parse_polynomial_list("x^3 + y*z, y^3 + x*z, z^3 + x*y, x*y*z + 1", *R);
  CHECK_THROWS_AS(groebner_basis(*R, gens, tight), ResourceLimitError);
}

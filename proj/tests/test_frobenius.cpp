#include <doctest.h>

#include "fsig/error.hpp"
#include "fsig/frobenius.hpp"
#include "fsig/ideal_ops.hpp"
#include "fsig/parser.hpp"
#include "fsig/rational.hpp"
#include "support.hpp"

using namespace fsig;
using fsig::test::golden;

namespace {

Ideal ideal(const RingPresentation& R, const char* gens) {
  return R.ideal_from(parse_polynomial_list(gens, R.poly_ring()));
}

std::vector<RingPresentation> example_rings() {
  return {fsig::test::regular(3, 2), fsig::test::node(), fsig::test::a1()};
}

}  // namespace

TEST_CASE("bracket_power examples") {
  auto R3 = fsig::test::regular(3, 2);
  CHECK(bracket_power(ideal(R3, "x, y^2"), 1).same_as(ideal(R3, "x^3, y^6")));
  Ideal I = ideal(R3, "x + y^2, x*y");
  CHECK(bracket_power(I, 0).same_as(I));
  auto R2 = fsig::test::regular(2, 2);
  Ideal b = bracket_power(ideal(R2, "x + y"), 2);
  REQUIRE(b.generators().size() == 1);
  CHECK(b.generators()[0] == parse_polynomial("x^4 + y^4", R2.poly_ring()));
  CHECK_THROWS_AS(bracket_power(ideal(R3, "x^1000"), 20), OverflowError);
  CHECK(prime_power(7, 3) == 343);
  CHECK_THROWS_AS(prime_power(7, 40), OverflowError);
}

TEST_CASE("splitting_ideal examples") {
  auto reg = fsig::test::regular(3, 2);
  auto r1 = splitting_ideal(reg, 1);
  CHECK(r1.ideal.same_as(ideal(reg, "x^3, y^3")));
  CHECK(r1.a_e == 9);
  CHECK(r1.method == "regular");

  auto node = fsig::test::node();
  for (unsigned e = 1; e <= 2; ++e) {
    auto r = splitting_ideal(node, e);
    CHECK(r.ideal.same_as(ideal(node, "x, y")));
    CHECK(r.a_e == golden().integer("frobenius.node_p5.a" + std::to_string(e)));
    CHECK(r.method == "Fedder-type (hypersurface)");
  }
  CHECK(splitting_method_label(fsig::test::monsky()) == "Fedder-type (hypersurface)");
  CHECK(splitting_method_label(RingPresentation(3, {"x", "y", "z"}, {"x*y", "z^2 - x*z"})) ==
        "Fedder-type (complete intersection)");
  CHECK(splitting_method_label(RingPresentation(3, {"x", "y", "z"}, {"x*y", "x*z", "y*z"})) ==
        "Fedder-type (unverified class)");
  CHECK_THROWS_AS(splitting_ideal(node, 0), DomainError);
}

TEST_CASE("splitting_number examples") {
  CHECK(splitting_number(fsig::test::regular(5, 3), 2) == 15625);
  CHECK(splitting_number(fsig::test::cusp(), 1) == golden().integer("frobenius.cusp_p5.a1"));
  CHECK(splitting_number(fsig::test::cusp(), 2) == golden().integer("frobenius.cusp_p5.a2"));
  auto a1 = fsig::test::a1();
  for (unsigned e = 1; e <= 3; ++e)
    CHECK(splitting_number(a1, e) == golden().integer("frobenius.a1_p7.a" + std::to_string(e)));
  std::uint64_t a_1 = splitting_number(a1, 1);
  CHECK(abs(ratio(a_1, 49) - Rational(1, 2)) <= Rational(1, 7));
  for (unsigned e = 1; e <= 3; ++e)
    CHECK(splitting_number(fsig::test::node(), e) == golden().integer("frobenius.node_p5.a" + std::to_string(e)));
}

TEST_CASE("is_f_pure and is_regular_kunz") {
  CHECK(is_f_pure(fsig::test::node()));
  CHECK_FALSE(is_f_pure(fsig::test::cusp()));
  CHECK(is_f_pure(fsig::test::regular(2, 3)));

  CHECK(is_regular_kunz(fsig::test::regular(3, 2)));
  KunzReport n = kunz_regularity(fsig::test::node());
  CHECK_FALSE(n.regular);
  CHECK(n.length == golden().integer("hk.node_p5.m.e1"));
  CHECK(n.expected == 5);
  KunzReport a = kunz_regularity(fsig::test::a1());
  CHECK_FALSE(a.regular);
  CHECK(a.length == golden().integer("frobenius.a1_p7.m_bracket_length.e1"));
  CHECK(a.length > 49);
}

TEST_CASE("splitting_prime_approx examples") {
  auto node = fsig::test::node();
  auto P = splitting_prime_approx(node, 3);
  CHECK(P.P.same_as(ideal(node, "x, y")));
  CHECK(P.stabilized);

  auto reg = fsig::test::regular(3, 2);
  auto Q = splitting_prime_approx(reg, 3);
  CHECK(Q.P.same_as(ideal(reg, "x^27, y^27")));
  CHECK_FALSE(Q.stabilized);

  auto C = splitting_prime_approx(fsig::test::cusp(), 2);
  CHECK(C.P.is_unit());
  CHECK(C.stabilized);
  CHECK_THROWS_AS(splitting_prime_approx(node, 1), DomainError);
}

TEST_CASE("regular case returns m^[q] with a_e = q^n") {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::size_t n = 1; n <= 3; ++n) {
      auto R = fsig::test::regular(p, n);
      for (unsigned e = 1; e <= 2; ++e) {
        auto r = splitting_ideal(R, e);
        CHECK(r.ideal.same_as(bracket_power(Ideal::maximal(R.poly_ring_ptr()), e)));
        std::uint64_t expect = 1;
        for (std::size_t i = 0; i < n; ++i) expect *= prime_power(p, e);
        CHECK(r.a_e == expect);
      }
    }
}

TEST_CASE("I_e^[p] lies in I_{e+1} and m^[q] + a lies in I_e") {
  for (const auto& R : example_rings()) {
    auto records = splitting_ideals(R, 4);
    for (std::size_t i = 0; i < records.size(); ++i) {
      const auto& r = records[i];
      Ideal mq = R.with_relations(bracket_power(Ideal::maximal(R.poly_ring_ptr()), r.e));
      CHECK(r.ideal.contains(mq));
      if (i + 1 == records.size()) continue;
      const auto& next = records[i + 1];
      Ideal bracket = bracket_power(r.ideal, 1);
      for (const auto& g : bracket.generators()) CHECK(next.ideal.contains(g));
      CHECK(next.a_e <= bracket_length(R, r.ideal, 1));
    }
  }
}

TEST_CASE("Fedder cross-check: general, direct and recursive routes agree") {
  for (const auto& R : {fsig::test::node(), fsig::test::cusp(), fsig::test::a1()}) {
    for (unsigned e = 1; e <= 2; ++e) {
      auto g = splitting_ideal(R, e, SplittingRoute::General);
      auto d = splitting_ideal(R, e, SplittingRoute::HypersurfaceDirect);
      auto r = splitting_ideal(R, e, SplittingRoute::HypersurfaceRecursive);
      CHECK(g.ideal.basis() == d.ideal.basis());
      CHECK(d.ideal.basis() == r.ideal.basis());
      CHECK(g.a_e == d.a_e);
      CHECK(d.a_e == r.a_e);
    }
  }
  CHECK_THROWS_AS(splitting_ideal(RingPresentation(3, {"x", "y", "z"}, {"x*y", "z^2 - x*z"}), 1,
                                  SplittingRoute::HypersurfaceDirect),
                  DomainError);
}

TEST_CASE("complete intersection through the general formula") {
  // F_3[x,y,z]/(xy, xz - z^2) is not reduced; the colon formula still gives an m-primary I_e.
  RingPresentation R(3, {"x", "y", "z"}, {"x*y", "x*z - z^2"});
  auto r = splitting_ideal(R, 1);
  CHECK(r.method == "Fedder-type (complete intersection)");
  CHECK(r.ideal.contains(R.with_relations(bracket_power(Ideal::maximal(R.poly_ring_ptr()), 1))));
}

TEST_CASE("quotient lengths") {
  auto node = fsig::test::node();
  CHECK(quotient_length(node, Ideal::maximal(node.poly_ring_ptr())) == 1);
  CHECK(bracket_length(node, Ideal::maximal(node.poly_ring_ptr()), 2) == golden().integer("hk.node_p5.m.e2"));
  CHECK_THROWS_AS(quotient_length(node, ideal(node, "x")), DomainError);
}

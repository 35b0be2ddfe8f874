#include <cstdlib>

#include "fsig/cli/commands.hpp"
#include "fsig/frobenius.hpp"
#include "fsig/hk.hpp"
#include "fsig/ideal_ops.hpp"
#include "fsig/parser.hpp"

namespace fsig::cli {

namespace {

RingPresentation ring(std::uint32_t p, std::vector<std::string> vars, std::vector<std::string> relations) {
  return RingPresentation(p, std::move(vars), relations);
}

Ideal ideal(const RingPresentation& R, const std::string& gens) {
  return R.ideal_from(parse_polynomial_list(gens, R.poly_ring()));
}

std::string num(std::uint64_t v) { return std::to_string(v); }
std::string flag(bool b) { return b ? "true" : "false"; }

Coeff coefficient_of(const Polynomial& f, const Monomial& m) {
  for (const auto& t : f.terms())
    if (t.mono == m) return t.coeff;
  return 0;
}

void add_pow(std::vector<GoldenCheck>& out) {
  auto power = [] {
    PolyRing S(5, {"x", "y", "z"});
    return S.pow(parse_polynomial("x*y - z^2", S), 4);
  };
  out.push_back({"algebra.pow.xy_minus_z2_p5_k4.coeff_x2y2z4",
                 [power] { return num(coefficient_of(power(), Monomial{2, 2, 4})); }});
  out.push_back({"algebra.pow.xy_minus_z2_p5_k4.coeff_x4z4",
                 [power] { return num(coefficient_of(power(), Monomial{4, 0, 4})); }});
  out.push_back({"algebra.pow.xy_minus_z2_p5_k4.terms", [power] { return num(power().terms().size()); }});
}

void add_groebner(std::vector<GoldenCheck>& out) {
  auto member = [](std::string gens, std::string f) {
    return [=] {
      auto S = std::make_shared<const PolyRing>(7, std::vector<std::string>{"x", "y", "z"});
      Ideal I(S, parse_polynomial_list(gens, *S));
      return flag(I.contains(parse_polynomial(f, *S)));
    };
  };
  out.push_back({"groebner.member.z2_in_xy_minus_z2_x", member("x*y - z^2, x", "z^2")});
  out.push_back({"groebner.member.z3_plus_x_in_x_z2", member("x, z^2", "z^3 + x")});
  out.push_back({"oracle.member.z3_in_x_z2", member("x, z^2", "z^3")});

  auto colength_of = [](std::uint32_t p, std::string gens) {
    return [=] {
      auto S = std::make_shared<const PolyRing>(p, std::vector<std::string>{"x", "y"});
      return num(colength(Ideal(S, parse_polynomial_list(gens, *S))).value());
    };
  };
  out.push_back({"groebner.colength.x3_y3_p3", colength_of(3, "x^3, y^3")});
  out.push_back({"groebner.colength.x2_xy_y3_p3", colength_of(3, "x^2, x*y, y^3")});
  out.push_back({"groebner.colength.x5_y5_xy_p5", colength_of(5, "x^5, y^5, x*y")});
  out.push_back({"groebner.colon.x5_y5_by_x4y4.colength", [] {
                   auto S = std::make_shared<const PolyRing>(5, std::vector<std::string>{"x", "y"});
                   Ideal I(S, parse_polynomial_list("x^5, y^5", *S));
                   return num(colength(colon(I, parse_polynomial("x^4*y^4", *S))).value());
                 }});
  out.push_back({"groebner.intersect.x2_xy_and_y.monomials_deg_le4", [] {
                   auto S = std::make_shared<const PolyRing>(5, std::vector<std::string>{"x", "y"});
                   Ideal K = intersect(Ideal(S, parse_polynomial_list("x^2, x*y", *S)),
                                       Ideal(S, parse_polynomial_list("y", *S)));
                   std::uint64_t count = 0;
                   for (std::uint32_t a = 0; a <= 4; ++a)
                     for (std::uint32_t b = 0; a + b <= 4; ++b)
                       if (K.contains(S->term(Monomial{a, b}))) ++count;
                   return num(count);
                 }});
}

void add_frobenius(std::vector<GoldenCheck>& out) {
  struct Case {
    std::string name;
    std::uint32_t p;
    std::vector<std::string> vars;
    std::string relation;
    unsigned e_max;
  };
  const std::vector<Case> cases{{"node_p5", 5, {"x", "y"}, "x*y", 3},
                                {"cusp_p5", 5, {"x", "y"}, "x^2 - y^3", 2},
                                {"a1_p7", 7, {"x", "y", "z"}, "x*y - z^2", 3},
                                {"monsky_p2", 2, {"x", "y", "z", "u", "v"}, "u*v + x^3 + y^3 + x*y*z", 2}};
  for (const auto& c : cases)
    for (unsigned e = 1; e <= c.e_max; ++e)
      out.push_back({"frobenius." + c.name + ".a" + std::to_string(e),
                     [c, e] { return num(splitting_number(ring(c.p, c.vars, {c.relation}), e)); }});
  out.push_back({"frobenius.a1_p7.m_bracket_length.e1", [] {
                   auto R = ring(7, {"x", "y", "z"}, {"x*y - z^2"});
                   return num(hk_function(R, R.maximal_ideal(), 1));
                 }});
}

void add_hk(std::vector<GoldenCheck>& out) {
  for (unsigned e = 1; e <= 4; ++e)
    out.push_back({"hk.node_p5.m.e" + std::to_string(e), [e] {
                     auto R = ring(5, {"x", "y"}, {"x*y"});
                     return num(hk_function(R, R.maximal_ideal(), e));
                   }});
  for (unsigned e = 0; e <= 3; ++e)
    out.push_back({"hk.node_p5.x_plus_y.e" + std::to_string(e), [e] {
                     auto R = ring(5, {"x", "y"}, {"x*y"});
                     return num(hk_function(R, ideal(R, "x + y"), e));
                   }});
  for (unsigned e = 1; e <= 2; ++e)
    out.push_back({"hk.monsky_p2.x_y_z_u_plus_v.e" + std::to_string(e), [e] {
                     auto R = ring(2, {"x", "y", "z", "u", "v"}, {"u*v + x^3 + y^3 + x*y*z"});
                     return num(hk_function(R, ideal(R, "x, y, z, u + v"), e));
                   }});
  out.push_back({"hk.probe.node_p5.m_eprime1.discrepancy", [] {
                   auto R = ring(5, {"x", "y"}, {"x*y"});
                   Ideal m = R.maximal_ideal();
                   Rational d = abs(ratio(bracket_length(R, m, 1), 5) - Rational(quotient_length(R, m)));
                   return d.str();
                 }});
}

}  // namespace

const std::vector<GoldenCheck>& golden_checks() {
  static const std::vector<GoldenCheck> checks = [] {
    std::vector<GoldenCheck> out;
    add_pow(out);
    add_groebner(out);
    add_frobenius(out);
    add_hk(out);
    return out;
  }();
  return checks;
}

}  // namespace fsig::cli

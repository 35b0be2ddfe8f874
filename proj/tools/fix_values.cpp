// Recomputes every frozen reference value with the brute-force oracle and
// writes the golden-values file. Nothing here touches the Groebner engine.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fsig/error.hpp"
#include "fsig/golden.hpp"
#include "fsig/oracle.hpp"

using namespace fsig::oracle;
using boost::multiprecision::cpp_rational;

namespace {

OPoly poly(std::initializer_list<OTerm> terms) { return OPoly(terms); }
OPoly mono(Exponents e) { return {{std::move(e), 1}}; }

std::uint64_t power(std::uint64_t p, unsigned e) {
  std::uint64_t q = 1;
  while (e--) q *= p;
  return q;
}

// Colength with the smallest explicit bound from `start` on that certifies.
std::pair<std::uint64_t, unsigned> certified_colength(const OIdeal& I, unsigned start, int threads) {
  for (unsigned D = start;; ++D) {
    try {
      return {*oracle_colength(I, D, threads), D};
    } catch (const fsig::DomainError&) {
    }
  }
}

struct Timer {
  std::string label;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::fprintf(stderr, "  %-40s %8.2fs\n", label.c_str(), s);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fix-values: freeze oracle reference values"};
  std::string output = "tests/golden/golden_values.txt";
  int threads = 1;
  app.add_option("-o,--output", output, "golden values file to write");
  app.add_option("-j,--jobs", threads, "OpenMP threads for block elimination");
  CLI11_PARSE(app, argc, argv);

  fsig::GoldenValues g;

  {
    Timer t{"expansion"};
    // (xy - z^2)^4 over F_5, variables x, y, z.
    OPoly f = poly({{{1, 1, 0}, 1}, {{0, 0, 2}, 4}});
    OPoly f4 = expand_power(f, 4, 5);
    g.set("algebra.pow.xy_minus_z2_p5_k4.coeff_x2y2z4", std::uint64_t{coefficient(f4, {2, 2, 4})});
    g.set("algebra.pow.xy_minus_z2_p5_k4.coeff_x4z4", std::uint64_t{coefficient(f4, {4, 0, 4})});
    g.set("algebra.pow.xy_minus_z2_p5_k4.terms", std::uint64_t{f4.size()});
  }

  {
    Timer t{"membership"};
    OIdeal I{7, 3, {poly({{{1, 1, 0}, 1}, {{0, 0, 2}, 6}}), mono({1, 0, 0})}};
    g.set("groebner.member.z2_in_xy_minus_z2_x", oracle_member(mono({0, 0, 2}), I, 4) ? "true" : "false");
    OIdeal J{7, 3, {mono({1, 0, 0}), mono({0, 0, 2})}};
    g.set("groebner.member.z3_plus_x_in_x_z2",
          oracle_member(poly({{{0, 0, 3}, 1}, {{1, 0, 0}, 1}}), J, 4) ? "true" : "false");
    g.set("oracle.member.z3_in_x_z2", oracle_member(mono({0, 0, 3}), J, 4) ? "true" : "false");
  }

  {
    Timer t{"colength"};
    g.set("groebner.colength.x3_y3_p3", *oracle_colength({3, 2, {mono({3, 0}), mono({0, 3})}}));
    g.set("groebner.colength.x2_xy_y3_p3", *oracle_colength({3, 2, {mono({2, 0}), mono({1, 1}), mono({0, 3})}}));
    g.set("groebner.colength.x5_y5_xy_p5", *oracle_colength({5, 2, {mono({5, 0}), mono({0, 5}), mono({1, 1})}}));
    OIdeal box{5, 2, {mono({5, 0}), mono({0, 5})}};
    g.set("groebner.colon.x5_y5_by_x4y4.colength", oracle_colon_colength(box, mono({4, 4})));

    // (x^2, xy) ∩ (y): monomials of degree <= 4 lying in both.
    OIdeal A{5, 2, {mono({2, 0}), mono({1, 1})}};
    OIdeal B{5, 2, {mono({0, 1})}};
    std::uint64_t count = 0;
    for (std::uint32_t a = 0; a <= 4; ++a)
      for (std::uint32_t b = 0; a + b <= 4; ++b)
        if (oracle_member(mono({a, b}), A, 5) && oracle_member(mono({a, b}), B, 5)) ++count;
    g.set("groebner.intersect.x2_xy_and_y.monomials_deg_le4", count);
  }

  {
    Timer t{"node p=5"};
    OPoly f = mono({1, 1});
    for (unsigned e = 1; e <= 3; ++e)
      g.set("frobenius.node_p5.a" + std::to_string(e), oracle_splitting_number(5, 2, f, e, threads));
    for (unsigned e = 1; e <= 4; ++e) {
      std::uint64_t q = power(5, e);
      OIdeal I{5, 2, {mono({std::uint32_t(q), 0}), mono({0, std::uint32_t(q)}), f}};
      g.set("hk.node_p5.m.e" + std::to_string(e), *oracle_colength(I, std::nullopt, threads));
    }
    for (unsigned e = 1; e <= 3; ++e) {
      std::uint64_t q = power(5, e);
      auto Q = std::uint32_t(q);
      OIdeal I{5, 2, {poly({{{Q, 0}, 1}, {{0, Q}, 1}}), f}};
      g.set("hk.node_p5.x_plus_y.e" + std::to_string(e), certified_colength(I, Q, threads).first);
    }
    g.set("hk.node_p5.x_plus_y.e0", certified_colength({5, 2, {poly({{{1, 0}, 1}, {{0, 1}, 1}}), f}}, 1, threads).first);
    std::uint64_t l0 = *oracle_colength({5, 2, {mono({1, 0}), mono({0, 1}), f}});
    std::uint64_t l1 = *oracle_colength({5, 2, {mono({5, 0}), mono({0, 5}), f}});
    cpp_rational disc = cpp_rational(l1, 5) - cpp_rational(l0);
    if (disc < 0) disc = -disc;
    g.set("hk.probe.node_p5.m_eprime1.discrepancy", disc);
  }

  {
    Timer t{"cusp p=5"};
    OPoly f = poly({{{2, 0}, 1}, {{0, 3}, 4}});
    g.set("frobenius.cusp_p5.a1", oracle_splitting_number(5, 2, f, 1, threads));
    g.set("frobenius.cusp_p5.a2", oracle_splitting_number(5, 2, f, 2, threads));
  }

  {
    Timer t{"A1 p=7"};
    OPoly f = poly({{{1, 1, 0}, 1}, {{0, 0, 2}, 6}});
    for (unsigned e = 1; e <= 3; ++e)
      g.set("frobenius.a1_p7.a" + std::to_string(e), oracle_splitting_number(7, 3, f, e, threads));
    OIdeal m7{7, 3, {mono({7, 0, 0}), mono({0, 7, 0}), mono({0, 0, 7}), f}};
    g.set("frobenius.a1_p7.m_bracket_length.e1", *oracle_colength(m7, std::nullopt, threads));
  }

  {
    Timer t{"Monsky p=2"};
    // u v + x^3 + y^3 + x y z, variables x, y, z, u, v.
    OPoly f = poly({{{0, 0, 0, 1, 1}, 1}, {{3, 0, 0, 0, 0}, 1}, {{0, 3, 0, 0, 0}, 1}, {{1, 1, 1, 0, 0}, 1}});
    for (unsigned e = 1; e <= 2; ++e) {
      auto Q = std::uint32_t(power(2, e));
      OIdeal I{2, 5, {mono({Q, 0, 0, 0, 0}), mono({0, Q, 0, 0, 0}), mono({0, 0, Q, 0, 0}),
                      poly({{{0, 0, 0, Q, 0}, 1}, {{0, 0, 0, 0, Q}, 1}}), f}};
      auto [len, D] = certified_colength(I, Q, threads);
      g.set("hk.monsky_p2.x_y_z_u_plus_v.e" + std::to_string(e), len);
      g.set("hk.monsky_p2.x_y_z_u_plus_v.e" + std::to_string(e) + ".degree_bound", std::uint64_t{D});
      g.set("frobenius.monsky_p2.a" + std::to_string(e), oracle_splitting_number(2, 5, f, e, threads));
    }
  }

  g.save(output, "Frozen reference values produced by tools/fix_values from the brute-force oracle.\n"
                 "Regenerate with tools/fix-values.sh; never edit by hand.");
  std::cerr << "wrote " << g.entries().size() << " values to " << output << '\n';
  return 0;
}

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fsig/polynomial.hpp"

// Slow reference computations that share no code with the Groebner engine:
// polynomial products by schoolbook expansion over std::map, and lengths by
// dense linear algebra on Macaulay matrices.
namespace fsig::oracle {

using Exponents = std::vector<std::uint32_t>;

struct OTerm {
  Exponents exps;
  std::uint32_t coeff;
};
// Unordered term list with nonzero coefficients and distinct monomials.
using OPoly = std::vector<OTerm>;

struct OIdeal {
  std::uint32_t p = 2;
  std::size_t nvars = 0;
  std::vector<OPoly> gens;
};

OPoly from_polynomial(const Polynomial& f);
OIdeal make_ideal(std::uint32_t p, std::size_t nvars, const std::vector<Polynomial>& gens);

OPoly multiply(const OPoly& a, const OPoly& b, std::uint32_t p);
// f^k by k - 1 schoolbook multiplications.
OPoly expand_power(const OPoly& f, std::uint64_t k, std::uint32_t p);
std::uint32_t coefficient(const OPoly& f, const Exponents& e);
// x_i^q for every variable.
std::vector<OPoly> frobenius_of_maximal(std::size_t nvars, std::uint64_t q);

// Length of (S/I) localized at the origin, from the Macaulay matrix of I
// truncated below degree D.
//  * AUTO (no bound): needs a pure power x_i^{a_i} among the generators for
//    every variable, then D = sum(a_i - 1) + 1 and m^D ⊆ I; without them the
//    result is INFINITE (nullopt).
//  * explicit D: m^D ⊆ I + m^{D+1} is verified on the matrix first; a
//    failing certificate throws DomainError.
// Matrices are block diagonal for the grading by the orthogonal complement
// of the generators' exponent differences; blocks are reduced independently
// (over `threads` OpenMP threads). Throws ResourceLimitError when a block
// exceeds the dense size limit.
std::optional<std::uint64_t> oracle_colength(const OIdeal& I, std::optional<unsigned> degree_bound = std::nullopt,
                                             int threads = 1);

// f ∈ I decided on the row space of the Macaulay matrix: exactly (modulo
// m^D with the AUTO bound) when I has all pure powers, otherwise on the
// rows g*m of degree below `degree_bound`. Requires deg f < degree_bound.
bool oracle_member(const OPoly& f, const OIdeal& I, unsigned degree_bound);

// l(S/(J : g)) = l(S/J) - l(S/(J + g)).
std::uint64_t oracle_colon_colength(const OIdeal& J, const OPoly& g, std::optional<unsigned> degree_bound = std::nullopt,
                                    int threads = 1);

// For a hypersurface S/(f): the rank of multiplication by f^{q-1} on
// S/m^[q], i.e. q^n - l(S/(m^[q] + f^{q-1})).
std::uint64_t oracle_splitting_number(std::uint32_t p, std::size_t nvars, const OPoly& f, unsigned e,
                                      int threads = 1);

}  // namespace fsig::oracle

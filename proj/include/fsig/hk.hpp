#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fsig/frobenius.hpp"
#include "fsig/ideal.hpp"
#include "fsig/rational.hpp"
#include "fsig/ring.hpp"

namespace fsig {

// l(R/I^[p^e]). Throws DomainError when I + a is not m-primary.
std::uint64_t hk_function(const RingPresentation& ring, const Ideal& I, unsigned e, int threads = 1);

struct HKRow {
  unsigned e = 0;
  std::uint64_t q = 1;
  std::uint64_t length = 0;
  Rational normalized;  // length / q^d
};

struct HKTable {
  std::vector<HKRow> rows;  // e = 1..e_max
  Rational estimate;
  Rational error_bound;
  Rational fitted_C;
  // Normalized values agree on the last two rows.
  bool exact = false;
};

// Tail-corrected estimate of e_HK(I; R) under the C/p^e error model:
//   delta_e   = n_{e+1} - n_e
//   fitted_C  = max_e |delta_e| p^e
//   bound     = fitted_C p / (p^E (p - 1))
//   estimate  = n_E + delta_{E-1} / (p - 1), clamped to [n_E - bound, n_E + bound]
// `jobs` spreads the levels over OpenMP threads.
HKTable hk_estimate(const RingPresentation& ring, const Ideal& I, unsigned e_max, int jobs = 1);

struct SplittingRow {
  unsigned e = 0;
  std::uint64_t q = 1;
  std::uint64_t a_e = 0;
  Rational lower;               // a_e / q^d
  std::uint64_t bracket = 0;    // l(R/I_e^[p])
  Rational upper;               // bracket / (q^d p^d)
  std::uint64_t m_length = 0;   // l(R/m^[q])
};

struct SplittingRecord {
  std::string method;
  std::size_t dimension = 0;
  std::vector<SplittingRow> rows;
  Rational s_estimate;
  Rational s_error;
  Rational s_lower;
  Rational s_upper;
  bool flat = false;

  // Populated by f_splitting_ratio_estimate.
  std::optional<SplittingPrimeApprox> prime;
  // dim S/P_approx; empty when P_approx is the unit ideal.
  std::optional<std::size_t> sdim;
  Rational r_F_estimate;
  bool unstable = false;
};

struct SignatureOptions {
  Rational tolerance = Rational(1, 1000000);
  int jobs = 1;
};

SplittingRecord f_signature_estimate(const RingPresentation& ring, unsigned e_max, const SignatureOptions& opt = {});
// Also fills the splitting-prime fields. sdim is dim(S/P_approx) when the
// approximation stabilized and d otherwise.
SplittingRecord f_splitting_ratio_estimate(const RingPresentation& ring, unsigned e_max,
                                           const SignatureOptions& opt = {});

struct GapReport {
  HKTable hk_I;
  HKTable hk_J;
  std::uint64_t colength_I = 0;
  std::uint64_t colength_J = 0;
  Rational lhs;          // (e_HK(I) - e_HK(J)) / l(J/I)
  Rational lhs_error;    // (bound_I + bound_J) / l(J/I)
  Rational s_estimate;
  Rational s_error;
  bool holds = false;    // lhs + lhs_error >= s_estimate - s_error
};

// Requires I ⊊ J (in R) with both m-primary; throws DomainError otherwise.
GapReport verify_hk_gap(const RingPresentation& ring, const Ideal& I, const Ideal& J, unsigned e_max,
                        const SignatureOptions& opt = {});
GapReport verify_hk_gap(const RingPresentation& ring, const Ideal& I, const Ideal& J, unsigned e_max,
                        const SplittingRecord& signature, int jobs = 1);

struct ProbeCase {
  unsigned e = 0;
  unsigned e_prime = 0;
  std::uint64_t sample = 0;
  std::vector<Polynomial> generators;  // added to m^[p^e]
  std::uint64_t length = 0;            // l(R/I)
  std::uint64_t bracket_length = 0;    // l(R/I^[p^e'])
  Rational discrepancy;                // |l(R/I) - l(R/I^[p^e'])/p^{e'd}| / p^{e(d-1)}
};

struct ProbeLevel {
  unsigned e = 0;
  Rational empirical_C;
  ProbeCase worst;
};

struct ProbeReport {
  std::vector<ProbeLevel> levels;
  Rational empirical_C;
  ProbeCase worst;
};

struct ProbeOptions {
  std::vector<unsigned> e_values{1, 2, 3};
  std::vector<unsigned> e_prime_values{1, 2};
  std::uint64_t samples = 50;
  std::uint64_t seed = 0;
  std::size_t pool_size = 6;
  bool binomials = true;
  int jobs = 1;
};

// The ideal drawn for (e, sample): m^[p^e] plus a seed-determined subset of
// monomials with exponents below p^e and, optionally, one binomial.
std::vector<Polynomial> probe_generators(const RingPresentation& ring, unsigned e, std::uint64_t sample,
                                         const ProbeOptions& opt);
ProbeReport uniform_constant_probe(const RingPresentation& ring, const ProbeOptions& opt);
// Serial reference of the same computation.
ProbeReport uniform_constant_probe_serial(const RingPresentation& ring, const ProbeOptions& opt);

}  // namespace fsig

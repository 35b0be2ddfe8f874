#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsig/ideal.hpp"
#include "fsig/ring.hpp"

namespace fsig {

// p^e, throwing OverflowError past 2^62.
std::uint64_t prime_power(std::uint32_t p, unsigned e);

// I^[p^e]: generator-wise Frobenius. When I already carries its reduced basis
// the bracket of that basis is attached as the result's basis, since
// in(I^[q]) = in(I)^[q].
Ideal bracket_power(const Ideal& I, unsigned e);

enum class SplittingRoute {
  Automatic,
  // (m^[q] : (a^[q] : a))
  General,
  // (m^[q] : f^(q-1)) + (f)
  HypersurfaceDirect,
  // I_e = (I_{e-1}^[p] : f^(p-1)) starting from I_0 = m
  HypersurfaceRecursive,
};

struct SplittingIdealRecord {
  unsigned e = 0;
  std::uint64_t q = 1;
  Ideal ideal;  // preimage in S, contains a
  std::uint64_t a_e = 0;
  std::string method;
};

// Labels: "regular", "Fedder-type (hypersurface)",
// "Fedder-type (complete intersection)", "Fedder-type (unverified class)".
std::string splitting_method_label(const RingPresentation& ring);

// Throws Error if the computed ideal is not m-primary.
SplittingIdealRecord splitting_ideal(const RingPresentation& ring, unsigned e,
                                     SplittingRoute route = SplittingRoute::Automatic, int threads = 1);
// Records for e = 1..e_max, sharing work between consecutive levels.
std::vector<SplittingIdealRecord> splitting_ideals(const RingPresentation& ring, unsigned e_max,
                                                   SplittingRoute route = SplittingRoute::Automatic,
                                                   int threads = 1);

std::uint64_t splitting_number(const RingPresentation& ring, unsigned e);

bool is_f_pure(const RingPresentation& ring);

struct KunzReport {
  bool regular = false;
  std::uint64_t length = 0;    // l(R/m^[p])
  std::uint64_t expected = 0;  // p^d
  std::size_t dimension = 0;
};
KunzReport kunz_regularity(const RingPresentation& ring);
inline bool is_regular_kunz(const RingPresentation& ring) { return kunz_regularity(ring).regular; }

// l(R/K) for an ideal K of S, i.e. colength(K + a). Throws DomainError when
// infinite.
std::uint64_t quotient_length(const RingPresentation& ring, const Ideal& K, int threads = 1);
// l(R/K^[p^e]).
std::uint64_t bracket_length(const RingPresentation& ring, const Ideal& K, unsigned e, int threads = 1);

struct SplittingPrimeApprox {
  Ideal P;
  bool stabilized = false;
  unsigned e_max = 0;
};
SplittingPrimeApprox splitting_prime_approx(const RingPresentation& ring, unsigned e_max);
SplittingPrimeApprox splitting_prime_approx(const RingPresentation& ring,
                                            const std::vector<SplittingIdealRecord>& records);

}  // namespace fsig

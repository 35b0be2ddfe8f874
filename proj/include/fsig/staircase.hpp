#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fsig/monomial.hpp"

namespace fsig {

// Number of monomials in nvars variables divisible by none of `generators`,
// or nullopt when that set is infinite (some variable lacks a pure power).
//
// The count slices along the last variable: between consecutive distinct
// exponents of that variable the active generators do not change, so each
// slab contributes (width) x (count of the projected (n-1)-variable ideal).
// Slabs are independent; this entry point spreads them over OpenMP threads
// (`threads` <= 0 uses the OpenMP default).
std::optional<std::uint64_t> count_standard_monomials(std::span<const Monomial> generators,
                                                      std::size_t nvars, int threads = 0);

// Single-threaded reference of the same slab decomposition.
std::optional<std::uint64_t> count_standard_monomials_serial(std::span<const Monomial> generators,
                                                             std::size_t nvars);

// Explicit list of standard monomials (ascending lexicographic exponent
// order), or nullopt if infinite or larger than `limit`.
std::optional<std::vector<Monomial>> enumerate_standard_monomials(std::span<const Monomial> generators,
                                                                  std::size_t nvars, std::size_t limit);

// Removes generators divisible by another one and sorts the rest by their
// first exponent (then lexicographically).
std::vector<Monomial> minimalize(std::span<const Monomial> generators);

}  // namespace fsig

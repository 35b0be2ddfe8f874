#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsig/ideal.hpp"
#include "fsig/polynomial.hpp"

namespace fsig {

// R = S/a with S = F_p[x_1..x_n], localized at m = (x_1..x_n). The residue
// field F_p is perfect, so log_p [k : k^p] vanishes and lengths over R are
// plain F_p-dimensions.
class RingPresentation {
 public:
  // Throws DomainError for a non-prime p, invalid or duplicate names, more
  // than kMaxRingVariables variables, or a relation outside m; ParseError for
  // malformed relation text.
  RingPresentation(std::uint32_t p, std::vector<std::string> vars, const std::vector<std::string>& relations,
                   OrderKind order = OrderKind::Grevlex);
  RingPresentation(PolyRingPtr ring, std::vector<Polynomial> relations);

  const PolyRing& poly_ring() const noexcept { return *ring_; }
  const PolyRingPtr& poly_ring_ptr() const noexcept { return ring_; }
  std::uint32_t characteristic() const noexcept { return ring_->characteristic(); }
  std::size_t nvars() const noexcept { return ring_->nvars(); }
  const std::vector<Polynomial>& relations() const noexcept { return relations_; }

  // The defining ideal a of S, basis cached.
  const Ideal& defining_ideal() const noexcept { return *defining_; }
  bool is_polynomial_ring() const;
  // The generator f when a = (f) is principal and nonzero.
  std::optional<Polynomial> hypersurface_equation() const;
  // a generated by n - d elements.
  bool is_complete_intersection() const;

  // d = dim S/a, cached. Throws DomainError when a = (1).
  std::size_t dimension() const;

  Ideal maximal_ideal() const;
  // Preimage in S of the ideal of R generated by `ideal`: ideal + a.
  Ideal with_relations(const Ideal& ideal) const;
  Ideal ideal_from(std::vector<Polynomial> generators) const;

  // Canonical text used for fingerprints and cache keys.
  std::string normalized_text() const;

 private:
  explicit RingPresentation(std::pair<PolyRingPtr, std::vector<Polynomial>> parts);

  PolyRingPtr ring_;
  std::vector<Polynomial> relations_;
  std::shared_ptr<Ideal> defining_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

}  // namespace fsig

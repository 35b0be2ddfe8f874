#include "fsig/ring.hpp"

#include <mutex>

#include "fsig/error.hpp"
#include "fsig/ideal_ops.hpp"
#include "fsig/parser.hpp"

namespace fsig {

struct RingPresentation::Cache {
  std::mutex mutex;
  std::optional<std::size_t> dimension;
};

namespace {

PolyRingPtr make_ring(std::uint32_t p, std::vector<std::string> vars, OrderKind order) {
  if (vars.size() > kMaxRingVariables)
    throw DomainError("at most " + std::to_string(kMaxRingVariables) + " ring variables are supported");
  for (const auto& v : vars)
    if (!is_valid_variable_name(v)) throw DomainError("invalid variable name '" + v + "'");
  return std::make_shared<const PolyRing>(p, std::move(vars), TermOrder{order, 0});
}

std::pair<PolyRingPtr, std::vector<Polynomial>> with_parsed(PolyRingPtr ring,
                                                           const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(parse_polynomial(t, *ring));
  return {std::move(ring), std::move(out)};
}

}  // namespace

RingPresentation::RingPresentation(std::uint32_t p, std::vector<std::string> vars,
                                   const std::vector<std::string>& relations, OrderKind order)
    : RingPresentation(with_parsed(make_ring(p, std::move(vars), order), relations)) {}

RingPresentation::RingPresentation(std::pair<PolyRingPtr, std::vector<Polynomial>> parts)
    : RingPresentation(std::move(parts.first), std::move(parts.second)) {}

RingPresentation::RingPresentation(PolyRingPtr ring, std::vector<Polynomial> relations)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  std::erase_if(relations, [](const Polynomial& f) { return f.is_zero(); });
  for (const auto& f : relations) {
    const Term& last = f.terms().back();
    if (last.mono.is_one())
      throw DomainError("relation " + render(f, *ring_) + " has a nonzero constant term; R would not be local at the origin");
  }
  relations_ = std::move(relations);
  defining_ = std::make_shared<Ideal>(ring_, relations_);
}

bool RingPresentation::is_polynomial_ring() const { return relations_.empty(); }

std::optional<Polynomial> RingPresentation::hypersurface_equation() const {
  const auto& basis = defining_->basis();
  if (basis.size() != 1) return std::nullopt;
  return basis.front();
}

bool RingPresentation::is_complete_intersection() const {
  return relations_.size() + dimension() == nvars();
}

std::size_t RingPresentation::dimension() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->dimension) {
    if (defining_->is_unit()) throw DomainError("defining ideal is the unit ideal");
    cache_->dimension = krull_dimension(*defining_);
  }
  return *cache_->dimension;
}

Ideal RingPresentation::maximal_ideal() const { return with_relations(Ideal::maximal(ring_)); }

Ideal RingPresentation::with_relations(const Ideal& ideal) const {
  if (relations_.empty()) return ideal;
  return add_generators(ideal, relations_);
}

Ideal RingPresentation::ideal_from(std::vector<Polynomial> generators) const {
  return Ideal(ring_, std::move(generators));
}

std::string RingPresentation::normalized_text() const {
  std::string out = "p = " + std::to_string(characteristic()) + "\nvars = ";
  for (std::size_t i = 0; i < nvars(); ++i) out += (i ? ", " : "") + ring_->names()[i];
  out += "\norder = " + std::string(to_string(ring_->order().kind)) + "\nrelations = ";
  for (std::size_t i = 0; i < relations_.size(); ++i) out += (i ? ", " : "") + render(relations_[i], *ring_);
  out += "\n";
  return out;
}

}  // namespace fsig

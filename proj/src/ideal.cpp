#include "fsig/ideal.hpp"

#include <mutex>

#include "fsig/error.hpp"

namespace fsig {

struct Ideal::State {
  std::vector<Polynomial> generators;
  mutable std::mutex mutex;
  mutable std::optional<std::vector<Polynomial>> basis;
};

Ideal::Ideal(PolyRingPtr ring, std::shared_ptr<State> state) : ring_(std::move(ring)), state_(std::move(state)) {}

Ideal::Ideal(PolyRingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), state_(std::make_shared<State>()) {
  if (!ring_) throw DomainError("ideal without a ring");
  std::erase_if(generators, [](const Polynomial& g) { return g.is_zero(); });
  state_->generators = std::move(generators);
}

const std::vector<Polynomial>& Ideal::generators() const noexcept { return state_->generators; }

Ideal Ideal::from_basis(PolyRingPtr ring, std::vector<Polynomial> basis) {
  Ideal I(std::move(ring), basis);
  I.state_->basis = std::move(basis);
  return I;
}

Ideal Ideal::unit(PolyRingPtr ring) {
  auto one = ring->constant(1);
  return from_basis(std::move(ring), {one});
}

Ideal Ideal::maximal(PolyRingPtr ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
  auto basis = groebner_basis(*ring, vars);
  return from_basis(std::move(ring), std::move(basis));
}

const std::vector<Polynomial>& Ideal::basis(const GbLimits& limits) const {
  std::lock_guard lock(state_->mutex);
  if (!state_->basis) state_->basis = groebner_basis(*ring_, state_->generators, limits);
  return *state_->basis;
}

bool Ideal::has_basis() const noexcept {
  std::lock_guard lock(state_->mutex);
  return state_->basis.has_value();
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().leading_monomial().is_one();
}

bool Ideal::is_zero() const { return generators().empty(); }

bool Ideal::contains(const Polynomial& f) const { return normal_form(*ring_, f, basis()).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::same_as(const Ideal& other) const { return basis() == other.basis(); }

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : basis()) out.push_back(g.leading_monomial());
  return out;
}

}  // namespace fsig

#include "hoising/phase.hpp"

#include <cmath>

#include "hoising/error.hpp"

namespace hoising {

double wrap_phase(double phi) {
  double r = std::fmod(phi, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;  // r + 2π can round up to exactly 2π
  return r;
}

double wrap_difference(double delta) {
  double r = std::remainder(delta, kTwoPi);  // [−π, π]
  if (r <= -std::numbers::pi) r += kTwoPi;
  return r;
}

PhaseState::PhaseState(std::vector<double> phases) : phases_(std::move(phases)) { normalize(); }

void PhaseState::normalize() {
  for (auto& phi : phases_) {
    if (!std::isfinite(phi)) throw NumericalError("non-finite phase");
    phi = wrap_phase(phi);
  }
}

EnergyFn PhaseModel::local_energy(std::span<const double> /*at*/) const {
  return [this](std::span<const double> phases) { return energy(phases); };
}

}  // namespace hoising

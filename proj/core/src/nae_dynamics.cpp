#include "hoising/nae_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hoising/error.hpp"

namespace hoising {

NaeConstants nae_constants_for(std::size_t /*k*/) { return {10.0 / 8.0, 5.0}; }

bool nae_constants_tabulated(std::size_t k) { return k == 4; }

NaeSystem::NaeSystem(const CnfInstance& instance, NaeConstants constants)
    : num_vars_(instance.num_vars()), constants_(constants) {
  if (!(std::isfinite(constants.coupling) && constants.coupling > 0.0)) {
    throw InputError("coupling C must be finite and positive");
  }
  if (!(std::isfinite(constants.harmonic) && constants.harmonic > 0.0)) {
    throw InputError("harmonic strength C_s must be finite and positive");
  }
  const int power = instance.num_clauses() > 0 ? static_cast<int>(instance.k()) - 1 : 0;
  couplings_ = build_objective(instance).scaled_pow2(power);

  offset_ = constants.coupling * couplings_.constant().to_double();
  for (const auto& [vars, coeff] : couplings_.terms()) {
    weights_.push_back(constants.coupling * coeff.to_double());
    term_begin_.push_back(vars_.size());
    vars_.insert(vars_.end(), vars.begin(), vars.end());
  }
  term_begin_.push_back(vars_.size());
}

namespace {

double alternating_sum(std::span<const double> phases, std::span<const std::size_t> vars) {
  double sum = 0.0;
  for (std::size_t p = 0; p < vars.size(); ++p) {
    sum += (p % 2 == 0) ? phases[vars[p]] : -phases[vars[p]];
  }
  return sum;
}

}  // namespace

double NaeSystem::energy(std::span<const double> phases) const {
  if (phases.size() != num_vars_) throw InputError("phase vector has wrong dimension");
  const std::span<const std::size_t> all_vars(vars_);
  double interaction = 0.0;
  for (std::size_t t = 0; t < weights_.size(); ++t) {
    const auto vars = all_vars.subspan(term_begin_[t], term_begin_[t + 1] - term_begin_[t]);
    interaction += weights_[t] * std::cos(alternating_sum(phases, vars));
  }
  double harmonic = 0.0;
  for (const double phi : phases) harmonic += std::cos(2.0 * phi);
  return offset_ + interaction - 0.5 * constants_.harmonic * harmonic;
}

void NaeSystem::drift(std::span<const double> phases, std::span<double> out) const {
  if (phases.size() != num_vars_ || out.size() != num_vars_) {
    throw InputError("phase vector has wrong dimension");
  }
  for (std::size_t i = 0; i < num_vars_; ++i) out[i] = -constants_.harmonic * std::sin(2.0 * phases[i]);
  const std::span<const std::size_t> all_vars(vars_);
  for (std::size_t t = 0; t < weights_.size(); ++t) {
    const auto vars = all_vars.subspan(term_begin_[t], term_begin_[t + 1] - term_begin_[t]);
    // −∂/∂φ_v of w·cos(alt) is w·sin(alt)·(∂alt/∂φ_v), i.e. ±w·sin(alt) by position parity.
    const double s = weights_[t] * std::sin(alternating_sum(phases, vars));
    for (std::size_t p = 0; p < vars.size(); ++p) out[vars[p]] += (p % 2 == 0) ? s : -s;
  }
}

std::vector<double> NaeSystem::drift(std::span<const double> phases) const {
  std::vector<double> out(phases.size());
  drift(phases, out);
  return out;
}

SpinAssignment snap_to_spins(std::span<const double> phases) {
  std::vector<int> spins;
  spins.reserve(phases.size());
  for (const double raw : phases) {
    const double phi = wrap_phase(raw);
    const double to_zero = std::min(phi, kTwoPi - phi);
    const double to_pi = std::abs(phi - std::numbers::pi);
    spins.push_back(to_zero <= to_pi ? 1 : -1);
  }
  return SpinAssignment(std::move(spins));
}

namespace {

class NaeModel final : public PhaseModel {
 public:
  NaeModel(const CnfInstance& instance, NaeConstants constants)
      : instance_(instance), system_(instance, constants) {}

  std::size_t dimension() const override { return system_.num_vars(); }
  double energy(std::span<const double> phases) const override { return system_.energy(phases); }
  void drift(std::span<const double> phases, std::span<double> out) const override {
    system_.drift(phases, out);
  }
  Snapshot snapshot(std::span<const double> phases) const override {
    auto spins = snap_to_spins(phases);
    const auto metric = count_satisfied(instance_, spins);
    return {spins.values(), metric};
  }
  std::size_t metric_bound() const override { return instance_.num_clauses(); }
  std::string family() const override { return "nae-sat"; }

 private:
  CnfInstance instance_;
  NaeSystem system_;
};

}  // namespace

std::shared_ptr<const PhaseModel> make_nae_model(const CnfInstance& instance, NaeConstants constants) {
  return std::make_shared<NaeModel>(instance, constants);
}

}  // namespace hoising

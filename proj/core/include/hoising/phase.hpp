#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace hoising {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduces an angle to [0, 2π).
double wrap_phase(double phi);

/// Reduces an angle difference to (−π, π].
double wrap_difference(double delta);

/// Continuous solver state: one oscillator phase per spin, kept in [0, 2π).
class PhaseState {
 public:
  PhaseState() = default;
  explicit PhaseState(std::vector<double> phases);

  std::size_t size() const { return phases_.size(); }
  double operator[](std::size_t i) const { return phases_[i]; }
  std::span<const double> view() const { return phases_; }
  const std::vector<double>& values() const { return phases_; }

  /// Applies the [0, 2π) reduction to every entry. Throws NumericalError on a
  /// non-finite entry.
  void normalize();
  std::vector<double>& mutable_values() { return phases_; }

 private:
  std::vector<double> phases_;
};

/// Snapped discrete solution plus its combinatorial score (satisfied clauses
/// or cut hyperedges). Values are spins (±1) or partition labels.
struct Snapshot {
  std::vector<int> values;
  std::size_t metric = 0;
};

using EnergyFn = std::function<double(std::span<const double>)>;

/// A phase-dynamical system with a discrete read-out, as consumed by the
/// integrator. Implementations are immutable and safe to share across threads.
class PhaseModel {
 public:
  virtual ~PhaseModel() = default;

  virtual std::size_t dimension() const = 0;
  virtual double energy(std::span<const double> phases) const = 0;
  /// Writes dφ/dt = −∂E/∂φ into out (size dimension()).
  virtual void drift(std::span<const double> phases, std::span<double> out) const = 0;
  virtual Snapshot snapshot(std::span<const double> phases) const = 0;
  /// Best attainable discrete metric upper bound (clause or edge count).
  virtual std::size_t metric_bound() const = 0;

  /// Energy whose exact gradient the drift follows around `at`. The identity
  /// for smooth models; cut models freeze the phase penalty at `at`.
  virtual EnergyFn local_energy(std::span<const double> at) const;

  /// False when the step before -> after crosses structure the drift ignores
  /// by construction (a phase-penalty bump shoulder). Descent audits skip such
  /// steps.
  virtual bool smooth_step(std::span<const double> /*before*/, std::span<const double> /*after*/) const {
    return true;
  }

  virtual std::string family() const = 0;
};

}  // namespace hoising

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hoising/phase.hpp"

namespace hoising {

using Rng = std::mt19937_64;
using DriftFn = std::function<void(std::span<const double>, std::span<double>)>;

enum class NoiseSchedule { kConstant, kLinearDecay };
enum class Problem { kNaeSat, kHyperMaxCut };

std::string to_string(NoiseSchedule schedule);
NoiseSchedule parse_noise_schedule(const std::string& name);
std::string to_string(Problem problem);
Problem parse_problem(const std::string& name);

struct SolverConfig {
  double dt = 1e-3;
  std::size_t steps = 20000;
  /// Per-√time phase noise scale (radians); each step adds amp·√dt·ξ.
  double noise_amplitude = 0.3;
  NoiseSchedule schedule = NoiseSchedule::kLinearDecay;
  /// Step at which linear decay reaches zero; unset means 80% of steps.
  std::optional<std::size_t> decay_end;
  std::size_t restarts = 20;
  std::uint64_t seed = 0;
  std::size_t record_every = 10;
  /// Stop a restart once its snapped metric reaches this value.
  std::optional<std::size_t> target;
  bool record_phases = false;
  /// Worker threads for the restart fan-out; results do not depend on it.
  std::size_t threads = 1;

  /// Throws InputError on dt <= 0, steps/restarts/record_every == 0, or a
  /// negative/non-finite noise amplitude.
  void validate() const;
  /// Copy with every optional default materialized.
  SolverConfig resolved() const;
  /// Noise amplitude used for the step that starts at `step`.
  double noise_at(std::size_t step) const;
};

struct TraceRecord {
  std::size_t restart = 0;
  std::size_t step = 0;
  double energy = 0.0;
  std::size_t metric = 0;
  std::vector<double> phases;  // empty unless record_phases
};

struct RestartSummary {
  std::size_t restart = 0;
  std::uint64_t seed = 0;
  std::size_t best_metric = 0;
  std::size_t best_step = 0;
  std::size_t steps_taken = 0;
  double final_energy = 0.0;
  bool reached_target = false;
  std::vector<int> best_values;
};

struct SolveResult {
  std::vector<int> best_values;
  std::size_t best_metric = 0;
  std::size_t best_step = 0;
  std::size_t best_restart = 0;
  double final_energy = 0.0;  // of the best restart
  std::vector<TraceRecord> trace;
  std::vector<RestartSummary> restarts;
  SolverConfig config;  // resolved
};

/// Per-family defaults: 20 restarts of 2·10^4 steps with linearly decaying
/// noise; dt = 1e-3 and noise 3.0 for NAE-SAT, dt = 1e-2 and noise 0.3 for
/// hypergraph Max-K-Cut.
SolverConfig default_config(Problem problem);

/// One Euler–Maruyama step: wrap(φ + dt·drift(φ) + amp·√dt·ξ), ξ ~ N(0, I).
/// Throws NumericalError on a non-finite drift component. No normals are
/// drawn when amp == 0.
PhaseState step(const PhaseState& state, const DriftFn& drift, double dt, double noise_amp, Rng& rng);

/// Uniform phases in [0, 2π).
PhaseState random_phases(std::size_t n, Rng& rng);

/// Runs config.restarts independent noisy trajectories from uniformly random
/// phases (restart r seeded with seed + r), snapping and scoring every
/// record_every steps. Deterministic per (model, config) regardless of the
/// thread count.
SolveResult run(const PhaseModel& model, const SolverConfig& config);

struct AuditOptions {
  double dt = 1e-3;
  std::size_t steps = 2000;
  std::uint64_t seed = 0;
};

struct AuditReport {
  std::size_t steps = 0;
  double initial_energy = 0.0;
  double final_energy = 0.0;
  /// Largest E(n+1) − E(n) over steps the model reports as smooth. Zero when
  /// there are none.
  double max_increase = 0.0;
  std::size_t excluded_steps = 0;
  std::vector<double> energies;

  double total_change() const { return final_energy - initial_energy; }
};

/// Noise-free explicit-Euler trajectory from random phases, recording E at
/// every step.
AuditReport lyapunov_audit(const PhaseModel& model, const AuditOptions& options);

}  // namespace hoising

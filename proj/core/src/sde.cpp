#include "hoising/sde.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "hoising/error.hpp"

namespace hoising {

std::string to_string(NoiseSchedule schedule) {
  return schedule == NoiseSchedule::kConstant ? "constant" : "decay";
}

NoiseSchedule parse_noise_schedule(const std::string& name) {
  if (name == "constant") return NoiseSchedule::kConstant;
  if (name == "decay") return NoiseSchedule::kLinearDecay;
  throw InputError("unknown noise schedule '" + name + "' (expected constant or decay)");
}

std::string to_string(Problem problem) {
  return problem == Problem::kNaeSat ? "nae-sat" : "hyper-maxcut";
}

Problem parse_problem(const std::string& name) {
  if (name == "nae-sat") return Problem::kNaeSat;
  if (name == "hyper-maxcut") return Problem::kHyperMaxCut;
  throw InputError("unknown problem '" + name + "' (expected nae-sat or hyper-maxcut)");
}

SolverConfig default_config(Problem problem) {
  SolverConfig config;
  if (problem == Problem::kNaeSat) {
    config.dt = 1e-3;
    config.noise_amplitude = 3.0;
  } else {
    config.dt = 1e-2;
    config.noise_amplitude = 0.3;
  }
  return config;
}

void SolverConfig::validate() const {
  if (!(std::isfinite(dt) && dt > 0.0)) throw InputError("dt must be finite and positive");
  if (steps == 0) throw InputError("steps must be at least 1");
  if (restarts == 0) throw InputError("restarts must be at least 1");
  if (record_every == 0) throw InputError("record_every must be at least 1");
  if (!(std::isfinite(noise_amplitude) && noise_amplitude >= 0.0)) {
    throw InputError("noise amplitude must be finite and non-negative");
  }
  if (decay_end && *decay_end == 0) throw InputError("decay end step must be positive");
}

SolverConfig SolverConfig::resolved() const {
  SolverConfig out = *this;
  if (!out.decay_end) out.decay_end = std::max<std::size_t>(1, steps * 4 / 5);
  if (out.threads == 0) out.threads = 1;
  return out;
}

double SolverConfig::noise_at(std::size_t step_index) const {
  if (schedule == NoiseSchedule::kConstant) return noise_amplitude;
  const double end = static_cast<double>(decay_end.value_or(std::max<std::size_t>(1, steps * 4 / 5)));
  const double fraction = 1.0 - static_cast<double>(step_index) / end;
  return noise_amplitude * std::max(0.0, fraction);
}

namespace {

// In-place Euler–Maruyama update shared by step(), run() and the audit.
void advance(std::vector<double>& phases, std::vector<double>& scratch, const DriftFn& drift, double dt,
             double noise_amp, Rng& rng) {
  scratch.resize(phases.size());
  drift(phases, scratch);
  const double kick = noise_amp * std::sqrt(dt);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (std::size_t i = 0; i < phases.size(); ++i) {
    if (!std::isfinite(scratch[i])) throw NumericalError("non-finite drift component");
    double next = phases[i] + dt * scratch[i];
    if (noise_amp > 0.0) next += kick * normal(rng);
    phases[i] = wrap_phase(next);
  }
}

DriftFn model_drift(const PhaseModel& model) {
  return [&model](std::span<const double> phases, std::span<double> out) { model.drift(phases, out); };
}

struct RestartOutcome {
  RestartSummary summary;
  std::vector<TraceRecord> trace;
};

RestartOutcome run_restart(const PhaseModel& model, const SolverConfig& config, std::size_t restart) {
  RestartOutcome outcome;
  auto& summary = outcome.summary;
  summary.restart = restart;
  summary.seed = config.seed + restart;

  Rng rng(summary.seed);
  auto state = random_phases(model.dimension(), rng);
  auto& phases = state.mutable_values();
  std::vector<double> scratch;
  const auto drift = model_drift(model);

  bool have_best = false;
  auto record = [&](std::size_t step_index) {
    const double e = model.energy(phases);
    if (!std::isfinite(e)) throw NumericalError("non-finite energy");
    auto snap = model.snapshot(phases);
    TraceRecord rec{restart, step_index, e, snap.metric, {}};
    if (config.record_phases) rec.phases = phases;
    outcome.trace.push_back(std::move(rec));
    if (!have_best || snap.metric > summary.best_metric) {
      have_best = true;
      summary.best_metric = snap.metric;
      summary.best_step = step_index;
      summary.best_values = std::move(snap.values);
    }
    summary.final_energy = e;
    summary.steps_taken = step_index;
    return config.target && summary.best_metric >= *config.target;
  };

  if (record(0)) {
    summary.reached_target = true;
    return outcome;
  }
  for (std::size_t n = 0; n < config.steps; ++n) {
    advance(phases, scratch, drift, config.dt, config.noise_at(n), rng);
    const std::size_t done = n + 1;
    if (done % config.record_every == 0 || done == config.steps) {
      if (record(done)) {
        summary.reached_target = true;
        break;
      }
    }
  }
  return outcome;
}

}  // namespace

PhaseState step(const PhaseState& state, const DriftFn& drift, double dt, double noise_amp, Rng& rng) {
  if (!(dt > 0.0)) throw InputError("dt must be positive");
  auto phases = state.values();
  std::vector<double> scratch;
  advance(phases, scratch, drift, dt, noise_amp, rng);
  return PhaseState(std::move(phases));
}

PhaseState random_phases(std::size_t n, Rng& rng) {
  std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
  std::vector<double> phases(n);
  for (auto& phi : phases) phi = uniform(rng);
  return PhaseState(std::move(phases));
}

SolveResult run(const PhaseModel& model, const SolverConfig& raw_config) {
  raw_config.validate();
  const auto config = raw_config.resolved();

  std::vector<RestartOutcome> outcomes(config.restarts);
  const std::size_t workers = std::min(config.threads, config.restarts);
  if (workers <= 1) {
    for (std::size_t r = 0; r < config.restarts; ++r) outcomes[r] = run_restart(model, config, r);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t r = w; r < config.restarts; r += workers) outcomes[r] = run_restart(model, config, r);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  SolveResult result;
  result.config = config;
  bool have_best = false;
  for (auto& outcome : outcomes) {
    const auto& s = outcome.summary;
    if (!have_best || s.best_metric > result.best_metric) {
      have_best = true;
      result.best_metric = s.best_metric;
      result.best_step = s.best_step;
      result.best_restart = s.restart;
      result.best_values = s.best_values;
      result.final_energy = s.final_energy;
    }
    result.trace.insert(result.trace.end(), std::make_move_iterator(outcome.trace.begin()),
                        std::make_move_iterator(outcome.trace.end()));
    result.restarts.push_back(std::move(outcome.summary));
  }
  return result;
}

AuditReport lyapunov_audit(const PhaseModel& model, const AuditOptions& options) {
  if (!(options.dt > 0.0)) throw InputError("dt must be positive");
  AuditReport report;
  report.steps = options.steps;
  if (options.steps == 0) return report;

  Rng rng(options.seed);
  auto state = random_phases(model.dimension(), rng);
  auto& phases = state.mutable_values();
  std::vector<double> scratch;
  const auto drift = model_drift(model);

  double energy = model.energy(phases);
  std::vector<double> previous;
  report.initial_energy = energy;
  report.energies.reserve(options.steps + 1);
  report.energies.push_back(energy);
  for (std::size_t n = 0; n < options.steps; ++n) {
    previous = phases;
    advance(phases, scratch, drift, options.dt, 0.0, rng);
    const double next = model.energy(phases);
    if (!std::isfinite(next)) throw NumericalError("non-finite energy");
    if (model.smooth_step(previous, phases)) {
      report.max_increase = std::max(report.max_increase, next - energy);
    } else {
      ++report.excluded_steps;
    }
    report.energies.push_back(next);
    energy = next;
  }
  report.final_energy = energy;
  return report;
}

}  // namespace hoising

#include "hoising/cut_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hoising/error.hpp"

namespace hoising {

namespace {

constexpr double kPi = std::numbers::pi;

// Beyond 40σ the Gaussian is below the smallest subnormal, so skipping is exact.
constexpr double kBumpCutoff = 40.0;
// Penalty drift per step below which a step counts as smooth for descent audits.
constexpr double kSmoothPenaltyChange = 1e-9;

double bump_amplitude(int k, int partitions) {
  return (2.0 * k - 1.0) * kPi - 2.0 * k * kPi / partitions;
}

double bump_centre(int k, int partitions) { return 2.0 * k * kPi / partitions; }

}  // namespace

CutConstants cut_constants_for(int k) {
  CutConstants c;
  if (k >= 4) c.coupling = 10.0;
  return c;
}

bool cut_constants_tabulated(int k) { return k >= 2 && k <= 4; }

double phase_penalty(double delta, int k, double sigma) {
  const double d = wrap_difference(delta);
  const double reach = kBumpCutoff * sigma;
  const double inv = 1.0 / (2.0 * sigma * sigma);
  double f = 0.0;
  for (int b = 1; b < k; ++b) {
    const double amp = bump_amplitude(b, k);
    const double c = bump_centre(b, k);
    const double up = d - c;
    const double down = d + c;
    if (std::abs(up) < reach) f += amp * std::exp(-up * up * inv);
    if (std::abs(down) < reach) f -= amp * std::exp(-down * down * inv);
  }
  return f;
}

CutSystem::CutSystem(Hypergraph graph, int k, CutConstants constants)
    : graph_(std::move(graph)), k_(k), constants_(constants) {
  if (k_ < 2) throw InputError("partition count K must be at least 2");
  if (!(std::isfinite(constants.coupling) && constants.coupling > 0.0)) {
    throw InputError("coupling A must be finite and positive");
  }
  if (!(std::isfinite(constants.harmonic) && constants.harmonic > 0.0)) {
    throw InputError("harmonic strength A_s must be finite and positive");
  }
  if (!(constants.sigma > 0.0 && constants.sigma < kTwoPi / (8.0 * k_))) {
    throw InputError("sigma must lie in (0, 2π/(8K))");
  }
  for (const auto& edge : graph_.edges()) {
    edge_begin_.push_back(pairs_.size());
    for (std::size_t x = 0; x < edge.size(); ++x) {
      for (std::size_t y = x + 1; y < edge.size(); ++y) pairs_.push_back({edge[x], edge[y]});
    }
  }
  edge_begin_.push_back(pairs_.size());
}

std::span<const CutSystem::Pair> CutSystem::edge_pairs(std::size_t edge) const {
  return std::span<const Pair>(pairs_).subspan(edge_begin_[edge], edge_begin_[edge + 1] - edge_begin_[edge]);
}

double CutSystem::pair_factor(double phi_i, double phi_j) const {
  const double d = wrap_difference(phi_i - phi_j);
  return 0.5 * (1.0 + std::cos(d + phase_penalty(d, k_, constants_.sigma)));
}

double CutSystem::hyperedge_indicator(std::size_t edge, std::span<const double> phases) const {
  double h = 1.0;
  for (const auto& p : edge_pairs(edge)) h *= pair_factor(phases[p.a], phases[p.b]);
  return h;
}

std::vector<double> CutSystem::penalties(std::span<const double> phases) const {
  std::vector<double> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(phase_penalty(phases[p.a] - phases[p.b], k_, constants_.sigma));
  return out;
}

double CutSystem::energy_with_penalties(std::span<const double> phases, std::span<const double> frozen) const {
  if (phases.size() != num_nodes()) throw InputError("phase vector has wrong dimension");
  if (frozen.size() != pairs_.size()) throw InputError("penalty vector has wrong size");
  double interaction = 0.0;
  for (std::size_t e = 0; e < graph_.num_edges(); ++e) {
    double h = 1.0;
    for (std::size_t q = edge_begin_[e]; q < edge_begin_[e + 1]; ++q) {
      const auto& p = pairs_[q];
      h *= 0.5 * (1.0 + std::cos(phases[p.a] - phases[p.b] + frozen[q]));
    }
    interaction += h;
  }
  double harmonic = 0.0;
  for (const double phi : phases) harmonic += std::cos(k_ * phi);
  return constants_.coupling * interaction - constants_.harmonic / k_ * harmonic;
}

double CutSystem::energy(std::span<const double> phases) const {
  if (phases.size() != num_nodes()) throw InputError("phase vector has wrong dimension");
  return energy_with_penalties(phases, penalties(phases));
}

void CutSystem::drift(std::span<const double> phases, std::span<double> out) const {
  if (phases.size() != num_nodes() || out.size() != num_nodes()) {
    throw InputError("phase vector has wrong dimension");
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -constants_.harmonic * std::sin(k_ * phases[i]);

  const double half_a = 0.5 * constants_.coupling;
  std::vector<double> factor;
  std::vector<double> sine;
  std::vector<double> suffix;
  for (std::size_t e = 0; e < graph_.num_edges(); ++e) {
    const auto pairs = edge_pairs(e);
    const std::size_t n = pairs.size();
    factor.resize(n);
    sine.resize(n);
    suffix.assign(n + 1, 1.0);
    for (std::size_t q = 0; q < n; ++q) {
      const double d = wrap_difference(phases[pairs[q].a] - phases[pairs[q].b]);
      const double arg = d + phase_penalty(d, k_, constants_.sigma);
      factor[q] = 0.5 * (1.0 + std::cos(arg));
      sine[q] = std::sin(arg);
    }
    for (std::size_t q = n; q-- > 0;) suffix[q] = suffix[q + 1] * factor[q];
    double prefix = 1.0;
    for (std::size_t q = 0; q < n; ++q) {
      const double contribution = half_a * sine[q] * prefix * suffix[q + 1];
      out[pairs[q].a] += contribution;
      out[pairs[q].b] -= contribution;
      prefix *= factor[q];
    }
  }
}

std::vector<double> CutSystem::drift(std::span<const double> phases) const {
  std::vector<double> out(phases.size());
  drift(phases, out);
  return out;
}

double CutSystem::max_penalty_change(std::span<const double> before, std::span<const double> after) const {
  double worst = 0.0;
  for (const auto& p : pairs_) {
    const double f0 = phase_penalty(before[p.a] - before[p.b], k_, constants_.sigma);
    const double f1 = phase_penalty(after[p.a] - after[p.b], k_, constants_.sigma);
    worst = std::max(worst, std::abs(f1 - f0));
  }
  return worst;
}

std::size_t count_cut(const Hypergraph& graph, const LabelAssignment& labels) {
  if (labels.size() < graph.num_nodes()) throw InputError("label assignment too short");
  std::size_t cut = 0;
  for (const auto& edge : graph.edges()) {
    const int first = labels[edge.front()];
    for (const auto node : edge) {
      if (labels[node] != first) {
        ++cut;
        break;
      }
    }
  }
  return cut;
}

LabelAssignment snap_to_labels(std::span<const double> phases, int k) {
  if (k < 1) throw InputError("partition count must be positive");
  std::vector<int> labels;
  labels.reserve(phases.size());
  for (const double raw : phases) {
    const double x = k * wrap_phase(raw) / kTwoPi;
    const auto nearest = static_cast<long>(std::ceil(x - 0.5));
    labels.push_back(static_cast<int>(((nearest % k) + k) % k));
  }
  return LabelAssignment(std::move(labels), k);
}

namespace {

class CutModel final : public PhaseModel {
 public:
  CutModel(const Hypergraph& graph, int k, CutConstants constants) : system_(graph, k, constants) {}

  std::size_t dimension() const override { return system_.num_nodes(); }
  double energy(std::span<const double> phases) const override { return system_.energy(phases); }
  void drift(std::span<const double> phases, std::span<double> out) const override {
    system_.drift(phases, out);
  }
  Snapshot snapshot(std::span<const double> phases) const override {
    auto labels = snap_to_labels(phases, system_.k());
    const auto metric = count_cut(system_.graph(), labels);
    return {labels.labels(), metric};
  }
  std::size_t metric_bound() const override { return system_.graph().num_edges(); }
  EnergyFn local_energy(std::span<const double> at) const override {
    return [this, frozen = system_.penalties(at)](std::span<const double> phases) {
      return system_.energy_with_penalties(phases, frozen);
    };
  }
  bool smooth_step(std::span<const double> before, std::span<const double> after) const override {
    return system_.max_penalty_change(before, after) <= kSmoothPenaltyChange;
  }
  std::string family() const override { return "hyper-maxcut"; }

 private:
  CutSystem system_;
};

}  // namespace

std::shared_ptr<const PhaseModel> make_cut_model(const Hypergraph& graph, int k, CutConstants constants) {
  return std::make_shared<CutModel>(graph, k, constants);
}

}  // namespace hoising

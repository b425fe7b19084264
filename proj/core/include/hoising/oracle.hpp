#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hoising/instances.hpp"
#include "hoising/phase.hpp"
#include "hoising/polynomial.hpp"

namespace hoising {

// Independent ground truth. Nothing here goes through the polynomial
// expansion or the cosine machinery it is meant to check.

inline constexpr std::size_t kMaxBruteForceVars = 24;
inline constexpr double kMaxBruteForceLabelings = 16777216.0;  // 2^24

struct NaeOptimum {
  std::size_t max_satisfied = 0;
  SpinAssignment assignment;
};

struct CutOptimum {
  std::size_t max_cut = 0;
  LabelAssignment labels;
};

/// Exhaustive scan over all 2^N assignments; N <= 24.
NaeOptimum brute_force_nae(const CnfInstance& instance);

/// Exhaustive scan over all K^N labelings; K >= 2 and K^N <= 2^24.
CutOptimum brute_force_maxkcut(const Hypergraph& graph, int k);

/// Multilinear expansion of the clause's all-equal indicator recovered from
/// its 2^K truth table by an integer Walsh–Hadamard transform.
InteractionPolynomial truth_table_expand(std::span<const Literal> literals);

/// Central differences (E(φ+εe_i) − E(φ−εe_i)) / 2ε.
std::vector<double> finite_diff_gradient(const EnergyFn& energy, std::span<const double> state, double epsilon);

/// max_i |drift_i + ∇E_i| / max(max_i |∇E_i|, 1e-12) at one state, with ∇E
/// taken by central differences of model.local_energy(state).
double drift_gradient_error(const PhaseModel& model, std::span<const double> state, double epsilon = 1e-6);

/// Worst drift_gradient_error over `samples` uniformly random states.
double gradient_audit(const PhaseModel& model, std::size_t samples, std::uint64_t seed, double epsilon = 1e-6);

}  // namespace hoising

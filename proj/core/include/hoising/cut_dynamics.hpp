#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "hoising/instances.hpp"
#include "hoising/phase.hpp"

namespace hoising {

struct CutConstants {
  double coupling = 15.0;  // A
  double harmonic = 10.0;  // A_s
  double sigma = 1e-3;     // width of the phase-penalty bumps, radians
};

/// Tabulated (A, A_s): (15, 10) for K = 2, 3 and (10, 10) for K = 4. Other K
/// take the nearest tabulated pair.
CutConstants cut_constants_for(int k);
bool cut_constants_tabulated(int k);

/// Gaussian-bump phase penalty f(Δ) for K partitions.
///
/// For k = 1..K−1 a bump of amplitude (2k−1)π − 2kπ/K sits at +2kπ/K and its
/// negation at −2kπ/K, so cos(Δ + f(Δ)) = −1 whenever Δ is a non-zero lattice
/// offset and f(0) ≈ 0. delta is reduced to (−π, π] first; f is odd.
double phase_penalty(double delta, int k, double sigma);

/// Hypergraph Max-K-Cut phase dynamics under K-th harmonic injection:
///
///   E = A Σ_m Π_{i<j ∈ m} (1 + cos(Δφ_ij + f(Δφ_ij)))/2 − (A_s/K) Σ_i cos(Kφ_i)
///
/// The product over an edge is its uncut indicator h_m at lattice states. The
/// drift treats f as locally constant (its derivative is dropped), and uses
/// leave-one-out products instead of dividing h_m by the vanishing factor.
class CutSystem {
 public:
  CutSystem(Hypergraph graph, int k, CutConstants constants);

  const Hypergraph& graph() const { return graph_; }
  int k() const { return k_; }
  const CutConstants& constants() const { return constants_; }
  std::size_t num_nodes() const { return graph_.num_nodes(); }

  /// (1 + cos(Δ + f(Δ)))/2 with Δ = wrap(φ_i − φ_j).
  double pair_factor(double phi_i, double phi_j) const;
  double hyperedge_indicator(std::size_t edge, std::span<const double> phases) const;

  double energy(std::span<const double> phases) const;
  void drift(std::span<const double> phases, std::span<double> out) const;
  std::vector<double> drift(std::span<const double> phases) const;

  /// f(wrap(φ_a − φ_b)) for every intra-edge pair (a < b), edge-major order.
  std::vector<double> penalties(std::span<const double> phases) const;
  /// Energy with f replaced by the given per-pair constants (same order as
  /// penalties()). The drift is the exact negative gradient of this function
  /// at penalties == penalties(phases).
  double energy_with_penalties(std::span<const double> phases, std::span<const double> frozen) const;

  /// Largest |f| change over all pairs between two states. Non-negligible
  /// only while a pair difference moves across a bump shoulder.
  double max_penalty_change(std::span<const double> before, std::span<const double> after) const;

  struct Pair {
    std::size_t a;
    std::size_t b;
  };
  std::span<const Pair> edge_pairs(std::size_t edge) const;

 private:
  Hypergraph graph_;
  int k_;
  CutConstants constants_;
  std::vector<Pair> pairs_;
  std::vector<std::size_t> edge_begin_;
};

/// Hyperedges whose nodes span at least two distinct labels.
std::size_t count_cut(const Hypergraph& graph, const LabelAssignment& labels);

/// label_i = round(K·φ_i/2π) mod K, exact halves rounding down.
LabelAssignment snap_to_labels(std::span<const double> phases, int k);

std::shared_ptr<const PhaseModel> make_cut_model(const Hypergraph& graph, int k, CutConstants constants);

}  // namespace hoising

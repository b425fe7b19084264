#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "hoising/instances.hpp"
#include "hoising/phase.hpp"
#include "hoising/polynomial.hpp"

namespace hoising {

struct NaeConstants {
  double coupling = 10.0 / 8.0;  // C
  double harmonic = 5.0;         // C_s
};

/// Reference constants exist for K = 4 only; every other K reuses them.
NaeConstants nae_constants_for(std::size_t k);
bool nae_constants_tabulated(std::size_t k);

/// Phase dynamics for NAE-K-SAT under second-harmonic injection.
///
/// Each spin monomial s_a s_b s_c s_d ... is replaced by the cosine of the
/// alternating phase sum φ_a − φ_b + φ_c − φ_d + ..., taken over the
/// monomial's variables in increasing index order. At phases in {0, π} the
/// cosine equals the spin product, so
///
///   E = C · (M + Σ_terms J_t cos(alt_t)) − (C_s/2) Σ_i cos(2φ_i)
///
/// reduces to C·2^(K−1)·U − (C_s/2)·N at lattice states, U being the number
/// of unsatisfied clauses. J_t are the objective's coefficients scaled by
/// 2^(K−1), which makes them ±1 sums.
class NaeSystem {
 public:
  NaeSystem(const CnfInstance& instance, NaeConstants constants);

  std::size_t num_vars() const { return num_vars_; }
  const InteractionPolynomial& couplings() const { return couplings_; }
  const NaeConstants& constants() const { return constants_; }

  double energy(std::span<const double> phases) const;
  void drift(std::span<const double> phases, std::span<double> out) const;
  std::vector<double> drift(std::span<const double> phases) const;

 private:
  std::size_t num_vars_;
  NaeConstants constants_;
  InteractionPolynomial couplings_;
  double offset_ = 0.0;  // C · constant term

  // Flattened terms: weight C·J_t and the variable range [begin, end).
  std::vector<double> weights_;
  std::vector<std::size_t> term_begin_;
  std::vector<std::size_t> vars_;
};

/// Nearest point of {0, π}: +1 if closer to 0 (ties at π/2, 3π/2 go to +1).
SpinAssignment snap_to_spins(std::span<const double> phases);

/// Binds a system to its instance for the integrator; the metric is the
/// satisfied-clause count.
std::shared_ptr<const PhaseModel> make_nae_model(const CnfInstance& instance, NaeConstants constants);

}  // namespace hoising

#include "hoising/nae_dynamics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hoising/error.hpp"
#include "hoising/oracle.hpp"
#include "test_support.hpp"

namespace hoising {
namespace {

using std::numbers::pi;
using testing::lattice_phases;
using testing::random_cnf;
using testing::random_state;
using testing::spins_from_bits;

constexpr NaeConstants kReference{};

// Pairwise form for K = 2, 3 written straight from the clause literals:
// E = C Σ_m [Σ_{i<j} c_i c_j cos(φ_i − φ_j) + 1] − (C_s/2) Σ cos 2φ.
double pairwise_energy(const CnfInstance& inst, std::span<const double> phi, NaeConstants c) {
  double e = 0.0;
  for (const auto& clause : inst.clauses()) {
    double sum = 1.0;
    for (std::size_t a = 0; a < clause.size(); ++a) {
      for (std::size_t b = a + 1; b < clause.size(); ++b) {
        sum += clause[a].sign * clause[b].sign * std::cos(phi[clause[a].var] - phi[clause[b].var]);
      }
    }
    e += c.coupling * sum;
  }
  for (const double p : phi) e -= 0.5 * c.harmonic * std::cos(2.0 * p);
  return e;
}

std::vector<double> pairwise_drift(const CnfInstance& inst, std::span<const double> phi, NaeConstants c) {
  std::vector<double> out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) out[i] = -c.harmonic * std::sin(2.0 * phi[i]);
  for (const auto& clause : inst.clauses()) {
    for (const auto& li : clause) {
      for (const auto& lj : clause) {
        if (li.var == lj.var) continue;
        out[li.var] += c.coupling * li.sign * lj.sign * std::sin(phi[li.var] - phi[lj.var]);
      }
    }
  }
  return out;
}

// Quartic form for K = 4 (variables sorted within each clause).
double quartic_energy(const CnfInstance& inst, std::span<const double> phi, NaeConstants c) {
  double e = 0.0;
  for (const auto& clause : inst.clauses()) {
    auto sorted = clause;
    std::sort(sorted.begin(), sorted.end(), [](const Literal& x, const Literal& y) { return x.var < y.var; });
    double sum = 1.0;
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) {
        sum += sorted[a].sign * sorted[b].sign * std::cos(phi[sorted[a].var] - phi[sorted[b].var]);
      }
    }
    const int sign = sorted[0].sign * sorted[1].sign * sorted[2].sign * sorted[3].sign;
    sum += sign * std::cos(phi[sorted[0].var] - phi[sorted[1].var] + phi[sorted[2].var] - phi[sorted[3].var]);
    e += c.coupling * sum;
  }
  for (const double p : phi) e -= 0.5 * c.harmonic * std::cos(2.0 * p);
  return e;
}

TEST(NaeConstants, ReferenceValues) {
  EXPECT_EQ(nae_constants_for(4).coupling, 10.0 / 8.0);
  EXPECT_EQ(nae_constants_for(4).harmonic, 5.0);
  EXPECT_TRUE(nae_constants_tabulated(4));
  EXPECT_FALSE(nae_constants_tabulated(3));
  EXPECT_EQ(nae_constants_for(3).coupling, 10.0 / 8.0);
}

TEST(NaeSystem, RejectsBadConstants) {
  const auto inst = parse_dimacs("p cnf 2 1\n1 2 0\n");
  EXPECT_THROW(NaeSystem(inst, {0.0, 1.0}), InputError);
  EXPECT_THROW(NaeSystem(inst, {1.0, -1.0}), InputError);
  EXPECT_THROW(NaeSystem(inst, {std::nan(""), 1.0}), InputError);
}

TEST(NaeSystem, PlantedLatticeEnergyFigureScale) {
  const auto p = generate_planted_nae(20, 50, 4, 3);
  const NaeSystem sys(p.instance, kReference);
  EXPECT_NEAR(sys.energy(lattice_phases(p.plant)), -50.0, 1e-12);
}

TEST(NaeSystem, SingleUnsatisfiedClauseContributesTen) {
  const auto inst = parse_dimacs("p cnf 4 1\n1 2 3 4 0\n");
  const NaeSystem sys(inst, kReference);
  const double harmonic = -0.5 * kReference.harmonic * 4;
  EXPECT_NEAR(sys.energy(lattice_phases(SpinAssignment({1, 1, 1, 1}))) - harmonic, 10.0, 1e-12);
  EXPECT_NEAR(sys.energy(lattice_phases(SpinAssignment({1, -1, 1, 1}))) - harmonic, 0.0, 1e-12);
}

TEST(NaeSystem, CouplingsAreScaledIntegers) {
  const auto inst = random_cnf(8, 12, 4, 2);
  const NaeSystem sys(inst, kReference);
  EXPECT_EQ(sys.couplings().constant(), Dyadic(12));
  for (const auto& [vars, coeff] : sys.couplings().terms()) {
    EXPECT_EQ(coeff.exponent(), 0) << coeff;
    EXPECT_EQ(vars.size() % 2, 0u);
  }
}

TEST(NaeSystem, GlobalFlipSymmetry) {
  std::mt19937_64 rng(11);
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto inst = random_cnf(10, 15, k, k);
    const NaeSystem sys(inst, kReference);
    EXPECT_EQ(sys.energy(std::vector<double>(10, 0.0)), sys.energy(std::vector<double>(10, pi)));
    for (int t = 0; t < 10; ++t) {
      auto phi = random_state(10, rng);
      auto shifted = phi;
      for (auto& x : shifted) x = wrap_phase(x + pi);
      EXPECT_NEAR(sys.energy(phi), sys.energy(shifted), 1e-11);
    }
  }
}

TEST(NaeSystem, LatticeStatesAreStationary) {
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto inst = random_cnf(9, 14, k, 40 + k);
    const NaeSystem sys(inst, kReference);
    for (std::uint64_t x = 0; x < 512; x += 7) {
      for (const double d : sys.drift(lattice_phases(spins_from_bits(x, 9)))) EXPECT_NEAR(d, 0.0, 1e-12);
    }
  }
}

TEST(NaeSystem, PairClauseHandExample) {
  const auto inst = parse_dimacs("p cnf 2 1\n1 2 0\n");
  // C_s must be positive; its contribution is subtracted below.
  const NaeConstants c{1.0, 1e-300};
  const NaeSystem sys(inst, c);
  const std::vector<double> phi{0.0, pi / 2};
  const auto drift = sys.drift(phi);
  EXPECT_NEAR(drift[0], -1.0, 1e-12);
  EXPECT_NEAR(drift[1], 1.0, 1e-12);
}

TEST(NaeSystem, DriftIsNegativeGradient) {
  std::mt19937_64 rng(2024);
  for (std::size_t k = 2; k <= 5; ++k) {
    const auto inst = random_cnf(10, 20, k, 100 + k);
    const auto model = make_nae_model(inst, kReference);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) worst = std::max(worst, drift_gradient_error(*model, random_state(10, rng)));
    EXPECT_LT(worst, 1e-6) << "k=" << k;
  }
}

TEST(NaeSystem, MatchesPairwiseFormForWidthsTwoAndThree) {
  std::mt19937_64 rng(8);
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto inst = random_cnf(8, 16, k, 70 + k);
    const NaeSystem sys(inst, kReference);
    for (int t = 0; t < 50; ++t) {
      const auto phi = random_state(8, rng);
      EXPECT_NEAR(sys.energy(phi), pairwise_energy(inst, phi, kReference), 1e-10);
      const auto got = sys.drift(phi);
      const auto want = pairwise_drift(inst, phi, kReference);
      for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(got[i], want[i], 1e-10);
    }
  }
}

TEST(NaeSystem, MatchesQuarticFormForWidthFour) {
  std::mt19937_64 rng(9);
  const auto inst = random_cnf(10, 25, 4, 77);
  const NaeSystem sys(inst, kReference);
  for (int t = 0; t < 50; ++t) {
    const auto phi = random_state(10, rng);
    EXPECT_NEAR(sys.energy(phi), quartic_energy(inst, phi, kReference), 1e-10);
  }
}

// cos(φ_a − φ_b + φ_c − ...) equals the spin product at every lattice point.
TEST(NaeSystem, AlternatingCosineIsSpinProductOnLattice) {
  for (std::size_t order : {2u, 4u, 6u}) {
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << order); ++x) {
      const auto s = spins_from_bits(x, order);
      const auto phi = lattice_phases(s);
      double alt = 0.0;
      int product = 1;
      for (std::size_t i = 0; i < order; ++i) {
        alt += (i % 2 == 0 ? 1.0 : -1.0) * phi[i];
        product *= s[i];
      }
      EXPECT_EQ(std::lround(std::cos(alt)), product);
      EXPECT_NEAR(std::cos(alt), product, 1e-15);
    }
  }
}

TEST(NaeSystem, LatticeEnergyIdentity) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t k = 2 + seed % 4;
    const std::size_t n = 7 + seed % 4;
    const std::size_t m = 10 + seed;
    const auto inst = random_cnf(n, m, k, 300 + seed);
    const NaeSystem sys(inst, kReference);
    const double scale = kReference.coupling * static_cast<double>(1u << (k - 1));
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const auto s = spins_from_bits(x, n);
      const double unsat = static_cast<double>(m - count_satisfied(inst, s));
      const double expected = scale * unsat - 0.5 * kReference.harmonic * static_cast<double>(n);
      ASSERT_NEAR(sys.energy(lattice_phases(s)), expected, 1e-12 * std::max(1.0, std::abs(expected)) * 10);
    }
  }
}

TEST(NaeSystem, WideClausesStillGradientConsistent) {
  std::mt19937_64 rng(71);
  for (std::size_t k = 7; k <= 8; ++k) {
    const auto inst = random_cnf(10, 6, k, k);
    const auto model = make_nae_model(inst, kReference);
    for (int t = 0; t < 10; ++t) EXPECT_LT(drift_gradient_error(*model, random_state(10, rng)), 1e-6);
  }
}

TEST(SnapToSpins, Examples) {
  const std::vector<double> a{0.05, 3.10};
  EXPECT_EQ(snap_to_spins(a), SpinAssignment({1, -1}));
  const std::vector<double> ties{pi / 2, 3 * pi / 2, 6.2};
  EXPECT_EQ(snap_to_spins(ties), SpinAssignment({1, 1, 1}));
}

TEST(SnapToSpins, PlantRoundTrip) {
  const auto p = generate_planted_nae(30, 60, 4, 12);
  EXPECT_EQ(snap_to_spins(lattice_phases(p.plant)), p.plant);
  const auto model = make_nae_model(p.instance, kReference);
  const auto snap = model->snapshot(lattice_phases(p.plant));
  EXPECT_EQ(snap.metric, 60u);
  EXPECT_EQ(model->metric_bound(), 60u);
  EXPECT_EQ(model->family(), "nae-sat");
}

}  // namespace
}  // namespace hoising

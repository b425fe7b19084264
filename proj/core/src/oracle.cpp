#include "hoising/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "hoising/error.hpp"

namespace hoising {

NaeOptimum brute_force_nae(const CnfInstance& instance) {
  const std::size_t n = instance.num_vars();
  if (n > kMaxBruteForceVars) {
    throw InputError("exhaustive NAE search is limited to " + std::to_string(kMaxBruteForceVars) +
                     " variables (instance has " + std::to_string(n) + ")");
  }
  // Bit i of x is variable i being TRUE. A clause is NAE-satisfied unless all
  // literal values agree.
  struct Masks {
    std::uint32_t pos = 0;
    std::uint32_t neg = 0;
  };
  std::vector<Masks> masks;
  for (const auto& clause : instance.clauses()) {
    Masks m;
    for (const auto& lit : clause) (lit.sign > 0 ? m.pos : m.neg) |= std::uint32_t{1} << lit.var;
    masks.push_back(m);
  }

  NaeOptimum best;
  std::uint32_t best_x = 0;
  bool have = false;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t xi = 0; xi < total; ++xi) {
    const auto x = static_cast<std::uint32_t>(xi);
    std::size_t sat = 0;
    for (const auto& m : masks) {
      const bool all_true = (x & m.pos) == m.pos && (x & m.neg) == 0;
      const bool all_false = (x & m.pos) == 0 && (x & m.neg) == m.neg;
      if (!all_true && !all_false) ++sat;
    }
    if (!have || sat > best.max_satisfied) {
      have = true;
      best.max_satisfied = sat;
      best_x = x;
      if (sat == masks.size()) break;
    }
  }
  std::vector<int> spins(n);
  for (std::size_t i = 0; i < n; ++i) spins[i] = (best_x >> i) & 1u ? 1 : -1;
  best.assignment = SpinAssignment(std::move(spins));
  return best;
}

CutOptimum brute_force_maxkcut(const Hypergraph& graph, int k) {
  if (k < 2) throw InputError("Max-K-Cut needs K >= 2");
  const std::size_t n = graph.num_nodes();
  if (std::pow(static_cast<double>(k), static_cast<double>(n)) > kMaxBruteForceLabelings) {
    throw InputError("exhaustive Max-K-Cut search is limited to K^N <= 2^24 labelings (K=" +
                     std::to_string(k) + ", N=" + std::to_string(n) + ")");
  }
  const std::size_t m = graph.num_edges();
  std::vector<int> labels(n, 0);
  CutOptimum best{0, LabelAssignment(labels, k)};
  bool have = false;
  // Odometer over all K^N labelings.
  while (true) {
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
    if (!have || cut > best.max_cut) {
      have = true;
      best = {cut, LabelAssignment(labels, k)};
      if (cut == m) break;
    }
    std::size_t i = 0;
    while (i < n && ++labels[i] == k) labels[i++] = 0;
    if (i == n) break;
  }
  return best;
}

InteractionPolynomial truth_table_expand(std::span<const Literal> literals) {
  const std::size_t k = literals.size();
  if (k < 2 || k > kMaxClauseWidth) throw InputError("clause width outside 2..8");
  std::vector<Literal> sorted(literals.begin(), literals.end());
  std::sort(sorted.begin(), sorted.end(), [](const Literal& a, const Literal& b) { return a.var < b.var; });

  // Truth table over spins: bit i of x set means s_i = −1.
  const std::size_t size = std::size_t{1} << k;
  std::vector<std::int64_t> table(size);
  for (std::size_t x = 0; x < size; ++x) {
    bool any_true = false;
    bool any_false = false;
    for (std::size_t i = 0; i < k; ++i) {
      const int spin = (x >> i) & 1u ? -1 : 1;
      (sorted[i].sign * spin > 0 ? any_true : any_false) = true;
    }
    table[x] = (any_true && any_false) ? 0 : 1;
  }
  // Unnormalized Walsh–Hadamard: table[S] becomes Σ_x f(x) Π_{i∈S} s_i(x).
  for (std::size_t len = 1; len < size; len <<= 1) {
    for (std::size_t i = 0; i < size; i += len << 1) {
      for (std::size_t j = i; j < i + len; ++j) {
        const auto a = table[j];
        const auto b = table[j + len];
        table[j] = a + b;
        table[j + len] = a - b;
      }
    }
  }
  InteractionPolynomial poly;
  for (std::size_t s = 0; s < size; ++s) {
    if (table[s] == 0) continue;
    Monomial vars;
    for (std::size_t i = 0; i < k; ++i) {
      if ((s >> i) & 1u) vars.push_back(sorted[i].var);
    }
    poly.add_term(std::move(vars), Dyadic::from_parts(table[s], static_cast<int>(k)));
  }
  return poly;
}

std::vector<double> finite_diff_gradient(const EnergyFn& energy, std::span<const double> state, double epsilon) {
  if (!(epsilon > 0.0)) throw InputError("epsilon must be positive");
  std::vector<double> x(state.begin(), state.end());
  std::vector<double> grad(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double saved = x[i];
    x[i] = saved + epsilon;
    const double up = energy(x);
    x[i] = saved - epsilon;
    const double down = energy(x);
    x[i] = saved;
    grad[i] = (up - down) / (2.0 * epsilon);
  }
  return grad;
}

double drift_gradient_error(const PhaseModel& model, std::span<const double> state, double epsilon) {
  const auto grad = finite_diff_gradient(model.local_energy(state), state, epsilon);
  std::vector<double> drift(state.size());
  model.drift(state, drift);
  double scale = 1e-12;
  double worst = 0.0;
  for (std::size_t i = 0; i < grad.size(); ++i) {
    scale = std::max(scale, std::abs(grad[i]));
    worst = std::max(worst, std::abs(drift[i] + grad[i]));
  }
  return worst / scale;
}

double gradient_audit(const PhaseModel& model, std::size_t samples, std::uint64_t seed, double epsilon) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
  std::vector<double> state(model.dimension());
  double worst = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (auto& phi : state) phi = uniform(rng);
    worst = std::max(worst, drift_gradient_error(model, state, epsilon));
  }
  return worst;
}

}  // namespace hoising

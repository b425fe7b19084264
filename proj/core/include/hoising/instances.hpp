#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace hoising {

// Variable and node indices are 0-based everywhere inside the library. The
// text formats are 1-based and the parsers/serializers translate.

struct Literal {
  std::size_t var = 0;
  int sign = +1;  // +1 normal form, -1 negated

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

/// NAE-K-SAT instance with a uniform clause width K.
class CnfInstance {
 public:
  /// Validates every invariant: K >= 2, uniform width, indices in range, no
  /// variable repeated within a clause. Throws InputError otherwise.
  CnfInstance(std::size_t num_vars, std::vector<Clause> clauses);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  std::size_t k() const { return k_; }
  const std::vector<Clause>& clauses() const { return clauses_; }

  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;

 private:
  std::size_t num_vars_;
  std::vector<Clause> clauses_;
  std::size_t k_ = 0;
};

/// Hyperedges are stored as sorted node-index sets.
class Hypergraph {
 public:
  Hypergraph(std::size_t num_nodes, std::vector<std::vector<std::size_t>> edges);

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::vector<std::size_t>>& edges() const { return edges_; }
  std::size_t max_edge_size() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t num_nodes_;
  std::vector<std::vector<std::size_t>> edges_;
};

/// Ising spins, entries in {-1, +1}.
class SpinAssignment {
 public:
  SpinAssignment() = default;
  explicit SpinAssignment(std::vector<int> values);

  std::size_t size() const { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const { return values_; }

  friend bool operator==(const SpinAssignment&, const SpinAssignment&) = default;

 private:
  std::vector<int> values_;
};

/// Partition labels in 0..K-1; label k is the extended-spin state e^{i 2πk/K}.
class LabelAssignment {
 public:
  LabelAssignment() = default;
  LabelAssignment(std::vector<int> labels, int k);

  std::size_t size() const { return labels_.size(); }
  int k() const { return k_; }
  int operator[](std::size_t i) const { return labels_[i]; }
  const std::vector<int>& labels() const { return labels_; }

  friend bool operator==(const LabelAssignment&, const LabelAssignment&) = default;

 private:
  std::vector<int> labels_;
  int k_ = 2;
};

// DIMACS CNF: `c` comments, header `p cnf N M`, clauses as signed integers
// terminated by 0. Clauses may span lines.
CnfInstance parse_dimacs(std::istream& in);
CnfInstance parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfInstance& instance, const std::vector<std::string>& comments = {});

// Hypergraph format: `c` comments, header `p hyp N M`, one hyperedge per
// line as node indices terminated by 0.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(std::string_view text);
std::string write_hypergraph(const Hypergraph& graph, const std::vector<std::string>& comments = {});

struct PlantedInstance {
  CnfInstance instance;
  SpinAssignment plant;
};

/// Random NAE-K-SAT instance satisfied by a hidden assignment. Each clause is
/// drawn with k distinct variables and random polarities and rejected if its
/// literal values under the plant are all equal.
PlantedInstance generate_planted_nae(std::size_t n, std::size_t m, std::size_t k, std::uint64_t seed);

/// m hyperedges with sizes uniform in [min_size, max_size] over n nodes.
Hypergraph generate_random_hypergraph(std::size_t n, std::size_t m, std::size_t min_size,
                                      std::size_t max_size, std::uint64_t seed);

}  // namespace hoising

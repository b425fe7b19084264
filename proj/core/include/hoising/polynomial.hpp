#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hoising/dyadic.hpp"
#include "hoising/instances.hpp"

namespace hoising {

/// Strictly increasing tuple of 0-based variable indices.
using Monomial = std::vector<std::size_t>;

/// Multilinear polynomial over Ising spins with exact dyadic coefficients:
/// constant + Σ coeff · Π_{i ∈ vars} s_i. Terms sharing a tuple are merged and
/// zero coefficients are dropped.
class InteractionPolynomial {
 public:
  using TermMap = std::map<Monomial, Dyadic>;

  /// Adds coeff to the monomial's coefficient. The tuple is sorted and must be
  /// duplicate-free; an empty tuple adds to the constant.
  void add_term(Monomial vars, const Dyadic& coeff);
  void add(const InteractionPolynomial& other);

  const TermMap& terms() const { return terms_; }
  const Dyadic& constant() const { return constant_; }
  void set_constant(const Dyadic& c) { constant_ = c; }

  /// Every coefficient (and the constant) multiplied by 2^power.
  InteractionPolynomial scaled_pow2(int power) const;

  std::size_t max_order() const;
  /// One past the largest variable index referenced (0 for a constant).
  std::size_t min_num_vars() const;
  bool is_even_order() const;

  /// Sorted `coeff : i j k` lines (1-based indices), constant first as `coeff :`.
  std::string dump() const;

  friend bool operator==(const InteractionPolynomial&, const InteractionPolynomial&) = default;

 private:
  TermMap terms_;
  Dyadic constant_;
};

/// Largest clause width handled by the expansion; term count grows as 2^(K-1).
/// Widths 7 and 8 reuse the parity construction untabulated (an extension).
inline constexpr std::size_t kMaxClauseWidth = 8;

/// Unsatisfied-indicator of one NAE clause: 1 iff all literal values
/// t_i = sign_i · s_i are equal. Uses h = 2^-(K-1) Σ_{r even} e_r(t).
InteractionPolynomial expand_clause(std::span<const Literal> literals);

/// Σ over clauses of expand_clause, constants retained. Evaluates to the exact
/// number of NAE-unsatisfied clauses.
InteractionPolynomial build_objective(const CnfInstance& instance);

Dyadic evaluate_exact(const InteractionPolynomial& poly, const SpinAssignment& spins);
double evaluate(const InteractionPolynomial& poly, const SpinAssignment& spins);

/// Clauses whose literal values are neither all true nor all false
/// (x_i = 1 ⇔ s_i = +1).
std::size_t count_satisfied(const CnfInstance& instance, const SpinAssignment& spins);

/// Un-normalized objective with integer couplings: 2^(K-1)·U − M where U is
/// the unsatisfied count. Computed from the polynomial, not from U.
Dyadic integer_coupling_objective(const CnfInstance& instance, const SpinAssignment& spins);

}  // namespace hoising

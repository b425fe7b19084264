#include "hoising/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "hoising/error.hpp"

namespace hoising {

void InteractionPolynomial::add_term(Monomial vars, const Dyadic& coeff) {
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
    throw InputError("monomial repeats a variable");
  }
  if (vars.empty()) {
    constant_ += coeff;
    return;
  }
  auto [it, inserted] = terms_.try_emplace(std::move(vars), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (coeff.is_zero()) {
    terms_.erase(it);
  }
}

void InteractionPolynomial::add(const InteractionPolynomial& other) {
  constant_ += other.constant_;
  for (const auto& [vars, coeff] : other.terms_) add_term(vars, coeff);
}

InteractionPolynomial InteractionPolynomial::scaled_pow2(int power) const {
  InteractionPolynomial out;
  out.constant_ = constant_.scaled_pow2(power);
  for (const auto& [vars, coeff] : terms_) out.terms_.emplace(vars, coeff.scaled_pow2(power));
  return out;
}

std::size_t InteractionPolynomial::max_order() const {
  std::size_t order = 0;
  for (const auto& [vars, coeff] : terms_) order = std::max(order, vars.size());
  return order;
}

std::size_t InteractionPolynomial::min_num_vars() const {
  std::size_t n = 0;
  for (const auto& [vars, coeff] : terms_) n = std::max(n, vars.back() + 1);
  return n;
}

bool InteractionPolynomial::is_even_order() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& term) { return term.first.size() % 2 == 0; });
}

std::string InteractionPolynomial::dump() const {
  std::ostringstream out;
  out << constant_ << " :\n";
  for (const auto& [vars, coeff] : terms_) {
    out << coeff << " :";
    for (const auto v : vars) out << ' ' << (v + 1);
    out << '\n';
  }
  return out.str();
}

InteractionPolynomial expand_clause(std::span<const Literal> literals) {
  const std::size_t k = literals.size();
  if (k < 2) throw InputError("clause must have at least 2 literals");
  if (k > kMaxClauseWidth) {
    throw InputError("clause width " + std::to_string(k) + " exceeds supported maximum " +
                     std::to_string(kMaxClauseWidth));
  }
  std::vector<Literal> sorted(literals.begin(), literals.end());
  std::sort(sorted.begin(), sorted.end(), [](const Literal& a, const Literal& b) { return a.var < b.var; });
  for (std::size_t i = 1; i < k; ++i) {
    if (sorted[i].var == sorted[i - 1].var) throw InputError("clause repeats a variable");
  }

  // Each even-cardinality subset S contributes 2^-(K-1) Π_{i∈S} sign_i s_i.
  InteractionPolynomial poly;
  const int exponent = static_cast<int>(k) - 1;
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    Monomial vars;
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) {
        vars.push_back(sorted[i].var);
        sign *= sorted[i].sign;
      }
    }
    poly.add_term(std::move(vars), Dyadic::from_parts(sign, exponent));
  }
  return poly;
}

InteractionPolynomial build_objective(const CnfInstance& instance) {
  if (instance.num_clauses() > 0 && (instance.k() < 2 || instance.k() > kMaxClauseWidth)) {
    throw InputError("clause width K=" + std::to_string(instance.k()) + " outside supported range 2.." +
                     std::to_string(kMaxClauseWidth));
  }
  InteractionPolynomial objective;
  for (const auto& clause : instance.clauses()) objective.add(expand_clause(clause));
  return objective;
}

Dyadic evaluate_exact(const InteractionPolynomial& poly, const SpinAssignment& spins) {
  if (poly.min_num_vars() > spins.size()) {
    throw InputError("spin assignment does not cover every polynomial variable");
  }
  Dyadic total = poly.constant();
  for (const auto& [vars, coeff] : poly.terms()) {
    int product = 1;
    for (const auto v : vars) product *= spins[v];
    total += product > 0 ? coeff : -coeff;
  }
  return total;
}

double evaluate(const InteractionPolynomial& poly, const SpinAssignment& spins) {
  return evaluate_exact(poly, spins).to_double();
}

std::size_t count_satisfied(const CnfInstance& instance, const SpinAssignment& spins) {
  if (spins.size() < instance.num_vars()) throw InputError("spin assignment too short");
  std::size_t satisfied = 0;
  for (const auto& clause : instance.clauses()) {
    bool any_true = false;
    bool any_false = false;
    for (const auto& lit : clause) {
      (lit.sign * spins[lit.var] > 0 ? any_true : any_false) = true;
    }
    if (any_true && any_false) ++satisfied;
  }
  return satisfied;
}

Dyadic integer_coupling_objective(const CnfInstance& instance, const SpinAssignment& spins) {
  const auto scaled = build_objective(instance).scaled_pow2(static_cast<int>(instance.k()) - 1);
  // The scaled constant is exactly M.
  return evaluate_exact(scaled, spins) - scaled.constant();
}

}  // namespace hoising

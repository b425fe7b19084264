#include "hoising/instances.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "hoising/error.hpp"

namespace hoising {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::int64_t to_int(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

struct Header {
  std::size_t n = 0;
  std::size_t m = 0;
};

// Shared line scanner for the two DIMACS-style formats. Calls on_group for
// every 0-terminated integer group that follows the header.
template <typename OnGroup>
Header scan_dimacs_like(std::istream& in, std::string_view kind, OnGroup&& on_group) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  Header header;
  std::vector<std::int64_t> group;
  std::size_t groups = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == 'c') continue;
    if (body.front() == '%') break;  // SATLIB end marker
    if (body.front() == 'p') {
      if (have_header) throw InputError("line " + std::to_string(line_no) + ": duplicate header");
      const auto tokens = split_ws(body);
      if (tokens.size() != 4 || tokens[0] != "p" || tokens[1] != kind) {
        throw InputError("line " + std::to_string(line_no) + ": malformed header, expected 'p " +
                         std::string(kind) + " N M'");
      }
      const auto n = to_int(tokens[2], line_no);
      const auto m = to_int(tokens[3], line_no);
      if (n <= 0 || m < 0) {
        throw InputError("line " + std::to_string(line_no) + ": malformed header counts");
      }
      header = {static_cast<std::size_t>(n), static_cast<std::size_t>(m)};
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw InputError("line " + std::to_string(line_no) + ": data before 'p " + std::string(kind) +
                       "' header");
    }
    for (const auto token : split_ws(body)) {
      const auto value = to_int(token, line_no);
      if (value == 0) {
        on_group(group, header, line_no);
        group.clear();
        ++groups;
      } else {
        group.push_back(value);
      }
    }
  }
  if (!have_header) throw InputError("missing 'p " + std::string(kind) + " N M' header");
  if (!group.empty()) throw InputError("last entry is not terminated by 0");
  if (groups != header.m) {
    throw InputError("header declares " + std::to_string(header.m) + " entries, found " +
                     std::to_string(groups));
  }
  return header;
}

}  // namespace

CnfInstance::CnfInstance(std::size_t num_vars, std::vector<Clause> clauses)
    : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ == 0) throw InputError("instance needs at least one variable");
  for (std::size_t c = 0; c < clauses_.size(); ++c) {
    const auto& clause = clauses_[c];
    if (clause.size() < 2) {
      throw InputError("clause " + std::to_string(c + 1) + " has fewer than 2 literals");
    }
    if (c == 0) k_ = clause.size();
    if (clause.size() != k_) {
      throw InputError("clause " + std::to_string(c + 1) + " has " + std::to_string(clause.size()) +
                       " literals, expected uniform K=" + std::to_string(k_));
    }
    std::set<std::size_t> seen;
    for (const auto& lit : clause) {
      if (lit.var >= num_vars_) {
        throw InputError("clause " + std::to_string(c + 1) + ": variable " +
                         std::to_string(lit.var + 1) + " out of range 1.." + std::to_string(num_vars_));
      }
      if (lit.sign != 1 && lit.sign != -1) throw InputError("literal sign must be +1 or -1");
      if (!seen.insert(lit.var).second) {
        throw InputError("clause " + std::to_string(c + 1) + ": repeated variable " +
                         std::to_string(lit.var + 1));
      }
    }
  }
}

Hypergraph::Hypergraph(std::size_t num_nodes, std::vector<std::vector<std::size_t>> edges)
    : num_nodes_(num_nodes), edges_(std::move(edges)) {
  if (num_nodes_ == 0) throw InputError("hypergraph needs at least one node");
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& edge = edges_[e];
    if (edge.size() < 2) {
      throw InputError("hyperedge " + std::to_string(e + 1) + " is too small (size < 2)");
    }
    std::sort(edge.begin(), edge.end());
    if (std::adjacent_find(edge.begin(), edge.end()) != edge.end()) {
      throw InputError("hyperedge " + std::to_string(e + 1) + " contains a duplicate node");
    }
    if (edge.back() >= num_nodes_) {
      throw InputError("hyperedge " + std::to_string(e + 1) + ": node " +
                       std::to_string(edge.back() + 1) + " out of range 1.." +
                       std::to_string(num_nodes_));
    }
  }
}

std::size_t Hypergraph::max_edge_size() const {
  std::size_t best = 0;
  for (const auto& e : edges_) best = std::max(best, e.size());
  return best;
}

SpinAssignment::SpinAssignment(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_) {
    if (v != 1 && v != -1) throw InputError("spin values must be -1 or +1");
  }
}

LabelAssignment::LabelAssignment(std::vector<int> labels, int k) : labels_(std::move(labels)), k_(k) {
  if (k_ < 1) throw InputError("partition count must be positive");
  for (int l : labels_) {
    if (l < 0 || l >= k_) throw InputError("label out of range 0..K-1");
  }
}

CnfInstance parse_dimacs(std::istream& in) {
  std::vector<Clause> clauses;
  const auto header = scan_dimacs_like(
      in, "cnf", [&](const std::vector<std::int64_t>& group, const Header& h, std::size_t line_no) {
        Clause clause;
        for (const auto value : group) {
          const auto var = static_cast<std::size_t>(value < 0 ? -value : value);
          if (var > h.n) {
            throw InputError("line " + std::to_string(line_no) + ": variable " + std::to_string(var) +
                             " out of range 1.." + std::to_string(h.n));
          }
          clause.push_back({var - 1, value < 0 ? -1 : +1});
        }
        clauses.push_back(std::move(clause));
      });
  return CnfInstance(header.n, std::move(clauses));
}

CnfInstance parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in);
}

std::string write_dimacs(const CnfInstance& instance, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p cnf " << instance.num_vars() << ' ' << instance.num_clauses() << '\n';
  for (const auto& clause : instance.clauses()) {
    for (const auto& lit : clause) {
      out << (lit.sign < 0 ? "-" : "") << (lit.var + 1) << ' ';
    }
    out << "0\n";
  }
  return out.str();
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::vector<std::vector<std::size_t>> edges;
  const auto header = scan_dimacs_like(
      in, "hyp", [&](const std::vector<std::int64_t>& group, const Header& h, std::size_t line_no) {
        std::vector<std::size_t> edge;
        for (const auto value : group) {
          if (value < 1 || static_cast<std::size_t>(value) > h.n) {
            throw InputError("line " + std::to_string(line_no) + ": node " + std::to_string(value) +
                             " out of range 1.." + std::to_string(h.n));
          }
          edge.push_back(static_cast<std::size_t>(value) - 1);
        }
        edges.push_back(std::move(edge));
      });
  return Hypergraph(header.n, std::move(edges));
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_hypergraph(in);
}

std::string write_hypergraph(const Hypergraph& graph, const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << '\n';
  out << "p hyp " << graph.num_nodes() << ' ' << graph.num_edges() << '\n';
  for (const auto& edge : graph.edges()) {
    for (const auto node : edge) out << (node + 1) << ' ';
    out << "0\n";
  }
  return out.str();
}

namespace {

// k distinct values from 0..n-1 in draw order (partial Fisher-Yates).
std::vector<std::size_t> sample_distinct(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace

PlantedInstance generate_planted_nae(std::size_t n, std::size_t m, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw InputError("clause width k must be at least 2");
  if (n < k) throw InputError("need at least k variables");
  if (m < 1) throw InputError("need at least one clause");

  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);

  std::vector<int> plant(n);
  for (auto& s : plant) s = coin(rng) ? 1 : -1;

  std::vector<Clause> clauses;
  clauses.reserve(m);
  while (clauses.size() < m) {
    auto vars = sample_distinct(n, k, rng);
    std::sort(vars.begin(), vars.end());
    Clause clause;
    bool any_true = false;
    bool any_false = false;
    for (const auto v : vars) {
      const int sign = coin(rng) ? 1 : -1;
      clause.push_back({v, sign});
      (sign * plant[v] > 0 ? any_true : any_false) = true;
    }
    if (any_true && any_false) clauses.push_back(std::move(clause));
  }
  return {CnfInstance(n, std::move(clauses)), SpinAssignment(std::move(plant))};
}

Hypergraph generate_random_hypergraph(std::size_t n, std::size_t m, std::size_t min_size,
                                      std::size_t max_size, std::uint64_t seed) {
  if (min_size < 2 || min_size > max_size || max_size > n) {
    throw InputError("hyperedge sizes must satisfy 2 <= min <= max <= nodes");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(min_size, max_size);
  std::vector<std::vector<std::size_t>> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    edges.push_back(sample_distinct(n, size_dist(rng), rng));
  }
  return Hypergraph(n, std::move(edges));
}

}  // namespace hoising

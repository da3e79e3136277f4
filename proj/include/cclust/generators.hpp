#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cclust/core.hpp"

namespace cclust {

/// Thrown when a source instance violates a generator's restrictions.
class RestrictionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Literals are ±(variable + 1), as in DIMACS.
struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

Cnf read_dimacs(std::istream& in);
void write_dimacs(std::ostream& out, const Cnf& f);

/// Brute force over all assignments; throws std::length_error above 24 variables.
bool satisfiable(const Cnf& f);
/// Exactly one true literal per clause (each occurrence counts).
bool one_in_three_satisfiable(const Cnf& f);

/// Drops repeated literals and tautologies, then deletes clauses holding a
/// pure literal until none is left. Satisfiability is preserved.
Cnf normalize_3sat(const Cnf& f);

/// Variable-clause incidence graph with five colors; k = number of clauses.
/// Normalizes first. Throws RestrictionError for clauses over three literals
/// or variables with more than three occurrences.
Instance gen_from_3sat(const Cnf& f);

/// Five triangles per variable; 7n vertices, 15n edges, k = 7n. Requires
/// n clauses of three positive literals with every variable three times.
Instance gen_from_1in3(const Cnf& f);

/// Multicolored Clique source: a graph with a part index per vertex.
struct McSource {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> part;  // 0..s-1
  int parts = 0;
};

// Instance-format graph (colors and k ignored) plus `parts <p_0> ... <p_{n-1}>`.
McSource read_mc_source(std::istream& in);
void write_mc_source(std::ostream& out, const McSource& g);

bool has_multicolored_clique(const McSource& g);

struct MccInstance {
  Instance instance;
  EdgeSet matching;  // the c^m edges
};

/// Throws RestrictionError if a part is not independent.
MccInstance gen_from_multicolored_clique(const McSource& g);

/// Independent Set with maximum degree 3, as an order-3 hypergraph with
/// three colors and vertex degree at most 2. Isolated vertices are dropped
/// (each lowers the target by one, floored at 0).
Instance gen_from_independent_set(int num_vertices, const std::vector<std::pair<int, int>>& edges, int s);

/// Brute-force independence number; throws std::length_error above 24 vertices.
int independence_number(int num_vertices, const std::vector<std::pair<int, int>>& edges);

struct RandomSpec {
  int n = 10;
  int m = 14;
  int colors = 3;
  int d = 2;  // edges have exactly 2 vertices when d == 2, else 2..d
  std::uint64_t seed = 1;
  std::optional<int> planted;  // embed this many edges stable under a hidden coloring
};

/// The first `planted` edges (before shuffling) are stable together.
/// `plant` receives their final indices.
Instance gen_random(const RandomSpec& spec, EdgeSet* plant = nullptr);

}  // namespace cclust

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "cclust/core.hpp"
#include "cclust/graph.hpp"

namespace cclust {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& q);

/// ½ Σ_v (deg(v) - max_c deg_c(v)). Graphs only.
Rational rho(const ColoredHypergraph& g);

/// ½ Σ_v min(deg(v) - max_c deg_c(v), ½ deg(v)). Graphs only.
Rational rho_prime(const ColoredHypergraph& g);

/// (1/d) Σ_v min(deg(v) - max_c deg_c(v), ½ deg(v)) for order d.
Rational rho_hyper(const ColoredHypergraph& g);

struct MatchingInfo {
  EdgeSet edges;
  bool induced = false;
  int size() const { return static_cast<int>(edges.size()); }
};

/// Maximum matching (graphs only; throws PreconditionError otherwise).
MatchingInfo max_matching(const ColoredHypergraph& g);

/// True iff the edges are pairwise disjoint and no edge of g meets two of them.
bool is_induced_matching(const ColoredHypergraph& g, const EdgeSet& m);

enum class InducedMode { ExactSmall, Greedy, Provided };

/// An induced matching: maximum (ExactSmall), maximal in index order
/// (Greedy), or the validated `provided` one.
MatchingInfo induced_matching(const ColoredHypergraph& g, InducedMode mode,
                              const EdgeSet& provided = {});

/// LP optimum of vertex cover on the graph, ½ · (max matching of its double cover).
Rational lp_value(const SimpleGraph& cg);

/// Dual LP solution on the conflict graph, keyed by conflict edge (e < f).
struct DualCertificate {
  std::map<std::pair<EdgeId, EdgeId>, Rational> y;
  Rational value() const;
};

/// Built vertex by vertex from complete multipartite pieces. Graphs only.
DualCertificate dual_certificate(const ColoredHypergraph& g);

/// Per conflict node, the load Σ y over incident conflict edges.
std::vector<Rational> certificate_loads(const ColoredHypergraph& g, const DualCertificate& cert);

/// Value of the per-vertex dual piece for part sizes n_1 >= n_2 >= ... .
Rational multipartite_dual_value(std::vector<int> parts);

struct GapReport {
  int k = 0, r = 0;
  int matching = 0;          // M(G); greedy maximal for hypergraphs
  int induced = 0;           // I(G) for the chosen induced matching
  std::optional<Rational> rho, rho_prime;  // graphs
  Rational rho_hyper;
  Rational alpha;            // LP value on the conflict graph
  bool yes_by_matching = false;
  bool no_by_rho = false, no_by_rho_prime = false, no_by_rho_hyper = false, no_by_alpha = false;

  bool says_no() const { return no_by_rho || no_by_rho_prime || no_by_rho_hyper || no_by_alpha; }
};

GapReport gap_parameters(const Instance& inst, const MatchingInfo& induced);

/// One `name value gap` line per bound.
std::string format_report(const GapReport& report);

}  // namespace cclust

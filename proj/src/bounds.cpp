#include "cclust/bounds.hpp"

#include <algorithm>
#include <sstream>

#include "cclust/conflict.hpp"
#include "cclust/matching.hpp"
#include "cclust/vertex_cover.hpp"

namespace cclust {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

namespace {

void require_graph(const ColoredHypergraph& g, const char* what) {
  if (!g.is_graph()) throw PreconditionError(std::string(what) + ": input is not a graph");
}

// Σ_v of the per-vertex term, with or without the ½ deg(v) cap.
Rational degree_sum(const ColoredHypergraph& g, bool capped) {
  const auto p = degree_profile(g);
  Rational sum = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    Rational term = p.degree[v] - p.max_color_degree(v);
    if (capped) term = std::min(term, Rational(p.degree[v], 2));
    sum += term;
  }
  return sum;
}

}  // namespace

Rational rho(const ColoredHypergraph& g) {
  require_graph(g, "rho");
  return degree_sum(g, false) / 2;
}

Rational rho_prime(const ColoredHypergraph& g) {
  require_graph(g, "rho_prime");
  return degree_sum(g, true) / 2;
}

Rational rho_hyper(const ColoredHypergraph& g) {
  const int d = std::max(g.order(), 1);
  return degree_sum(g, true) / d;
}

MatchingInfo max_matching(const ColoredHypergraph& g) {
  require_graph(g, "max_matching");
  return {maximum_matching(g), false};
}

bool is_induced_matching(const ColoredHypergraph& g, const EdgeSet& m) {
  std::vector<int> owner(g.num_vertices(), -1);
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0 || m[i] >= g.num_edges()) return false;
    for (VertexId v : g.edge(m[i]).vertices) {
      if (owner[v] != -1) return false;
      owner[v] = static_cast<int>(i);
    }
  }
  for (const Edge& e : g.edges()) {
    int seen = -1;
    for (VertexId v : e.vertices) {
      if (owner[v] == -1) continue;
      if (seen != -1 && seen != owner[v]) return false;
      seen = owner[v];
    }
  }
  return true;
}

namespace {

// e and f cannot both belong to an induced matching.
SimpleGraph incompatibility(const ColoredHypergraph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    // Edges meeting e, then all pairs among them together with e.
    std::vector<EdgeId> near;
    for (VertexId v : g.edge(e).vertices) {
      for (EdgeId f : g.incident(v)) near.push_back(f);
    }
    std::sort(near.begin(), near.end());
    near.erase(std::unique(near.begin(), near.end()), near.end());
    for (size_t i = 0; i < near.size(); ++i) {
      for (size_t j = i + 1; j < near.size(); ++j) pairs.emplace_back(near[i], near[j]);
    }
  }
  return SimpleGraph::from_edges(g.num_edges(), pairs);
}

}  // namespace

MatchingInfo induced_matching(const ColoredHypergraph& g, InducedMode mode, const EdgeSet& provided) {
  MatchingInfo info;
  info.induced = true;
  switch (mode) {
    case InducedMode::Provided: {
      EdgeSet m = provided;
      std::sort(m.begin(), m.end());
      if (!is_induced_matching(g, m)) throw PreconditionError("provided matching is not induced");
      info.edges = m;
      break;
    }
    case InducedMode::Greedy: {
      const auto bad = incompatibility(g);
      std::vector<char> blocked(g.num_edges(), 0);
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (blocked[e]) continue;
        info.edges.push_back(e);
        for (int f : bad.neighbors(e)) blocked[f] = 1;
      }
      break;
    }
    case InducedMode::ExactSmall: {
      const auto bad = incompatibility(g);
      const auto cover = min_vertex_cover(bad);
      std::vector<char> in(g.num_edges(), 0);
      for (int e : cover) in[e] = 1;
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (!in[e]) info.edges.push_back(e);
      }
      break;
    }
  }
  return info;
}

Rational lp_value(const SimpleGraph& cg) { return Rational(double_cover_matching_size(cg), 2); }

Rational DualCertificate::value() const {
  Rational sum = 0;
  for (const auto& [edge, val] : y) sum += val;
  return sum;
}

namespace {

using Part = std::vector<EdgeId>;

// Dual solution z on the complete multipartite graph with the given parts.
// Parts are reordered by (size desc, original index asc) at every step.
void multipartite_dual(std::vector<Part> parts, std::map<std::pair<EdgeId, EdgeId>, Rational>& z) {
  auto put = [&](EdgeId a, EdgeId b, Rational val) {
    if (a > b) std::swap(a, b);
    z[{a, b}] += val;
  };
  std::vector<int> order(parts.size());
  for (;;) {
    order.resize(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return parts[a].size() > parts[b].size(); });
    size_t total = 0;
    for (const auto& p : parts) total += p.size();
    if (total < 2 || order.empty()) return;
    const Part& first = parts[order[0]];
    const size_t rest = total - first.size();
    if (first.size() >= rest) {
      // Match every node outside the largest part to a distinct node inside it.
      size_t next = 0;
      for (size_t i = 1; i < order.size(); ++i) {
        for (EdgeId e : parts[order[i]]) put(first[next++], e, 1);
      }
      return;
    }
    if (total <= 3) {
      // Triangle with one node per part: all halves.
      std::vector<EdgeId> nodes;
      for (const auto& p : parts) nodes.insert(nodes.end(), p.begin(), p.end());
      for (size_t i = 0; i < nodes.size(); ++i) {
        for (size_t j = i + 1; j < nodes.size(); ++j) put(nodes[i], nodes[j], Rational(1, 2));
      }
      return;
    }
    // Pair the two largest parts with y = 1 and recurse on the rest.
    Part& a = parts[order[0]];
    Part& b = parts[order[1]];
    put(a.front(), b.front(), 1);
    a.erase(a.begin());
    b.erase(b.begin());
  }
}

}  // namespace

Rational multipartite_dual_value(std::vector<int> sizes) {
  std::vector<Part> parts;
  EdgeId next = 0;
  for (int s : sizes) {
    Part p;
    for (int i = 0; i < s; ++i) p.push_back(next++);
    parts.push_back(p);
  }
  std::map<std::pair<EdgeId, EdgeId>, Rational> z;
  multipartite_dual(parts, z);
  Rational sum = 0;
  for (const auto& [e, val] : z) sum += val;
  return sum;
}

DualCertificate dual_certificate(const ColoredHypergraph& g) {
  require_graph(g, "dual_certificate");
  DualCertificate cert;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    std::map<ColorId, Part> by_color;
    for (EdgeId e : g.incident(v)) by_color[g.color(e)].push_back(e);
    std::vector<Part> parts;
    for (auto& [c, p] : by_color) parts.push_back(std::move(p));
    std::map<std::pair<EdgeId, EdgeId>, Rational> z;
    multipartite_dual(std::move(parts), z);
    for (const auto& [edge, val] : z) cert.y[edge] += val / 2;
  }
  return cert;
}

std::vector<Rational> certificate_loads(const ColoredHypergraph& g, const DualCertificate& cert) {
  std::vector<Rational> load(g.num_edges(), 0);
  for (const auto& [edge, val] : cert.y) {
    load[edge.first] += val;
    load[edge.second] += val;
  }
  return load;
}

GapReport gap_parameters(const Instance& inst, const MatchingInfo& induced) {
  const auto& g = inst.graph;
  GapReport rep;
  rep.k = inst.k;
  rep.r = inst.r();
  rep.matching = g.is_graph() ? static_cast<int>(maximum_matching(g).size())
                              : static_cast<int>(greedy_maximal_matching(g).size());
  rep.induced = induced.size();
  if (g.is_graph()) {
    rep.rho = rho(g);
    rep.rho_prime = rho_prime(g);
    rep.no_by_rho = Rational(rep.r) < *rep.rho;
    rep.no_by_rho_prime = Rational(rep.r) < *rep.rho_prime;
  }
  rep.rho_hyper = rho_hyper(g);
  rep.no_by_rho_hyper = Rational(rep.r) < rep.rho_hyper;
  rep.alpha = lp_value(build_conflict(g));
  rep.no_by_alpha = Rational(rep.r) < rep.alpha;
  rep.yes_by_matching = rep.matching >= inst.k;
  return rep;
}

std::string format_report(const GapReport& rep) {
  std::ostringstream out;
  out << "k " << rep.k << " -\n";
  out << "r " << rep.r << " -\n";
  out << "matching " << rep.matching << ' ' << rep.k - rep.matching << '\n';
  out << "induced_matching " << rep.induced << ' ' << rep.k - rep.induced << '\n';
  auto gap = [&](const char* name, const Rational& q) {
    out << name << ' ' << to_string(q) << ' ' << to_string(Rational(rep.r) - q) << '\n';
  };
  if (rep.rho) gap("rho", *rep.rho);
  if (rep.rho_prime) gap("rho_prime", *rep.rho_prime);
  gap("rho_hyper", rep.rho_hyper);
  gap("lp_alpha", rep.alpha);
  out << "verdict " << (rep.yes_by_matching ? "YES" : rep.says_no() ? "NO" : "open") << " -\n";
  return out.str();
}

}  // namespace cclust

#include "cclust/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "cclust/matching.hpp"

namespace cclust {

int ceil_sqrt(int k) {
  int s = static_cast<int>(std::sqrt(static_cast<double>(std::max(k, 0))));
  while (s * s < k) ++s;
  while (s > 0 && (s - 1) * (s - 1) >= k) --s;
  return s;
}

std::optional<EdgeSet> rule_matching(const Instance& inst, std::vector<VertexId>* cover) {
  const auto& g = inst.graph;
  const EdgeSet maximal = greedy_maximal_matching(g);
  if (cover) {
    cover->clear();
    for (EdgeId e : maximal) {
      for (VertexId v : g.edge(e).vertices) cover->push_back(v);
    }
    std::sort(cover->begin(), cover->end());
  }
  EdgeSet m = maximal;
  if (static_cast<int>(m.size()) < inst.k && g.is_graph()) m = maximum_matching(g);
  if (static_cast<int>(m.size()) < inst.k) return std::nullopt;
  m.resize(std::max(inst.k, 0));
  return m;
}

std::optional<EdgeSet> rule_one_color(const Instance& inst) {
  const auto& g = inst.graph;
  std::vector<EdgeSet> by_color(g.num_colors());
  for (EdgeId e = 0; e < g.num_edges(); ++e) by_color[g.color(e)].push_back(e);
  for (auto& edges : by_color) {
    if (static_cast<int>(edges.size()) >= inst.k && inst.k > 0) {
      edges.resize(inst.k);
      return edges;
    }
  }
  return std::nullopt;
}

namespace {

// Color whose edges at v rule 3 deletes, if the rule applies at v.
std::optional<ColorId> redundant_color(const ColoredHypergraph& g, const std::vector<char>& alive,
                                       VertexId v, int k, int d, bool simple) {
  std::map<ColorId, std::pair<int, std::set<VertexId>>> at_v;
  for (EdgeId e : g.incident(v)) {
    if (!alive[e]) continue;
    auto& [count, nbrs] = at_v[g.color(e)];
    ++count;
    for (VertexId u : g.edge(e).vertices) {
      if (u != v) nbrs.insert(u);
    }
  }
  const int needed = d * k;
  if (static_cast<int>(at_v.size()) < needed + 1) return std::nullopt;
  ColorId least = -1;
  int least_count = 0;
  for (const auto& [c, entry] : at_v) {
    if (least == -1 || entry.first < least_count) {
      least = c;
      least_count = entry.first;
    }
  }
  if (simple) return least;
  // Greedy search for `needed` other colors with pairwise disjoint neighborhoods.
  std::vector<std::pair<size_t, ColorId>> order;
  for (const auto& [c, entry] : at_v) {
    if (c != least) order.emplace_back(entry.second.size(), c);
  }
  std::sort(order.begin(), order.end());
  std::set<VertexId> taken;
  int disjoint = 0;
  for (auto [size, c] : order) {
    const auto& nbrs = at_v[c].second;
    if (std::any_of(nbrs.begin(), nbrs.end(), [&](VertexId u) { return taken.count(u) > 0; })) {
      continue;
    }
    taken.insert(nbrs.begin(), nbrs.end());
    if (++disjoint >= needed) return least;
  }
  return std::nullopt;
}

bool is_simple_graph(const ColoredHypergraph& g) { return g.is_graph() && !g.has_parallel_edges(); }

int order_of(const ColoredHypergraph& g) { return std::max(g.order(), 2); }

EdgeSet delete_color_at(const ColoredHypergraph& g, std::vector<char>& alive, VertexId v, ColorId c) {
  EdgeSet deleted;
  for (EdgeId e : g.incident(v)) {
    if (alive[e] && g.color(e) == c) {
      alive[e] = 0;
      deleted.push_back(e);
    }
  }
  return deleted;
}

}  // namespace

std::optional<RuleApplication> rule_chromatic_degree(const Instance& inst) {
  const auto& g = inst.graph;
  std::vector<char> alive(g.num_edges(), 1);
  const bool simple = is_simple_graph(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (auto c = redundant_color(g, alive, v, inst.k, order_of(g), simple)) {
      RuleApplication app{3, v, *c, delete_color_at(g, alive, v, *c), 0};
      return app;
    }
  }
  return std::nullopt;
}

Instance apply_deletion(const Instance& inst, const EdgeSet& deleted, std::vector<EdgeId>* origin) {
  std::vector<char> gone(inst.graph.num_edges(), 0);
  for (EdgeId e : deleted) gone[e] = 1;
  EdgeSet keep;
  for (EdgeId e = 0; e < inst.graph.num_edges(); ++e) {
    if (!gone[e]) keep.push_back(e);
  }
  return Instance{edge_subgraph(inst.graph, keep, origin), inst.k};
}

std::vector<VertexId> meet_in_middle_set(const Instance& inst, const std::vector<VertexId>& cover) {
  const auto& g = inst.graph;
  const int s = ceil_sqrt(inst.k);
  std::vector<char> in_cover(g.num_vertices(), 0);
  for (VertexId v : cover) in_cover[v] = 1;
  std::vector<VertexId> t;
  for (VertexId v : cover) {
    std::map<ColorId, std::set<VertexId>> outside;
    for (EdgeId e : g.incident(v)) {
      for (VertexId u : g.edge(e).vertices) {
        if (!in_cover[u]) outside[g.color(e)].insert(u);
      }
    }
    int rich = 0;
    for (const auto& [c, nbrs] : outside) {
      if (static_cast<int>(nbrs.size()) >= 2 * s) ++rich;
    }
    if (rich >= 2 * s) t.push_back(v);
  }
  return t;
}

std::optional<EdgeSet> rule_meet_in_middle(const Instance& inst, const std::vector<VertexId>& cover) {
  const auto& g = inst.graph;
  if (!g.is_graph()) throw PreconditionError("rule 4 applies to graphs only");
  const int s = ceil_sqrt(inst.k);
  const auto t = meet_in_middle_set(inst, cover);
  if (static_cast<int>(t.size()) < s || inst.k <= 0) return std::nullopt;

  std::vector<char> in_cover(g.num_vertices(), 0), used(g.num_vertices(), 0);
  for (VertexId v : cover) in_cover[v] = 1;
  EdgeSet f;
  for (int q = 1; q <= s; ++q) {
    const VertexId v = t[q - 1];
    const int need = 2 * s - (q - 1);
    // One edge per fresh outside neighbor, grouped by color.
    std::map<ColorId, std::map<VertexId, EdgeId>> fresh;
    for (EdgeId e : g.incident(v)) {
      for (VertexId u : g.edge(e).vertices) {
        if (u != v && !in_cover[u] && !used[u]) fresh[g.color(e)].emplace(u, e);
      }
    }
    const std::map<VertexId, EdgeId>* best = nullptr;
    for (const auto& [c, nbrs] : fresh) {
      if (!best || nbrs.size() > best->size()) best = &nbrs;
    }
    if (!best || static_cast<int>(best->size()) < need) return std::nullopt;
    int taken = 0;
    for (auto [u, e] : *best) {
      if (taken++ == need) break;
      used[u] = 1;
      f.push_back(e);
    }
  }
  std::sort(f.begin(), f.end());
  if (static_cast<int>(f.size()) < inst.k || !is_stable(g, f)) return std::nullopt;
  return f;
}

namespace {

EdgeSet map_edges(const std::vector<EdgeId>& origin, const EdgeSet& edges) {
  EdgeSet out;
  for (EdgeId e : edges) out.push_back(origin[e]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

KernelResult kernelize(const Instance& inst) {
  KernelResult result;
  const auto& g = inst.graph;
  std::vector<char> alive(g.num_edges(), 1);
  const bool simple = is_simple_graph(g);
  // Maximum matchings only shrink under deletion; greedy hypergraph matchings
  // may not, so there every single deletion re-checks rules 1 and 2.
  const bool batch = g.is_graph();

  Instance current = inst;
  std::vector<EdgeId> origin(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) origin[e] = e;

  auto decide = [&](int rule, const EdgeSet& local) {
    result.outcome = KernelResult::Outcome::DecidedYes;
    result.decided_by = rule;
    result.witness = map_edges(origin, local);
    RuleApplication app{rule, -1, -1, result.witness, 0};
    if (rule == 2) app.color = g.color(result.witness.front());
    result.log.push_back(app);
    return result;
  };

  std::vector<VertexId> cover;
  for (;;) {
    if (auto w = rule_matching(current, &cover)) return decide(1, *w);
    if (auto w = rule_one_color(current)) return decide(2, *w);

    bool changed = false;
    for (VertexId v = 0; v < g.num_vertices() && !(changed && !batch); ++v) {
      while (auto c = redundant_color(g, alive, v, inst.k, order_of(g), simple)) {
        result.log.push_back({3, v, *c, delete_color_at(g, alive, v, *c), 0});
        changed = true;
        if (!batch) break;
      }
    }
    if (!changed) break;
    EdgeSet keep;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (alive[e]) keep.push_back(e);
    }
    current = Instance{edge_subgraph(g, keep, &origin), inst.k};
  }

  if (current.graph.is_graph()) {
    if (auto w = rule_meet_in_middle(current, cover)) {
      const auto t = meet_in_middle_set(current, cover);
      decide(4, *w);
      result.log.back().count = static_cast<int>(t.size());
      return result;
    }
  }

  std::vector<VertexId> vertex_origin;
  result.reduced = Instance{drop_isolated_vertices(current.graph, &vertex_origin), inst.k};
  const int removed = g.num_vertices() - result.reduced.graph.num_vertices();
  if (removed > 0) result.log.push_back({0, -1, -1, {}, removed});
  result.outcome = KernelResult::Outcome::Reduced;
  result.edge_origin = origin;
  result.vertex_origin = vertex_origin;
  return result;
}

EdgeSet lift_witness(const KernelResult& result, const EdgeSet& reduced_witness) {
  if (result.outcome == KernelResult::Outcome::DecidedYes) return result.witness;
  return map_edges(result.edge_origin, reduced_witness);
}

std::string format_log(const KernelResult& result) {
  std::ostringstream out;
  auto list = [&](const EdgeSet& edges) {
    for (EdgeId e : edges) out << ' ' << e;
  };
  for (const auto& app : result.log) {
    out << "rule ";
    switch (app.rule) {
      case 0:
        out << "isolated removed " << app.count;
        break;
      case 1:
        out << "1 matching";
        list(app.edges);
        break;
      case 2:
        out << "2 color " << app.color << " edges";
        list(app.edges);
        break;
      case 3:
        out << "3 vertex " << app.vertex << " color " << app.color << " deleted";
        list(app.edges);
        break;
      case 4:
        out << "4 t " << app.count << " witness";
        list(app.edges);
        break;
    }
    out << '\n';
  }
  return out.str();
}

std::vector<std::string> kernel_violations(const Instance& reduced) {
  const auto& g = reduced.graph;
  std::vector<std::string> out;
  if (!is_simple_graph(g)) {
    out.push_back("not a simple graph");
    return out;
  }
  if (static_cast<int>(maximum_matching(g).size()) >= reduced.k) out.push_back("matching of size k");
  std::vector<int> per_color(g.num_colors(), 0);
  for (const Edge& e : g.edges()) ++per_color[e.color];
  if (std::any_of(per_color.begin(), per_color.end(), [&](int c) { return c >= reduced.k; })) {
    out.push_back("color class of size k");
  }
  const auto profile = degree_profile(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (profile.chromatic_degree(v) > 2 * reduced.k) {
      out.push_back("chromatic degree above 2k at vertex " + std::to_string(v));
      break;
    }
  }
  std::vector<VertexId> cover;
  rule_matching(reduced, &cover);
  if (static_cast<int>(meet_in_middle_set(reduced, cover).size()) >= ceil_sqrt(reduced.k)) {
    out.push_back("|T| >= ceil(sqrt k)");
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) {
      out.push_back("isolated vertex " + std::to_string(v));
      break;
    }
  }
  return out;
}

KernelSizeTerms kernel_size_terms(const Instance& reduced) {
  const auto& g = reduced.graph;
  const long long k = reduced.k;
  const long long s = ceil_sqrt(reduced.k);
  KernelSizeTerms terms;
  std::vector<VertexId> cover;
  rule_matching(reduced, &cover);
  const auto t = meet_in_middle_set(reduced, cover);
  std::vector<char> in_cover(g.num_vertices(), 0), in_t(g.num_vertices(), 0);
  for (VertexId v : cover) in_cover[v] = 1;
  for (VertexId v : t) in_t[v] = 1;
  terms.cover_size = static_cast<long long>(cover.size());
  terms.t_size = static_cast<long long>(t.size());
  for (const Edge& e : g.edges()) {
    const VertexId a = e.vertices[0], b = e.vertices[1];
    if (in_cover[a] && in_cover[b]) {
      ++terms.edges_inside_cover;
    } else if (in_t[a] || in_t[b]) {
      ++terms.edges_at_t;
    } else {
      ++terms.edges_at_rest;
    }
  }
  const long long cs = terms.cover_size, ts = terms.t_size;
  terms.bound_inside_cover = cs * (cs - 1) / 2;
  terms.bound_at_t = ts * 2 * k * (k - 1);
  terms.bound_at_rest = (cs - ts) * ((2 * s - 1) * (k - 1) + 2 * k * (2 * s - 1));
  return terms;
}

}  // namespace cclust

#include "cclust/core.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cclust {

std::optional<std::string> validate(int num_vertices, int num_colors,
                                    std::span<const Edge> edges) {
  if (num_vertices < 0) return "negative vertex count";
  if (num_colors < 0) return "negative color count";
  std::vector<int> seen(static_cast<size_t>(num_vertices), -1);
  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const std::string where = "edge " + std::to_string(i) + ": ";
    if (e.vertices.empty()) return where + "empty edge";
    if (e.color < 0 || e.color >= num_colors) return where + "color out of range";
    for (VertexId v : e.vertices) {
      if (v < 0 || v >= num_vertices) return where + "vertex out of range";
      if (seen[v] == static_cast<int>(i)) return where + "duplicate vertex";
      seen[v] = static_cast<int>(i);
    }
  }
  return std::nullopt;
}

ColoredHypergraph::ColoredHypergraph(int num_vertices, int num_colors, std::vector<Edge> edges)
    : num_vertices_(num_vertices), num_colors_(num_colors), edges_(std::move(edges)) {
  if (auto violation = validate(num_vertices, num_colors, edges_)) {
    throw InvalidInstance(*violation);
  }
  incidence_.assign(num_vertices, {});
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const auto size = static_cast<int>(edges_[e].vertices.size());
    order_ = std::max(order_, size);
    is_graph_ = is_graph_ && size == 2;
    for (VertexId v : edges_[e].vertices) incidence_[v].push_back(e);
  }
}

bool ColoredHypergraph::has_parallel_edges() const {
  std::set<std::vector<VertexId>> spans;
  for (const Edge& e : edges_) {
    auto key = e.vertices;
    std::sort(key.begin(), key.end());
    if (!spans.insert(std::move(key)).second) return true;
  }
  return false;
}

bool ColoredHypergraph::intersects(EdgeId a, EdgeId b) const {
  for (VertexId u : edges_[a].vertices) {
    for (VertexId v : edges_[b].vertices) {
      if (u == v) return true;
    }
  }
  return false;
}

int DegreeProfile::max_color_degree(VertexId v) const {
  int best = 0;
  for (const auto& cc : by_color[v]) best = std::max(best, cc.count);
  return best;
}

DegreeProfile degree_profile(const ColoredHypergraph& g) {
  DegreeProfile p;
  p.degree.resize(g.num_vertices());
  p.by_color.resize(g.num_vertices());
  std::vector<int> count(g.num_colors(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    p.degree[v] = g.degree(v);
    for (EdgeId e : g.incident(v)) ++count[g.color(e)];
    for (EdgeId e : g.incident(v)) {
      const ColorId c = g.color(e);
      if (count[c] > 0) {
        p.by_color[v].push_back({c, count[c]});
        count[c] = 0;
      }
    }
    std::sort(p.by_color[v].begin(), p.by_color[v].end(),
              [](const auto& a, const auto& b) { return a.color < b.color; });
  }
  return p;
}

namespace {

void check_indices(const ColoredHypergraph& g, std::span<const EdgeId> selection) {
  for (EdgeId e : selection) {
    if (e < 0 || e >= g.num_edges()) {
      throw std::out_of_range("edge index " + std::to_string(e) + " out of range");
    }
  }
}

}  // namespace

bool is_stable(const ColoredHypergraph& g, std::span<const EdgeId> selection) {
  check_indices(g, selection);
  // Color claimed at each vertex by the selection so far; -1 = unclaimed.
  std::vector<ColorId> claim(g.num_vertices(), -1);
  for (EdgeId e : selection) {
    const ColorId c = g.color(e);
    for (VertexId v : g.edge(e).vertices) {
      if (claim[v] != -1 && claim[v] != c) return false;
      claim[v] = c;
    }
  }
  return true;
}

VertexColoring coloring_of(const ColoredHypergraph& g, std::span<const EdgeId> selection) {
  if (!is_stable(g, selection)) throw PreconditionError("coloring_of: edge set is not stable");
  VertexColoring f(g.num_vertices(), kDefaultColor);
  for (EdgeId e : selection) {
    for (VertexId v : g.edge(e).vertices) f[v] = g.color(e);
  }
  return f;
}

EdgeSet stable_under(const ColoredHypergraph& g, const VertexColoring& coloring) {
  if (static_cast<int>(coloring.size()) != g.num_vertices()) {
    throw PreconditionError("stable_under: coloring is not total on V");
  }
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& vs = g.edge(e).vertices;
    if (std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return coloring[v] == g.color(e); })) {
      out.push_back(e);
    }
  }
  return out;
}

ColoredHypergraph edge_subgraph(const ColoredHypergraph& g, std::span<const EdgeId> keep,
                                std::vector<EdgeId>* origin) {
  std::vector<Edge> edges;
  edges.reserve(keep.size());
  if (origin) origin->clear();
  for (EdgeId e : keep) {
    edges.push_back(g.edge(e));
    if (origin) origin->push_back(e);
  }
  return ColoredHypergraph(g.num_vertices(), g.num_colors(), std::move(edges));
}

ColoredHypergraph drop_isolated_vertices(const ColoredHypergraph& g,
                                         std::vector<VertexId>* origin) {
  std::vector<VertexId> renumber(g.num_vertices(), -1);
  int next = 0;
  if (origin) origin->clear();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) > 0) {
      renumber[v] = next++;
      if (origin) origin->push_back(v);
    }
  }
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    for (VertexId& v : e.vertices) v = renumber[v];
  }
  return ColoredHypergraph(next, g.num_colors(), std::move(edges));
}

std::vector<std::vector<VertexId>> connected_components(const ColoredHypergraph& g) {
  std::vector<int> comp(g.num_vertices(), -1);
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] != -1) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (EdgeId e : g.incident(v)) {
        for (VertexId w : g.edge(e).vertices) {
          if (comp[w] == -1) {
            comp[w] = id;
            stack.push_back(w);
          }
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

}  // namespace cclust

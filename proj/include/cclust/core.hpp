#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cclust {

using VertexId = int;
using EdgeId = int;
using ColorId = int;

/// The default color assigned to vertices not touched by a selected edge.
inline constexpr ColorId kDefaultColor = 0;

/// Indices into ColoredHypergraph::edges(), kept sorted.
using EdgeSet = std::vector<EdgeId>;

/// One color per vertex; total on V.
using VertexColoring = std::vector<ColorId>;

/// Thrown when an algorithm is called outside its precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when a hypergraph violates a structural invariant.
class InvalidInstance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  std::vector<VertexId> vertices;
  ColorId color = kDefaultColor;

  bool operator==(const Edge&) const = default;
};

/// First violated invariant of a would-be hypergraph, if any.
std::optional<std::string> validate(int num_vertices, int num_colors,
                                    std::span<const Edge> edges);

/// Edge-colored hypergraph on vertices 0..n-1 with colors 0..|C|-1.
/// Immutable after construction; incidence lists are built eagerly.
class ColoredHypergraph {
 public:
  ColoredHypergraph() = default;

  /// Throws InvalidInstance if validate() reports a violation.
  ColoredHypergraph(int num_vertices, int num_colors, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_colors() const { return num_colors_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  ColorId color(EdgeId e) const { return edges_[e].color; }

  /// Edges containing v, in increasing index order.
  const std::vector<EdgeId>& incident(VertexId v) const { return incidence_[v]; }
  int degree(VertexId v) const { return static_cast<int>(incidence_[v].size()); }

  /// Maximum edge cardinality (0 for an edgeless hypergraph).
  int order() const { return order_; }

  /// True iff every edge has exactly two vertices.
  bool is_graph() const { return is_graph_; }

  /// True iff two distinct edges span the same vertex set.
  bool has_parallel_edges() const;

  bool intersects(EdgeId a, EdgeId b) const;

  bool operator==(const ColoredHypergraph& other) const {
    return num_vertices_ == other.num_vertices_ && num_colors_ == other.num_colors_ &&
           edges_ == other.edges_;
  }

 private:
  int num_vertices_ = 0;
  int num_colors_ = 0;
  int order_ = 0;
  bool is_graph_ = true;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// A hypergraph together with the target number k of stable edges.
struct Instance {
  ColoredHypergraph graph;
  int k = 0;

  /// Number of edges that may be left unstable.
  int r() const { return graph.num_edges() - k; }

  bool operator==(const Instance&) const = default;
};

/// Per-vertex degree statistics.
struct DegreeProfile {
  struct ColorCount {
    ColorId color;
    int count;
  };
  std::vector<int> degree;
  /// Per vertex, the incident colors with multiplicities, sorted by color id.
  std::vector<std::vector<ColorCount>> by_color;

  int chromatic_degree(VertexId v) const { return static_cast<int>(by_color[v].size()); }
  int max_color_degree(VertexId v) const;
};

DegreeProfile degree_profile(const ColoredHypergraph& g);

/// True iff every pair of intersecting edges in F has equal color.
/// Throws std::out_of_range for an index outside the edge list.
bool is_stable(const ColoredHypergraph& g, std::span<const EdgeId> selection);

/// The coloring f_F: color of an F-edge containing v, else the default color.
/// Throws PreconditionError when F is not stable.
VertexColoring coloring_of(const ColoredHypergraph& g, std::span<const EdgeId> selection);

/// Edges whose vertices all carry the edge's color under f.
EdgeSet stable_under(const ColoredHypergraph& g, const VertexColoring& coloring);

/// Result of an exact optimization: optimum value and a witness attaining it.
struct Solution {
  int size = 0;
  EdgeSet witness;
};

/// Result of a decision procedure; a YES carries a stable witness with >= k edges.
struct Decision {
  bool yes = false;
  EdgeSet witness;
};

/// The hypergraph restricted to the kept edges (vertex set unchanged).
/// `origin[i]` receives the original index of the i-th kept edge.
ColoredHypergraph edge_subgraph(const ColoredHypergraph& g, std::span<const EdgeId> keep,
                                std::vector<EdgeId>* origin = nullptr);

/// Drops vertices with no incident edge and renumbers the rest densely.
ColoredHypergraph drop_isolated_vertices(const ColoredHypergraph& g,
                                         std::vector<VertexId>* origin = nullptr);

/// Connected components of the hypergraph as vertex lists (isolated vertices included).
std::vector<std::vector<VertexId>> connected_components(const ColoredHypergraph& g);

}  // namespace cclust

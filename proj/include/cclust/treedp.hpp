#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cclust/core.hpp"

namespace cclust {

/// A tree T on V (not necessarily a subgraph of G) together with the
/// non-tree edge classes used by the dynamic program.
struct TreeLayout {
  VertexId root = 0;
  std::vector<VertexId> parent;  // parent[root] == -1

  // Derived by make_layout.
  std::vector<VertexId> preorder;
  std::vector<std::vector<VertexId>> children;
  std::vector<EdgeId> tree_edge;  // G edge realizing {v, parent(v)}, or -1
  // C1: one end strictly below v, other outside T[v].  C2: ends below two
  // different children.  C3: {v, w} with w below v.  C4: {v, u} with u
  // outside T[v].  Only non-tree edges appear.
  std::vector<std::vector<EdgeId>> c1, c2, c3, c4;
  std::vector<int> lfe_at;
  int lfe = 0;
};

/// Validates the parent array and fills the derived fields. Among parallel
/// G edges between a vertex and its parent the lowest index is the tree edge.
/// Throws PreconditionError if g is not a graph or the array is not a tree.
TreeLayout make_layout(const ColoredHypergraph& g, VertexId root, std::vector<VertexId> parent);

/// lfe(G,T,v) recomputed from tree paths, independent of make_layout.
std::vector<int> local_feedback_counts(const ColoredHypergraph& g, const TreeLayout& t);

/// Best layout found among BFS/DFS/random spanning trees plus edge-swap
/// descent, minimizing (lfe, sum of lfe_at). Components are searched
/// separately and their roots linked by tree edges absent from G.
/// `budget` bounds the number of evaluated trees.
TreeLayout spanning_tree_search(const ColoredHypergraph& g, int budget = 200, std::uint64_t seed = 1);

void write_layout(std::ostream& out, const TreeLayout& t);
TreeLayout read_layout(std::istream& in, const ColoredHypergraph& g);

/// Dynamic program over the layout; table size per vertex is
/// |C| · 2^{|C1(v)|+|C4(v)|}. Exact.
class SecwDp {
 public:
  static constexpr long long kInvalid = -1;

  /// Throws PreconditionError on layout/instance mismatch and
  /// std::length_error when a boundary exceeds 24 edges.
  SecwDp(const ColoredHypergraph& g, const TreeLayout& t);

  Solution solve() const;

  /// C1(v) ∪ C4(v) in increasing order; bit i of a mask selects boundary(v)[i].
  const std::vector<EdgeId>& boundary(VertexId v) const { return boundary_[v]; }
  /// Largest F inside T[v] with F ∪ S stable and v colored c, or kInvalid.
  long long value(VertexId v, ColorId c, std::uint32_t mask) const;
  /// An F attaining value(v, c, mask). Requires a valid entry.
  EdgeSet witness(VertexId v, ColorId c, std::uint32_t mask) const;

  std::size_t table_entries(VertexId v) const { return table_[v].size(); }

 private:
  struct Step {
    VertexId child;
    ColorId color;
    std::uint32_t mask;
  };
  struct Local {
    std::vector<EdgeId> edges;               // boundary, then C2, then C3
    std::vector<std::uint64_t> clash;        // per local bit
    std::vector<std::vector<std::pair<int, int>>> project;  // per child: (local bit, child bit)
  };

  void fill(VertexId v);
  // Best value of entry (v, c, mask); with `pick`, also the chosen edges and child entries.
  long long evaluate(VertexId v, ColorId c, std::uint32_t mask, EdgeSet* pick, std::vector<Step>* steps) const;
  long long best_any(VertexId w, std::uint32_t mask) const;
  void collect(VertexId v, ColorId c, std::uint32_t mask, EdgeSet& out) const;

  const ColoredHypergraph& g_;
  const TreeLayout& t_;
  int colors_;
  std::vector<std::vector<EdgeId>> boundary_;
  std::vector<Local> local_;
  std::vector<std::vector<long long>> table_;
};

Solution solve_secw_dp(const Instance& inst, const TreeLayout& layout);

/// Exact on forests. Throws PreconditionError otherwise.
Solution forest_dp(const Instance& inst);

bool is_forest(const ColoredHypergraph& g);

enum class DeletionClass { Forest, TwoColor };

/// Tries every F ⊆ deletion, prunes edges clashing with F and solves the rest
/// with the class solver. Throws PreconditionError if g minus the deletion set
/// is not in the class, or the set holds an invalid index.
Solution solve_deletion_wrapper(const Instance& inst, const EdgeSet& deletion, DeletionClass cls);

/// Edges closing a cycle when scanned in index order.
EdgeSet feedback_edges(const ColoredHypergraph& g);
/// Edges not of the two most frequent colors.
EdgeSet rare_color_edges(const ColoredHypergraph& g);

}  // namespace cclust

#include "cclust/matching.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

namespace cclust {

std::vector<int> bipartite_max_matching(const BipartiteGraph& b) {
  constexpr int kInf = std::numeric_limits<int>::max();
  std::vector<int> match_left(b.left, -1), match_right(b.right, -1), dist(b.left);

  auto bfs = [&] {
    std::queue<int> q;
    bool found = false;
    for (int u = 0; u < b.left; ++u) {
      dist[u] = match_left[u] == -1 ? 0 : kInf;
      if (dist[u] == 0) q.push(u);
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : b.adj[u]) {
        const int next = match_right[w];
        if (next == -1) {
          found = true;
        } else if (dist[next] == kInf) {
          dist[next] = dist[u] + 1;
          q.push(next);
        }
      }
    }
    return found;
  };

  // Iterative DFS along the layered graph.
  std::vector<size_t> it(b.left);
  auto dfs = [&](int root) {
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int u = stack.back();
      if (it[u] == b.adj[u].size()) {
        dist[u] = kInf;
        stack.pop_back();
        continue;
      }
      const int w = b.adj[u][it[u]++];
      const int next = match_right[w];
      if (next == -1) {
        // Augment along the stack.
        int right_node = w;
        for (size_t i = stack.size(); i-- > 0;) {
          const int left_node = stack[i];
          const int prev = match_left[left_node];
          match_left[left_node] = right_node;
          match_right[right_node] = left_node;
          right_node = prev;
        }
        return true;
      }
      if (dist[next] == dist[u] + 1) stack.push_back(next);
    }
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (int u = 0; u < b.left; ++u) {
      if (match_left[u] == -1) dfs(u);
    }
  }
  return match_left;
}

std::pair<std::vector<int>, std::vector<int>> konig_cover(const BipartiteGraph& b,
                                                          const std::vector<int>& match_left) {
  std::vector<int> match_right(b.right, -1);
  for (int u = 0; u < b.left; ++u) {
    if (match_left[u] != -1) match_right[match_left[u]] = u;
  }
  // Alternating reachability from unmatched left nodes.
  std::vector<char> seen_left(b.left, 0), seen_right(b.right, 0);
  std::queue<int> q;
  for (int u = 0; u < b.left; ++u) {
    if (match_left[u] == -1) {
      seen_left[u] = 1;
      q.push(u);
    }
  }
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : b.adj[u]) {
      if (seen_right[w] || match_left[u] == w) continue;
      seen_right[w] = 1;
      const int next = match_right[w];
      if (next != -1 && !seen_left[next]) {
        seen_left[next] = 1;
        q.push(next);
      }
    }
  }
  std::vector<int> cover_left, cover_right;
  for (int u = 0; u < b.left; ++u) {
    if (!seen_left[u]) cover_left.push_back(u);
  }
  for (int w = 0; w < b.right; ++w) {
    if (seen_right[w]) cover_right.push_back(w);
  }
  return {cover_left, cover_right};
}

namespace {

// Edmonds' algorithm with explicit blossom bases; O(V^3).
class Blossom {
 public:
  explicit Blossom(const SimpleGraph& g)
      : g_(g), n_(g.num_nodes()), mate_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_) {}

  std::vector<int> run() {
    // Greedy warm start.
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (int w : g_.neighbors(v)) {
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (int root = 0; root < n_; ++root) {
      if (mate_[root] != -1 || g_.degree(root) == 0) continue;
      const int end = find_path(root);
      int v = end;
      while (v != -1) {
        const int pv = parent_[v];
        const int ppv = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = ppv;
      }
    }
    return mate_;
  }

 private:
  int lca(int a, int b) {
    ++stamp_;
    for (;;) {
      a = base_[a];
      seen_[a] = stamp_;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen_[b] == stamp_) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  int find_path(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::vector<int> q{root};
    for (size_t head = 0; head < q.size(); ++head) {
      const int v = q[head];
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                q.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = 1;
          q.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const SimpleGraph& g_;
  int n_;
  std::vector<int> mate_, parent_, base_;
  std::vector<char> used_, in_blossom_;
  std::vector<int> seen_ = std::vector<int>(n_, 0);
  int stamp_ = 0;
};

}  // namespace

std::vector<int> max_cardinality_matching(const SimpleGraph& g) { return Blossom(g).run(); }

int double_cover_matching_size(const SimpleGraph& g) {
  BipartiteGraph b{g.num_nodes(), g.num_nodes(), {}};
  b.adj.resize(g.num_nodes());
  for (int v = 0; v < g.num_nodes(); ++v) b.adj[v] = g.neighbors(v);
  const auto match = bipartite_max_matching(b);
  return static_cast<int>(std::count_if(match.begin(), match.end(), [](int m) { return m != -1; }));
}

EdgeSet greedy_maximal_matching(const ColoredHypergraph& g) {
  std::vector<char> used(g.num_vertices(), 0);
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& vs = g.edge(e).vertices;
    if (std::any_of(vs.begin(), vs.end(), [&](VertexId v) { return used[v]; })) continue;
    for (VertexId v : vs) used[v] = 1;
    out.push_back(e);
  }
  return out;
}

EdgeSet maximum_matching(const ColoredHypergraph& g) {
  if (!g.is_graph()) throw PreconditionError("maximum_matching: input is not a graph");
  // The endpoints S of a maximal matching cover every edge. Some maximum
  // matching uses only S-S edges and, per v in S, |S| of its other neighbors,
  // so the blossom search runs on that sparse subgraph.
  std::vector<char> in_cover(g.num_vertices(), 0);
  int cover_size = 0;
  for (EdgeId e : greedy_maximal_matching(g)) {
    for (VertexId v : g.edge(e).vertices) in_cover[v] = 1;
    cover_size += 2;
  }
  std::vector<int> outside_kept(g.num_vertices(), 0);
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, EdgeId> first_edge;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    int u = g.edge(e).vertices[0], v = g.edge(e).vertices[1];
    if (u > v) std::swap(u, v);
    if (!(in_cover[u] && in_cover[v])) {
      const int hub = in_cover[u] ? u : v;
      if (outside_kept[hub] >= cover_size) continue;
      if (first_edge.count({u, v}) == 0) ++outside_kept[hub];
    }
    if (first_edge.emplace(std::make_pair(u, v), e).second) pairs.emplace_back(u, v);
  }
  const auto mate = max_cardinality_matching(SimpleGraph::from_edges(g.num_vertices(), pairs));
  EdgeSet out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (mate[v] > v) out.push_back(first_edge.at({v, mate[v]}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cclust

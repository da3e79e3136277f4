#include "cclust/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cclust {

SimpleGraph SimpleGraph::from_edges(int num_nodes, const std::vector<std::pair<int, int>>& edges) {
  SimpleGraph g(num_nodes);
  for (auto [u, v] : edges) {
    if (u == v) throw std::invalid_argument("SimpleGraph: loop at node " + std::to_string(u));
    if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes) {
      throw std::out_of_range("SimpleGraph: node out of range");
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  int twice = 0;
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice += static_cast<int>(list.size());
  }
  g.num_edges_ = twice / 2;
  return g;
}

bool SimpleGraph::adjacent(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> SimpleGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(num_edges_);
  for (int u = 0; u < num_nodes(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool SimpleGraph::bipartition(std::vector<int>& side) const {
  side.assign(num_nodes(), -1);
  std::vector<int> queue;
  for (int s = 0; s < num_nodes(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int w : adj_[u]) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace cclust

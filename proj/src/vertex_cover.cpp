#include "cclust/vertex_cover.hpp"

#include <algorithm>
#include <utility>

#include "cclust/matching.hpp"

namespace cclust {

namespace {

thread_local VertexCoverStats stats;

// Mutable working graph over a fixed id space; dead nodes have empty lists.
struct Work {
  std::vector<std::vector<int>> adj;
  std::vector<char> alive;

  int size() const { return static_cast<int>(adj.size()); }

  void erase_from(int u, int v) {
    auto& list = adj[u];
    list.erase(std::lower_bound(list.begin(), list.end(), v));
  }

  void insert_into(int u, int v) {
    auto& list = adj[u];
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
  }

  // Deletes v; returns its former neighbors.
  std::vector<int> remove(int v) {
    std::vector<int> nbrs = std::move(adj[v]);
    adj[v].clear();
    alive[v] = 0;
    for (int u : nbrs) erase_from(u, v);
    return nbrs;
  }

  bool has_edges() const {
    for (int v = 0; v < size(); ++v) {
      if (!adj[v].empty()) return true;
    }
    return false;
  }
};

struct Fold {
  int v, u, w;  // v absorbed u and w
};

// Applies the reductions exhaustively. Forced cover nodes go to `forced`.
void reduce(Work& g, std::vector<int>& forced, std::vector<Fold>& folds) {
  std::vector<int> queue;
  std::vector<char> queued(g.size(), 0);
  auto push = [&](int v) {
    if (g.alive[v] && !queued[v]) {
      queued[v] = 1;
      queue.push_back(v);
    }
  };
  for (int v = 0; v < g.size(); ++v) push(v);
  auto take = [&](int v) {
    forced.push_back(v);
    for (int u : g.remove(v)) push(u);
  };
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    queued[v] = 0;
    if (!g.alive[v]) continue;
    const auto deg = g.adj[v].size();
    if (deg == 0) {
      g.alive[v] = 0;
    } else if (deg == 1) {
      take(g.adj[v][0]);
      g.alive[v] = 0;
    } else if (deg == 2) {
      const int u = g.adj[v][0], w = g.adj[v][1];
      if (std::binary_search(g.adj[u].begin(), g.adj[u].end(), w)) {
        take(u);
        take(w);
        g.alive[v] = 0;
        g.adj[v].clear();
      } else {
        // Fold: v, u, w become a single node (kept as v) adjacent to N(u) ∪ N(w) - v.
        ++stats.folds;
        folds.push_back({v, u, w});
        std::vector<int> merged;
        for (int x : g.remove(u)) {
          if (x != v) merged.push_back(x);
        }
        for (int x : g.remove(w)) {
          if (x != v) merged.push_back(x);
        }
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
        g.adj[v] = merged;
        for (int x : merged) {
          g.insert_into(x, v);
          push(x);
        }
        push(v);
      }
    }
  }
}

// Lower bound from the LP relaxation on the remaining graph.
int lp_bound(const Work& g) {
  std::vector<int> id(g.size(), -1);
  int n = 0;
  for (int v = 0; v < g.size(); ++v) {
    if (!g.adj[v].empty()) id[v] = n++;
  }
  BipartiteGraph b{n, n, std::vector<std::vector<int>>(n)};
  for (int v = 0; v < g.size(); ++v) {
    for (int u : g.adj[v]) b.adj[id[v]].push_back(id[u]);
  }
  const auto match = bipartite_max_matching(b);
  const int size = static_cast<int>(std::count_if(match.begin(), match.end(), [](int m) { return m != -1; }));
  return (size + 1) / 2;
}

std::vector<std::vector<int>> components(const Work& g) {
  std::vector<int> comp(g.size(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.size(); ++s) {
    if (g.adj[s].empty() || comp[s] != -1) continue;
    out.emplace_back();
    auto& nodes = out.back();
    comp[s] = static_cast<int>(out.size()) - 1;
    nodes.push_back(s);
    for (size_t head = 0; head < nodes.size(); ++head) {
      for (int u : g.adj[nodes[head]]) {
        if (comp[u] == -1) {
          comp[u] = comp[s];
          nodes.push_back(u);
        }
      }
    }
  }
  return out;
}

Work restrict_to(const Work& g, const std::vector<int>& nodes) {
  Work sub;
  sub.adj.assign(g.size(), {});
  sub.alive.assign(g.size(), 0);
  for (int v : nodes) {
    sub.adj[v] = g.adj[v];
    sub.alive[v] = 1;
  }
  return sub;
}

void unfold(std::vector<int>& cover, const std::vector<Fold>& folds) {
  for (auto it = folds.rbegin(); it != folds.rend(); ++it) {
    auto pos = std::find(cover.begin(), cover.end(), it->v);
    if (pos != cover.end()) {
      cover.erase(pos);
      cover.push_back(it->u);
      cover.push_back(it->w);
    } else {
      cover.push_back(it->v);
    }
  }
}

// A cover of g with fewer than `limit` nodes, minimum among such; nullopt if none.
std::optional<std::vector<int>> search(Work g, int limit) {
  ++stats.branch_nodes;
  std::vector<int> forced;
  std::vector<Fold> folds;
  reduce(g, forced, folds);
  const int base = static_cast<int>(forced.size() + folds.size());
  if (base >= limit) return std::nullopt;

  auto finish = [&](std::vector<int> rest) {
    rest.insert(rest.end(), forced.begin(), forced.end());
    unfold(rest, folds);
    return rest;
  };

  if (!g.has_edges()) return finish({});

  const auto parts = components(g);
  if (parts.size() > 1) {
    std::vector<Work> subs;
    std::vector<int> bounds;
    int bound_sum = 0;
    for (const auto& nodes : parts) {
      subs.push_back(restrict_to(g, nodes));
      bounds.push_back(lp_bound(subs.back()));
      bound_sum += bounds.back();
    }
    if (base + bound_sum >= limit) return std::nullopt;
    std::vector<int> cover;
    int used = 0;
    for (size_t i = 0; i < subs.size(); ++i) {
      bound_sum -= bounds[i];
      // Budget left for this part given lower bounds on the parts not yet solved.
      const int part_limit = limit - base - used - bound_sum;
      auto part = search(std::move(subs[i]), part_limit);
      if (!part) return std::nullopt;
      used += static_cast<int>(part->size());
      cover.insert(cover.end(), part->begin(), part->end());
    }
    return finish(std::move(cover));
  }

  if (base + lp_bound(g) >= limit) return std::nullopt;

  int pivot = -1;
  for (int v = 0; v < g.size(); ++v) {
    if (pivot == -1 || g.adj[v].size() > g.adj[pivot].size()) pivot = v;
  }

  std::optional<std::vector<int>> best;
  {
    Work take = g;
    take.remove(pivot);
    if (auto sub = search(std::move(take), limit - base - 1)) {
      sub->push_back(pivot);
      limit = base + static_cast<int>(sub->size());
      best = std::move(sub);
    }
  }
  {
    Work take = g;
    const std::vector<int> nbrs = g.adj[pivot];
    for (int u : nbrs) take.remove(u);
    const int cost = static_cast<int>(nbrs.size());
    if (limit - base - cost > 0) {
      if (auto sub = search(std::move(take), limit - base - cost)) {
        sub->insert(sub->end(), nbrs.begin(), nbrs.end());
        best = std::move(sub);
      }
    }
  }
  if (!best) return std::nullopt;
  return finish(std::move(*best));
}

Work make_work(const SimpleGraph& g) {
  Work w;
  w.adj.resize(g.num_nodes());
  w.alive.assign(g.num_nodes(), 1);
  for (int v = 0; v < g.num_nodes(); ++v) w.adj[v] = g.neighbors(v);
  return w;
}

}  // namespace

std::optional<std::vector<int>> vertex_cover_at_most(const SimpleGraph& g, int budget) {
  stats = {};
  if (budget < 0) return std::nullopt;
  auto cover = search(make_work(g), budget + 1);
  if (cover) std::sort(cover->begin(), cover->end());
  return cover;
}

std::vector<int> min_vertex_cover(const SimpleGraph& g) {
  // Every node is a cover, so the search with limit n+1 always succeeds.
  auto cover = vertex_cover_at_most(g, g.num_nodes());
  return *cover;
}

const VertexCoverStats& last_vertex_cover_stats() { return stats; }

}  // namespace cclust

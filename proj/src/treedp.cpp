#include "cclust/treedp.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <tuple>

#include "cclust/conflict.hpp"
#include "cclust/io.hpp"

namespace cclust {

namespace {

void require_graph(const ColoredHypergraph& g) {
  if (!g.is_graph()) throw PreconditionError("tree layouts need a graph (all edges of size 2)");
}

VertexId other(const Edge& e, VertexId v) { return e.vertices[0] == v ? e.vertices[1] : e.vertices[0]; }

// Lowest-index edge between v and its parent, or -1.
EdgeId tree_edge_at(const ColoredHypergraph& g, VertexId v, const std::vector<VertexId>& parent) {
  if (parent[v] < 0) return -1;
  for (EdgeId e : g.incident(v)) {
    if (other(g.edge(e), v) == parent[v]) return e;
  }
  return -1;
}

std::vector<EdgeId> tree_edges_of(const ColoredHypergraph& g, const std::vector<VertexId>& parent) {
  std::vector<EdgeId> out(parent.size(), -1);
  for (VertexId v = 0; v < static_cast<VertexId>(parent.size()); ++v) out[v] = tree_edge_at(g, v, parent);
  return out;
}

std::vector<int> depths(const std::vector<VertexId>& parent) {
  std::vector<int> depth(parent.size(), -1);
  for (VertexId v = 0; v < static_cast<VertexId>(parent.size()); ++v) {
    std::vector<VertexId> chain;
    VertexId x = v;
    while (x >= 0 && depth[x] < 0) {
      chain.push_back(x);
      x = parent[x];
    }
    int d = x >= 0 ? depth[x] : -1;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
  }
  return depth;
}

template <typename Visit>
void for_each_non_tree(const ColoredHypergraph& g, const std::vector<EdgeId>& tree_edge, Visit visit) {
  std::vector<char> is_tree(g.num_edges(), 0);
  for (EdgeId e : tree_edge) {
    if (e >= 0) is_tree[e] = 1;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (is_tree[e]) continue;
    visit(e, g.edge(e).vertices[0], g.edge(e).vertices[1]);
  }
}

VertexId lca(const std::vector<VertexId>& parent, const std::vector<int>& depth, VertexId a, VertexId b) {
  while (depth[a] > depth[b]) a = parent[a];
  while (depth[b] > depth[a]) b = parent[b];
  while (a != b) {
    a = parent[a];
    b = parent[b];
  }
  return a;
}

// lfe restricted to one component whose tree is given by `parent`.
std::vector<int> component_lfe(const ColoredHypergraph& g, const std::vector<VertexId>& parent,
                               const std::vector<VertexId>& comp) {
  const auto depth = depths(parent);
  std::vector<int> count(parent.size(), 0);
  for (VertexId v : comp) {
    const EdgeId up = tree_edge_at(g, v, parent);
    for (EdgeId e : g.incident(v)) {
      const VertexId w = other(g.edge(e), v);
      // Visit each non-tree edge once, from its first vertex.
      if (g.edge(e).vertices[0] != v || e == up) continue;
      if (parent[w] == v && tree_edge_at(g, w, parent) == e) continue;
      const VertexId l = lca(parent, depth, v, w);
      for (VertexId x = v; x != l; x = parent[x]) ++count[x];
      for (VertexId x = w; x != l; x = parent[x]) ++count[x];
      ++count[l];
    }
  }
  return count;
}

}  // namespace

TreeLayout make_layout(const ColoredHypergraph& g, VertexId root, std::vector<VertexId> parent) {
  require_graph(g);
  const int n = g.num_vertices();
  if (static_cast<int>(parent.size()) != n) throw PreconditionError("layout size differs from vertex count");
  if (n == 0) {
    TreeLayout t;
    t.parent = std::move(parent);
    return t;
  }
  if (root < 0 || root >= n || parent[root] != -1) throw PreconditionError("layout root must have parent -1");
  TreeLayout t;
  t.root = root;
  t.parent = std::move(parent);
  t.children.assign(n, {});
  for (VertexId v = 0; v < n; ++v) {
    if (v == root) continue;
    if (t.parent[v] < 0 || t.parent[v] >= n || t.parent[v] == v) {
      throw PreconditionError("layout parent of " + std::to_string(v) + " is invalid");
    }
    t.children[t.parent[v]].push_back(v);
  }
  t.preorder.push_back(root);
  for (size_t i = 0; i < t.preorder.size(); ++i) {
    for (VertexId w : t.children[t.preorder[i]]) t.preorder.push_back(w);
  }
  if (static_cast<int>(t.preorder.size()) != n) throw PreconditionError("layout is not a tree on V");

  t.tree_edge = tree_edges_of(g, t.parent);
  const auto depth = depths(t.parent);
  t.c1.assign(n, {});
  t.c2.assign(n, {});
  t.c3.assign(n, {});
  t.c4.assign(n, {});
  for_each_non_tree(g, t.tree_edge, [&](EdgeId e, VertexId a, VertexId b) {
    const VertexId l = lca(t.parent, depth, a, b);
    if (l == a || l == b) {
      const VertexId low = l == a ? b : a;
      t.c3[l].push_back(e);
      t.c4[low].push_back(e);
      for (VertexId x = t.parent[low]; x != l; x = t.parent[x]) t.c1[x].push_back(e);
      return;
    }
    t.c2[l].push_back(e);
    for (VertexId end : {a, b}) {
      t.c4[end].push_back(e);
      for (VertexId x = t.parent[end]; x != l; x = t.parent[x]) t.c1[x].push_back(e);
    }
  });
  t.lfe_at.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (auto* list : {&t.c1[v], &t.c2[v], &t.c3[v], &t.c4[v]}) std::sort(list->begin(), list->end());
    t.lfe_at[v] = static_cast<int>(t.c1[v].size() + t.c2[v].size() + t.c3[v].size() + t.c4[v].size());
    t.lfe = std::max(t.lfe, t.lfe_at[v]);
  }
  return t;
}

std::vector<int> local_feedback_counts(const ColoredHypergraph& g, const TreeLayout& t) {
  const int n = g.num_vertices();
  std::vector<std::vector<VertexId>> adj(n);
  for (VertexId v = 0; v < n; ++v) {
    if (t.parent[v] >= 0) {
      adj[v].push_back(t.parent[v]);
      adj[t.parent[v]].push_back(v);
    }
  }
  std::vector<char> is_tree(g.num_edges(), 0);
  for (VertexId v = 0; v < n; ++v) {
    if (t.parent[v] < 0) continue;
    // Lowest index among the parallel edges is the tree edge.
    EdgeId best = -1;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto& vs = g.edge(e).vertices;
      if ((vs[0] == v && vs[1] == t.parent[v]) || (vs[1] == v && vs[0] == t.parent[v])) {
        best = e;
        break;
      }
    }
    if (best >= 0) is_tree[best] = 1;
  }
  std::vector<int> count(n, 0);
  std::vector<VertexId> from(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (is_tree[e]) continue;
    const VertexId a = g.edge(e).vertices[0], b = g.edge(e).vertices[1];
    std::fill(from.begin(), from.end(), -2);
    from[a] = -1;
    std::vector<VertexId> queue = {a};
    for (size_t i = 0; i < queue.size(); ++i) {
      for (VertexId w : adj[queue[i]]) {
        if (from[w] == -2) {
          from[w] = queue[i];
          queue.push_back(w);
        }
      }
    }
    for (VertexId x = b; x != -1; x = from[x]) ++count[x];
  }
  return count;
}

namespace {

using Cost = std::pair<int, long long>;

Cost cost_of(const std::vector<int>& lfe, const std::vector<VertexId>& comp) {
  Cost c{0, 0};
  for (VertexId v : comp) {
    c.first = std::max(c.first, lfe[v]);
    c.second += lfe[v];
  }
  return c;
}

// Spanning tree of one component as a parent array (entries outside comp untouched).
void bfs_tree(const ColoredHypergraph& g, VertexId root, std::vector<VertexId>& parent, bool depth_first) {
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<VertexId> frontier = {root};
  seen[root] = 1;
  parent[root] = -1;
  if (!depth_first) {
    for (size_t i = 0; i < frontier.size(); ++i) {
      for (EdgeId e : g.incident(frontier[i])) {
        const VertexId w = other(g.edge(e), frontier[i]);
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = frontier[i];
          frontier.push_back(w);
        }
      }
    }
    return;
  }
  // Iterative DFS: a vertex is attached when first popped.
  std::vector<std::pair<VertexId, VertexId>> stack = {{root, -1}};
  std::fill(seen.begin(), seen.end(), 0);
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    if (seen[v]) continue;
    seen[v] = 1;
    parent[v] = p;
    const auto& inc = g.incident(v);
    for (auto it = inc.rbegin(); it != inc.rend(); ++it) {
      const VertexId w = other(g.edge(*it), v);
      if (!seen[w]) stack.push_back({w, v});
    }
  }
}

// Random spanning tree of a component by Kruskal on shuffled edges.
void random_tree(const ColoredHypergraph& g, const std::vector<VertexId>& comp, std::mt19937_64& rng,
                 std::vector<VertexId>& parent) {
  std::vector<EdgeId> edges;
  for (VertexId v : comp) {
    for (EdgeId e : g.incident(v)) {
      if (g.edge(e).vertices[0] == v) edges.push_back(e);
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<VertexId> uf(g.num_vertices());
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](VertexId x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  std::vector<std::vector<VertexId>> adj(g.num_vertices());
  for (EdgeId e : edges) {
    const VertexId a = g.edge(e).vertices[0], b = g.edge(e).vertices[1];
    if (find(a) == find(b)) continue;
    uf[find(a)] = find(b);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  const VertexId root = comp[std::uniform_int_distribution<size_t>(0, comp.size() - 1)(rng)];
  parent[root] = -1;
  std::vector<VertexId> queue = {root};
  std::vector<char> seen(g.num_vertices(), 0);
  seen[root] = 1;
  for (size_t i = 0; i < queue.size(); ++i) {
    for (VertexId w : adj[queue[i]]) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = queue[i];
        queue.push_back(w);
      }
    }
  }
}

// Re-roots the tree given by adjacency at `root`.
void orient(const std::vector<std::vector<VertexId>>& adj, VertexId root, std::vector<VertexId>& parent) {
  parent[root] = -1;
  std::vector<VertexId> queue = {root};
  for (size_t i = 0; i < queue.size(); ++i) {
    for (VertexId w : adj[queue[i]]) {
      if (w != parent[queue[i]]) {
        parent[w] = queue[i];
        queue.push_back(w);
      }
    }
  }
}

}  // namespace

TreeLayout spanning_tree_search(const ColoredHypergraph& g, int budget, std::uint64_t seed) {
  require_graph(g);
  const int n = g.num_vertices();
  std::vector<VertexId> best_parent(n, -1);
  if (n == 0) return make_layout(g, 0, best_parent);
  std::mt19937_64 rng(seed);
  const auto comps = connected_components(g);
  std::vector<VertexId> roots;
  for (const auto& comp : comps) {
    std::vector<VertexId> cand(n, -1);
    Cost best{1 << 30, 0};
    int evaluations = 0;
    auto consider = [&] {
      ++evaluations;
      const Cost c = cost_of(component_lfe(g, cand, comp), comp);
      if (c < best) {
        best = c;
        for (VertexId v : comp) best_parent[v] = cand[v];
      }
    };
    const int starts = std::min<int>(comp.size(), std::max(1, budget / 4));
    for (int i = 0; i < starts; ++i) {
      const VertexId r = comp[i * comp.size() / starts];
      bfs_tree(g, r, cand, false);
      consider();
      bfs_tree(g, r, cand, true);
      consider();
    }
    if (comp.size() > 2) {
      while (evaluations < budget / 2) {
        random_tree(g, comp, rng, cand);
        consider();
      }
    }
    // Edge swaps: add a non-tree edge, drop a tree edge on its cycle.
    bool improved = true;
    while (improved && evaluations < budget) {
      improved = false;
      std::vector<VertexId> base(n, -1);
      for (VertexId v : comp) base[v] = best_parent[v];
      const auto tree_edge = tree_edges_of(g, base);
      const auto depth = depths(base);
      std::vector<char> is_tree(g.num_edges(), 0);
      for (VertexId v : comp) {
        if (tree_edge[v] >= 0) is_tree[tree_edge[v]] = 1;
      }
      for (VertexId v : comp) {
        for (EdgeId e : g.incident(v)) {
          if (improved || evaluations >= budget) break;
          if (is_tree[e] || g.edge(e).vertices[0] != v) continue;
          const VertexId a = g.edge(e).vertices[0], b = g.edge(e).vertices[1];
          const VertexId l = lca(base, depth, a, b);
          std::vector<VertexId> cycle;
          for (VertexId x = a; x != l; x = base[x]) cycle.push_back(x);
          for (VertexId x = b; x != l; x = base[x]) cycle.push_back(x);
          for (VertexId x : cycle) {
            std::vector<std::vector<VertexId>> adj(n);
            for (VertexId y : comp) {
              if (base[y] >= 0 && y != x) {
                adj[y].push_back(base[y]);
                adj[base[y]].push_back(y);
              }
            }
            adj[a].push_back(b);
            adj[b].push_back(a);
            std::vector<VertexId> trial(n, -1);
            orient(adj, comp.front(), trial);
            cand = trial;
            const Cost before = best;
            consider();
            if (best < before) {
              improved = true;
              break;
            }
            if (evaluations >= budget) break;
          }
        }
        if (improved || evaluations >= budget) break;
      }
    }
    for (VertexId v : comp) {
      if (best_parent[v] == -1) roots.push_back(v);
    }
  }
  // Link component roots under the first one.
  for (size_t i = 1; i < roots.size(); ++i) best_parent[roots[i]] = roots[0];
  return make_layout(g, roots[0], best_parent);
}

void write_layout(std::ostream& out, const TreeLayout& t) {
  out << "t " << t.root << '\n';
  for (VertexId v = 0; v < static_cast<VertexId>(t.parent.size()); ++v) {
    if (v != t.root) out << "p " << v << ' ' << t.parent[v] << '\n';
  }
}

TreeLayout read_layout(std::istream& in, const ColoredHypergraph& g) {
  std::vector<VertexId> parent(g.num_vertices(), -2);
  VertexId root = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tok = tokenize(line);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (tok[0] == "t" && tok.size() == 2) {
      root = static_cast<VertexId>(parse_int(tok[1], lineno, "root"));
      if (root < 0 || root >= g.num_vertices()) throw ParseError(lineno, "root out of range");
      parent[root] = -1;
    } else if (tok[0] == "p" && tok.size() == 3) {
      const auto v = parse_int(tok[1], lineno, "vertex");
      const auto p = parse_int(tok[2], lineno, "parent");
      if (v < 0 || v >= g.num_vertices()) throw ParseError(lineno, "vertex out of range");
      if (parent[v] != -2) throw ParseError(lineno, "vertex listed twice");
      parent[v] = static_cast<VertexId>(p);
    } else {
      throw ParseError(lineno, "expected 't <root>' or 'p <v> <parent>'");
    }
  }
  if (root < 0 && g.num_vertices() > 0) throw ParseError(lineno, "missing root line");
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (parent[v] == -2) throw ParseError(lineno, "no parent for vertex " + std::to_string(v));
  }
  return make_layout(g, std::max(root, 0), parent);
}

SecwDp::SecwDp(const ColoredHypergraph& g, const TreeLayout& t)
    : g_(g), t_(t), colors_(std::max(g.num_colors(), 1)) {
  require_graph(g);
  const int n = g.num_vertices();
  if (static_cast<int>(t.parent.size()) != n || static_cast<int>(t.c1.size()) != n ||
      static_cast<int>(t.preorder.size()) != n) {
    throw PreconditionError("layout does not match the instance");
  }
  boundary_.resize(n);
  local_.resize(n);
  table_.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    auto& b = boundary_[v];
    b = t.c1[v];
    b.insert(b.end(), t.c4[v].begin(), t.c4[v].end());
    std::sort(b.begin(), b.end());
    if (b.size() > 24) throw std::length_error("boundary of vertex " + std::to_string(v) + " exceeds 24 edges");
    auto& loc = local_[v];
    loc.edges = b;
    loc.edges.insert(loc.edges.end(), t.c2[v].begin(), t.c2[v].end());
    loc.edges.insert(loc.edges.end(), t.c3[v].begin(), t.c3[v].end());
    if (loc.edges.size() > 62) throw std::length_error("too many non-tree edges at one vertex");
    const int size = static_cast<int>(loc.edges.size());
    loc.clash.assign(size, 0);
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        const EdgeId a = loc.edges[i], c = loc.edges[j];
        if (g.color(a) != g.color(c) && g.intersects(a, c)) loc.clash[i] |= 1ULL << j;
      }
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    auto& loc = local_[v];
    for (VertexId w : t.children[v]) {
      std::vector<std::pair<int, int>> proj;
      for (size_t j = 0; j < boundary_[w].size(); ++j) {
        const auto it = std::find(loc.edges.begin(), loc.edges.end(), boundary_[w][j]);
        if (it == loc.edges.end()) throw std::logic_error("child boundary edge missing at parent");
        proj.emplace_back(static_cast<int>(it - loc.edges.begin()), static_cast<int>(j));
      }
      loc.project.push_back(std::move(proj));
    }
  }
  for (auto it = t.preorder.rbegin(); it != t.preorder.rend(); ++it) fill(*it);
}

long long SecwDp::value(VertexId v, ColorId c, std::uint32_t mask) const {
  return table_[v][static_cast<size_t>(mask) * colors_ + c];
}

long long SecwDp::best_any(VertexId w, std::uint32_t mask) const {
  long long best = kInvalid;
  for (ColorId c = 0; c < colors_; ++c) best = std::max(best, value(w, c, mask));
  return best;
}

long long SecwDp::evaluate(VertexId v, ColorId c, std::uint32_t mask, EdgeSet* pick,
                           std::vector<Step>* steps) const {
  const auto& loc = local_[v];
  const int nb = static_cast<int>(boundary_[v].size());
  const int n2 = static_cast<int>(t_.c2[v].size());
  const int size = static_cast<int>(loc.edges.size());
  // S ∩ C4(v) fixes the color of v.
  for (int i = 0; i < nb; ++i) {
    if (!(mask >> i & 1) || g_.color(loc.edges[i]) == c) continue;
    const auto& vs = g_.edge(loc.edges[i]).vertices;
    if (vs[0] == v || vs[1] == v) return kInvalid;
  }
  std::uint64_t free = 0;
  for (int i = nb; i < nb + n2; ++i) free |= 1ULL << i;
  for (int i = nb + n2; i < size; ++i) {
    if (g_.color(loc.edges[i]) == c) free |= 1ULL << i;
  }
  long long best = kInvalid;
  std::uint64_t best_set = 0;
  const auto& kids = t_.children[v];
  // Enumerate subsets of `free` (S2 ∪ S3), including the empty one.
  std::uint64_t sub = 0;
  do {
    const std::uint64_t chosen = static_cast<std::uint64_t>(mask) | sub;
    bool stable = true;
    for (int i = 0; i < size && stable; ++i) {
      if ((chosen >> i & 1) && (loc.clash[i] & chosen)) stable = false;
    }
    if (stable) {
      long long total = std::popcount(sub);
      for (size_t k = 0; k < kids.size() && total != kInvalid; ++k) {
        const VertexId w = kids[k];
        std::uint32_t mw = 0;
        for (auto [from, to] : loc.project[k]) {
          if (chosen >> from & 1) mw |= 1u << to;
        }
        long long part = best_any(w, mw);
        const EdgeId te = t_.tree_edge[w];
        if (te >= 0 && g_.color(te) == c && value(w, c, mw) != kInvalid) {
          part = std::max(part, 1 + value(w, c, mw));
        }
        total = part == kInvalid ? kInvalid : total + part;
      }
      if (total > best) {
        best = total;
        best_set = sub;
      }
    }
    sub = (sub - free) & free;
  } while (sub != 0);
  if (pick && best != kInvalid) {
    const std::uint64_t chosen = static_cast<std::uint64_t>(mask) | best_set;
    for (int i = nb; i < size; ++i) {
      if (best_set >> i & 1) pick->push_back(loc.edges[i]);
    }
    for (size_t k = 0; k < kids.size(); ++k) {
      const VertexId w = kids[k];
      std::uint32_t mw = 0;
      for (auto [from, to] : loc.project[k]) {
        if (chosen >> from & 1) mw |= 1u << to;
      }
      ColorId pick_color = 0;
      long long part = kInvalid;
      for (ColorId c2 = 0; c2 < colors_; ++c2) {
        if (value(w, c2, mw) > part) {
          part = value(w, c2, mw);
          pick_color = c2;
        }
      }
      const EdgeId te = t_.tree_edge[w];
      if (te >= 0 && g_.color(te) == c && value(w, c, mw) != kInvalid && 1 + value(w, c, mw) > part) {
        pick->push_back(te);
        pick_color = c;
      }
      steps->push_back({w, pick_color, mw});
    }
  }
  return best;
}

void SecwDp::fill(VertexId v) {
  const int nb = static_cast<int>(boundary_[v].size());
  auto& table = table_[v];
  table.assign((static_cast<size_t>(1) << nb) * colors_, kInvalid);
  const auto& loc = local_[v];
  for (std::uint32_t mask = 0; mask < (1u << nb); ++mask) {
    bool stable = true;
    for (int i = 0; i < nb && stable; ++i) {
      if ((mask >> i & 1) && (loc.clash[i] & mask)) stable = false;
    }
    if (!stable) continue;
    for (ColorId c = 0; c < colors_; ++c) {
      table[static_cast<size_t>(mask) * colors_ + c] = evaluate(v, c, mask, nullptr, nullptr);
    }
  }
}

void SecwDp::collect(VertexId v, ColorId c, std::uint32_t mask, EdgeSet& out) const {
  std::vector<Step> steps;
  evaluate(v, c, mask, &out, &steps);
  for (const Step& s : steps) collect(s.child, s.color, s.mask, out);
}

EdgeSet SecwDp::witness(VertexId v, ColorId c, std::uint32_t mask) const {
  if (value(v, c, mask) == kInvalid) throw PreconditionError("witness requested for an invalid entry");
  EdgeSet out;
  collect(v, c, mask, out);
  std::sort(out.begin(), out.end());
  return out;
}

Solution SecwDp::solve() const {
  Solution s;
  if (g_.num_vertices() == 0) return s;
  ColorId best_c = 0;
  for (ColorId c = 0; c < colors_; ++c) {
    if (value(t_.root, c, 0) > value(t_.root, best_c, 0)) best_c = c;
  }
  s.size = static_cast<int>(value(t_.root, best_c, 0));
  s.witness = witness(t_.root, best_c, 0);
  return s;
}

Solution solve_secw_dp(const Instance& inst, const TreeLayout& layout) {
  return SecwDp(inst.graph, layout).solve();
}

bool is_forest(const ColoredHypergraph& g) {
  if (!g.is_graph()) return false;
  return feedback_edges(g).empty();
}

EdgeSet feedback_edges(const ColoredHypergraph& g) {
  require_graph(g);
  std::vector<VertexId> uf(g.num_vertices());
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](VertexId x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const VertexId a = find(g.edge(e).vertices[0]), b = find(g.edge(e).vertices[1]);
    if (a == b) {
      out.push_back(e);
    } else {
      uf[a] = b;
    }
  }
  return out;
}

EdgeSet rare_color_edges(const ColoredHypergraph& g) {
  std::vector<int> count(g.num_colors(), 0);
  for (const Edge& e : g.edges()) ++count[e.color];
  std::vector<ColorId> order(g.num_colors());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](ColorId a, ColorId b) { return count[a] > count[b]; });
  std::vector<char> common(g.num_colors(), 0);
  for (size_t i = 0; i < order.size() && i < 2; ++i) common[order[i]] = 1;
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!common[g.color(e)]) out.push_back(e);
  }
  return out;
}

Solution forest_dp(const Instance& inst) {
  const auto& g = inst.graph;
  if (!is_forest(g)) throw PreconditionError("forest_dp needs a forest");
  const int n = g.num_vertices();
  const int colors = std::max(g.num_colors(), 1);
  std::vector<VertexId> parent(n, -2);
  std::vector<EdgeId> up(n, -1);
  std::vector<VertexId> order;
  for (VertexId s = 0; s < n; ++s) {
    if (parent[s] != -2) continue;
    parent[s] = -1;
    order.push_back(s);
    for (size_t i = order.size() - 1; i < order.size(); ++i) {
      const VertexId v = order[i];
      for (EdgeId e : g.incident(v)) {
        const VertexId w = other(g.edge(e), v);
        if (parent[w] == -2) {
          parent[w] = v;
          up[w] = e;
          order.push_back(w);
        }
      }
    }
  }
  // d[v][c]: best count in the subtree of v with v colored c.
  std::vector<std::vector<int>> d(n, std::vector<int>(colors, 0));
  std::vector<int> best(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId w = *it;
    best[w] = *std::max_element(d[w].begin(), d[w].end());
    if (parent[w] < 0) continue;
    const ColorId c = g.color(up[w]);
    for (ColorId pc = 0; pc < colors; ++pc) {
      d[parent[w]][pc] += pc == c ? std::max(best[w], 1 + d[w][c]) : best[w];
    }
  }
  Solution s;
  std::vector<ColorId> color(n, 0);
  for (VertexId v : order) {
    if (parent[v] < 0) {
      color[v] = static_cast<ColorId>(std::max_element(d[v].begin(), d[v].end()) - d[v].begin());
      s.size += best[v];
      continue;
    }
    const ColorId c = g.color(up[v]);
    if (color[parent[v]] == c && 1 + d[v][c] > best[v]) {
      color[v] = c;
      s.witness.push_back(up[v]);
    } else {
      color[v] = static_cast<ColorId>(std::max_element(d[v].begin(), d[v].end()) - d[v].begin());
    }
  }
  std::sort(s.witness.begin(), s.witness.end());
  return s;
}

namespace {

Solution solve_class(const ColoredHypergraph& g, DeletionClass cls) {
  if (cls == DeletionClass::Forest) return forest_dp({g, 0});
  // Compress the (at most two) used colors to 0 and 1.
  std::vector<ColorId> remap(g.num_colors(), -1);
  int used = 0;
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    if (remap[e.color] < 0) remap[e.color] = used++;
    e.color = remap[e.color];
  }
  return solve_two_colors({ColoredHypergraph(g.num_vertices(), std::max(used, 1), std::move(edges)), 0});
}

bool in_class(const ColoredHypergraph& g, DeletionClass cls) {
  if (cls == DeletionClass::Forest) return is_forest(g);
  std::vector<char> used(g.num_colors(), 0);
  int distinct = 0;
  for (const Edge& e : g.edges()) {
    if (!used[e.color]) {
      used[e.color] = 1;
      ++distinct;
    }
  }
  return distinct <= 2;
}

}  // namespace

Solution solve_deletion_wrapper(const Instance& inst, const EdgeSet& deletion, DeletionClass cls) {
  const auto& g = inst.graph;
  std::vector<char> in_deletion(g.num_edges(), 0);
  for (EdgeId e : deletion) {
    if (e < 0 || e >= g.num_edges()) throw PreconditionError("deletion set index out of range");
    in_deletion[e] = 1;
  }
  EdgeSet rest;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!in_deletion[e]) rest.push_back(e);
  }
  if (!in_class(edge_subgraph(g, rest), cls)) throw PreconditionError("graph minus deletion set is not in the class");
  EdgeSet del;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (in_deletion[e]) del.push_back(e);
  }
  if (del.size() > 30) throw std::length_error("deletion set too large to enumerate");

  Solution best;
  best.size = -1;
  std::vector<ColorId> claim(g.num_vertices());
  for (std::uint64_t mask = 0; mask < (1ULL << del.size()); ++mask) {
    EdgeSet f;
    for (size_t i = 0; i < del.size(); ++i) {
      if (mask >> i & 1) f.push_back(del[i]);
    }
    if (!is_stable(g, f)) continue;
    std::fill(claim.begin(), claim.end(), -1);
    for (EdgeId e : f) {
      for (VertexId v : g.edge(e).vertices) claim[v] = g.color(e);
    }
    EdgeSet keep;
    for (EdgeId e : rest) {
      const auto& vs = g.edge(e).vertices;
      if (std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return claim[v] < 0 || claim[v] == g.color(e); })) {
        keep.push_back(e);
      }
    }
    std::vector<EdgeId> origin;
    const auto residual = edge_subgraph(g, keep, &origin);
    const auto part = solve_class(residual, cls);
    if (part.size + static_cast<int>(f.size()) > best.size) {
      best.size = part.size + static_cast<int>(f.size());
      best.witness = f;
      for (EdgeId e : part.witness) best.witness.push_back(origin[e]);
      std::sort(best.witness.begin(), best.witness.end());
    }
  }
  return best;
}

}  // namespace cclust

#include "cclust/exactcover.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace cclust {

namespace {

// Connected components of the color-c edges, as sorted vertex lists.
std::vector<std::vector<VertexId>> color_components(const ColoredHypergraph& g, ColorId c,
                                                    std::vector<std::vector<EdgeId>>& comp_edges) {
  std::vector<int> parent(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) parent[v] = v;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<char> touched(g.num_vertices(), 0);
  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (g.color(e) != c) continue;
    edges.push_back(e);
    const auto& vs = g.edge(e).vertices;
    for (VertexId v : vs) {
      touched[v] = 1;
      parent[find(v)] = find(vs[0]);
    }
  }
  std::map<int, int> index;
  std::vector<std::vector<VertexId>> comps;
  comp_edges.clear();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!touched[v]) continue;
    auto [it, fresh] = index.emplace(find(v), static_cast<int>(comps.size()));
    if (fresh) {
      comps.emplace_back();
      comp_edges.emplace_back();
    }
    comps[it->second].push_back(v);
  }
  for (EdgeId e : edges) comp_edges[index.at(find(g.edge(e).vertices[0]))].push_back(e);
  return comps;
}

bool inside(const std::vector<char>& member, const Edge& e) {
  return std::all_of(e.vertices.begin(), e.vertices.end(), [&](VertexId v) { return member[v]; });
}

}  // namespace

WecReduction reduce_to_wec(const Instance& inst) {
  const auto& g = inst.graph;
  const int k = inst.k;
  const int d = std::max(g.order(), 2);
  WecReduction red;
  red.num_vertices = g.num_vertices();
  if (k <= 0) {
    red.decided_yes = true;
    return red;
  }
  WecInstance& w = red.wec;
  w.s = d * k;
  w.target = k;
  w.universe = g.num_vertices() + w.s;
  std::vector<char> member(g.num_vertices(), 0);
  for (ColorId c = 0; c < g.num_colors(); ++c) {
    std::vector<std::vector<EdgeId>> comp_edges;
    const auto comps = color_components(g, c, comp_edges);
    if (static_cast<int>(comps.size()) >= k) {
      red.decided_yes = true;
      for (int p = 0; p < k; ++p) red.witness.push_back(comp_edges[p].front());
      std::sort(red.witness.begin(), red.witness.end());
      return red;
    }
    for (size_t p = 0; p < comps.size(); ++p) {
      if (static_cast<int>(comp_edges[p].size()) >= k) {
        red.decided_yes = true;
        red.witness = comp_edges[p];
        return red;
      }
    }
    for (size_t p = 0; p < comps.size(); ++p) {
      const auto& q = comps[p];
      if (static_cast<int>(q.size()) > d * (k - 1)) {
        throw std::logic_error("reduce_to_wec: component of " + std::to_string(q.size()) +
                               " vertices exceeds d(k-1)");
      }
      if (q.size() > 30) throw std::length_error("reduce_to_wec: component too large to expand");
      for (unsigned mask = 1; mask < (1u << q.size()); ++mask) {
        std::vector<int> x;
        for (size_t i = 0; i < q.size(); ++i) {
          if (mask >> i & 1) {
            x.push_back(q[i]);
            member[q[i]] = 1;
          }
        }
        long long weight = 0;
        for (EdgeId e : comp_edges[p]) weight += inside(member, g.edge(e));
        for (int v : x) member[v] = 0;
        w.sets.push_back(std::move(x));
        w.weights.push_back(weight);
        red.set_color.push_back(c);
      }
    }
  }
  for (int i = 0; i < w.s; ++i) {
    w.sets.push_back({g.num_vertices() + i});
    w.weights.push_back(0);
    red.set_color.push_back(-1);
  }
  const long long bound = static_cast<long long>(g.num_colors()) * k * (1LL << std::min(62, k)) + w.s;
  if (g.is_graph() && static_cast<long long>(w.sets.size()) > bound) {
    throw std::logic_error("reduce_to_wec: set count exceeds |C| k 2^k + 2k");
  }
  return red;
}

namespace {

constexpr long long kInfeasible = std::numeric_limits<long long>::min() / 4;

class WecSearch {
 public:
  explicit WecSearch(const WecInstance& w) : w_(w), owned_(w.universe) {
    for (size_t i = 0; i < w.sets.size(); ++i) owned_[w.sets[i].front()].push_back(static_cast<int>(i));
    // free_tail_[i]: every element >= i only occurs in weight-0 singletons.
    std::vector<char> plain(w.universe, 1);
    for (size_t i = 0; i < w.sets.size(); ++i) {
      if (w.sets[i].size() > 1 || w.weights[i] != 0) {
        for (int x : w.sets[i]) plain[x] = 0;
      }
    }
    free_tail_.assign(w.universe + 1, 1);
    for (int i = w.universe - 1; i >= 0; --i) free_tail_[i] = free_tail_[i + 1] && plain[i];
    singleton_.assign(w.universe, 0);
    for (size_t i = 0; i < w.sets.size(); ++i) {
      if (w.sets[i].size() == 1 && w.weights[i] == 0) singleton_[w.sets[i][0]] = 1;
    }
    covered_.assign(w.universe, 0);
  }

  std::optional<std::vector<int>> run() {
    const long long best = value(0, 0);
    if (best == kInfeasible || best < w_.target) return std::nullopt;
    std::vector<int> chosen;
    rebuild(0, 0, chosen);
    return chosen;
  }

 private:
  std::string key(int i, int count) const {
    std::string k(reinterpret_cast<const char*>(&i), sizeof i);
    k.append(reinterpret_cast<const char*>(&count), sizeof count);
    for (int x = i; x < w_.universe; x += 8) {
      char byte = 0;
      for (int b = 0; b < 8 && x + b < w_.universe; ++b) byte |= static_cast<char>(covered_[x + b] << b);
      k.push_back(byte);
    }
    return k;
  }

  bool fits(int set) const {
    return std::none_of(w_.sets[set].begin(), w_.sets[set].end(), [&](int x) { return covered_[x]; });
  }

  void mark(int set, char on) {
    for (int x : w_.sets[set]) covered_[x] = on;
  }

  // Best weight from element i on, with `count` elements covered so far.
  long long value(int i, int count) {
    if (count > w_.s) return kInfeasible;
    while (i < w_.universe && covered_[i]) ++i;
    if (i == w_.universe) return count == w_.s ? 0 : kInfeasible;
    if (free_tail_[i]) {
      // Only zero-weight singletons remain: fill up with them or not at all.
      int open = 0;
      for (int x = i; x < w_.universe; ++x) open += !covered_[x] && singleton_[x];
      return count <= w_.s && w_.s <= count + open ? 0 : kInfeasible;
    }
    const std::string k = key(i, count);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    long long best = value(i + 1, count);  // leave i uncovered
    for (int set : owned_[i]) {
      if (!fits(set)) continue;
      mark(set, 1);
      const long long sub = value(i + 1, count + static_cast<int>(w_.sets[set].size()));
      mark(set, 0);
      if (sub != kInfeasible) best = std::max(best, sub + w_.weights[set]);
    }
    memo_.emplace(k, best);
    return best;
  }

  void rebuild(int i, int count, std::vector<int>& chosen) {
    while (i < w_.universe && covered_[i]) ++i;
    if (i == w_.universe) return;
    const long long target = value(i, count);
    if (free_tail_[i]) {
      for (int x = i; x < w_.universe && count < w_.s; ++x) {
        if (covered_[x] || !singleton_[x]) continue;
        for (int set : owned_[x]) {
          if (w_.sets[set].size() == 1 && w_.weights[set] == 0) {
            chosen.push_back(set);
            ++count;
            break;
          }
        }
      }
      return;
    }
    for (int set : owned_[i]) {
      if (!fits(set)) continue;
      mark(set, 1);
      const long long sub = value(i + 1, count + static_cast<int>(w_.sets[set].size()));
      if (sub != kInfeasible && sub + w_.weights[set] == target) {
        chosen.push_back(set);
        rebuild(i + 1, count + static_cast<int>(w_.sets[set].size()), chosen);
        return;
      }
      mark(set, 0);
    }
    rebuild(i + 1, count, chosen);
  }

  const WecInstance& w_;
  std::vector<std::vector<int>> owned_;
  std::vector<char> free_tail_, singleton_, covered_;
  std::unordered_map<std::string, long long> memo_;
};

}  // namespace

std::optional<std::vector<int>> solve_wec(const WecInstance& w) {
  for (const auto& set : w.sets) {
    if (set.empty()) throw std::invalid_argument("solve_wec: empty set");
  }
  return WecSearch(w).run();
}

std::optional<long long> brute_force_wec(const WecInstance& w) {
  const size_t n = w.sets.size();
  if (n > 24) throw std::invalid_argument("brute_force_wec: too many sets");
  std::optional<long long> best;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<char> used(w.universe, 0);
    int count = 0;
    long long weight = 0;
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int x : w.sets[i]) {
        if (used[x]) ok = false;
        used[x] = 1;
      }
      count += static_cast<int>(w.sets[i].size());
      weight += w.weights[i];
    }
    if (ok && count == w.s && (!best || weight > *best)) best = weight;
  }
  return best;
}

EdgeSet edges_from_family(const WecReduction& red, const ColoredHypergraph& g,
                          const std::vector<int>& family) {
  std::vector<char> member(g.num_vertices(), 0);
  EdgeSet out;
  for (int set : family) {
    const ColorId c = red.set_color[set];
    if (c < 0) continue;
    for (int v : red.wec.sets[set]) member[v] = 1;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (g.color(e) == c && inside(member, g.edge(e))) out.push_back(e);
    }
    for (int v : red.wec.sets[set]) member[v] = 0;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Decision solve_via_exactcover(const Instance& inst) {
  if (inst.k <= 0) return {true, {}};
  if (inst.k > inst.graph.num_edges()) return {false, {}};
  const auto red = reduce_to_wec(inst);
  if (red.decided_yes) return {true, red.witness};
  const auto family = solve_wec(red.wec);
  if (!family) return {false, {}};
  return {true, edges_from_family(red, inst.graph, *family)};
}

std::optional<std::vector<int>> wec_family_for(const WecReduction& red, const ColoredHypergraph& g,
                                               const EdgeSet& stable_set) {
  if (!is_stable(g, stable_set)) return std::nullopt;
  std::map<std::pair<ColorId, std::vector<int>>, int> lookup;
  for (size_t i = 0; i < red.wec.sets.size(); ++i) {
    lookup.emplace(std::make_pair(red.set_color[i], red.wec.sets[i]), static_cast<int>(i));
  }
  // Components of (V, F) with at least one edge.
  const auto sub = edge_subgraph(g, stable_set);
  std::vector<int> family;
  int covered = 0;
  for (const auto& comp : connected_components(sub)) {
    if (sub.degree(comp.front()) == 0) continue;
    const ColorId c = sub.color(sub.incident(comp.front()).front());
    auto it = lookup.find({c, comp});
    if (it == lookup.end()) return std::nullopt;
    family.push_back(it->second);
    covered += static_cast<int>(comp.size());
  }
  for (int i = 0; covered < red.wec.s && i < red.wec.s; ++i) {
    family.push_back(lookup.at({-1, {red.num_vertices + i}}));
    ++covered;
  }
  if (covered != red.wec.s) return std::nullopt;
  return family;
}

void write_wec(std::ostream& out, const WecInstance& w) {
  out << "p wec " << w.universe << ' ' << w.sets.size() << ' ' << w.s << ' ' << w.target << '\n';
  for (size_t i = 0; i < w.sets.size(); ++i) {
    out << "s " << w.weights[i];
    for (int x : w.sets[i]) out << ' ' << x;
    out << '\n';
  }
}

}  // namespace cclust

#include "cclust/aboveguarantee.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "cclust/bounds.hpp"

namespace cclust {

namespace {

void require_induced(const ColoredHypergraph& g, const EdgeSet& m) {
  if (!is_induced_matching(g, m)) throw PreconditionError("matching is not induced");
}

// Edges meeting e (including e).
std::vector<EdgeId> around(const ColoredHypergraph& g, EdgeId e) {
  std::vector<EdgeId> out;
  for (VertexId v : g.edge(e).vertices) {
    for (EdgeId f : g.incident(v)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int count_stable(const ColoredHypergraph& g, const std::vector<EdgeId>& edges, const VertexColoring& f) {
  int n = 0;
  for (EdgeId e : edges) {
    const auto& vs = g.edge(e).vertices;
    n += std::all_of(vs.begin(), vs.end(), [&](VertexId v) { return f[v] == g.color(e); });
  }
  return n;
}

}  // namespace

VertexColoring reconstruct(const ColoredHypergraph& g, const EdgeSet& m, const VertexColoring& f,
                           ReconstructRule rule) {
  require_induced(g, m);
  VertexColoring out = f;
  // Neighborhoods of induced matching edges are disjoint, so each edge is
  // decided against the original f independently.
  for (EdgeId e : m) {
    const auto near = around(g, e);
    const int keep = count_stable(g, near, f);
    bool recolor = false;
    if (rule == ReconstructRule::TwoStable) {
      recolor = keep < 2;
    } else {
      VertexColoring trial = f;
      for (VertexId v : g.edge(e).vertices) trial[v] = g.color(e);
      recolor = count_stable(g, near, trial) > keep;
    }
    if (recolor) {
      for (VertexId v : g.edge(e).vertices) out[v] = g.color(e);
    }
  }
  return out;
}

long long default_repetitions(const Instance& inst, int matching_size, double epsilon) {
  const int d = std::max(inst.graph.order(), 2);
  const int gap = std::max(inst.k - matching_size, 0);
  const double exponent = 2.0 * d * gap;
  const double reps = std::pow(static_cast<double>(std::max(inst.graph.num_colors(), 1)), exponent) *
                      std::log(1.0 / epsilon);
  if (!(reps < 9e18)) return std::numeric_limits<long long>::max();
  return std::max(1LL, static_cast<long long>(std::ceil(reps)));
}

ColorCodingResult solve_color_coding(const Instance& inst, const ColorCodingConfig& cfg) {
  const auto& g = inst.graph;
  require_induced(g, cfg.matching);
  if (!(cfg.epsilon > 0 && cfg.epsilon < 1)) throw PreconditionError("epsilon must lie in (0,1)");
  ColorCodingResult res;
  res.epsilon = cfg.epsilon;
  const int msize = static_cast<int>(cfg.matching.size());
  if (inst.k <= msize) {
    res.yes = true;
    res.witness.assign(cfg.matching.begin(), cfg.matching.begin() + std::max(inst.k, 0));
    return res;
  }
  if (inst.k > g.num_edges()) return res;
  res.repetitions = cfg.repetitions > 0 ? cfg.repetitions : default_repetitions(inst, msize, cfg.epsilon);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<ColorId> pick(0, std::max(g.num_colors(), 1) - 1);
  VertexColoring f(g.num_vertices());
  for (res.used = 0; res.used < res.repetitions;) {
    ++res.used;
    for (auto& c : f) c = pick(rng);
    const auto stable = stable_under(g, reconstruct(g, cfg.matching, f, cfg.rule));
    if (static_cast<int>(stable.size()) >= inst.k && is_stable(g, stable)) {
      res.yes = true;
      res.witness = stable;
      return res;
    }
  }
  return res;
}

namespace {

class XpSearch {
 public:
  XpSearch(const ColoredHypergraph& g, const EdgeSet& m, int k) : g_(g), m_(m), k_(k) {
    std::vector<char> in_m(g.num_edges(), 0);
    for (EdgeId e : m) in_m[e] = 1;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (!in_m[e]) rest_.push_back(e);
    }
    claim_.assign(g.num_vertices(), -1);
    claim_count_.assign(g.num_vertices(), 0);
    budget_ = 2 * (k - static_cast<int>(m.size()));
  }

  bool run() { return descend(0); }
  EdgeSet witness() const { return witness_; }

 private:
  bool fits(EdgeId e) const {
    for (VertexId v : g_.edge(e).vertices) {
      if (claim_[v] != -1 && claim_[v] != g_.color(e)) return false;
    }
    return true;
  }

  void place(EdgeId e, int delta) {
    for (VertexId v : g_.edge(e).vertices) {
      claim_count_[v] += delta;
      claim_[v] = claim_count_[v] > 0 ? g_.color(e) : -1;
    }
  }

  // Matching edges compatible with the current F'.
  bool extend() {
    EdgeSet total = chosen_;
    for (EdgeId e : m_) {
      if (fits(e)) total.push_back(e);
    }
    if (static_cast<int>(total.size()) < k_) return false;
    std::sort(total.begin(), total.end());
    witness_ = total;
    return true;
  }

  bool descend(size_t from) {
    if (extend()) return true;
    if (static_cast<int>(chosen_.size()) == budget_) return false;
    for (size_t i = from; i < rest_.size(); ++i) {
      const EdgeId e = rest_[i];
      if (!fits(e)) continue;
      place(e, 1);
      chosen_.push_back(e);
      if (descend(i + 1)) return true;
      chosen_.pop_back();
      place(e, -1);
    }
    return false;
  }

  const ColoredHypergraph& g_;
  const EdgeSet& m_;
  int k_;
  int budget_ = 0;
  std::vector<EdgeId> rest_, chosen_;
  std::vector<ColorId> claim_;
  std::vector<int> claim_count_;
  EdgeSet witness_;
};

}  // namespace

Decision solve_xp(const Instance& inst, const EdgeSet& matching) {
  const auto& g = inst.graph;
  require_induced(g, matching);
  if (inst.k <= static_cast<int>(matching.size())) {
    EdgeSet w(matching.begin(), matching.begin() + std::max(inst.k, 0));
    std::sort(w.begin(), w.end());
    return {true, w};
  }
  if (inst.k > g.num_edges()) return {false, {}};
  XpSearch search(g, matching, inst.k);
  if (!search.run()) return {false, {}};
  return {true, search.witness()};
}

}  // namespace cclust

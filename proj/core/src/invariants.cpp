#include "chromadisc/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

#include "detail/partition_search.hpp"

namespace chromadisc {

SolverBudget SolverBudget::from_environment() {
  SolverBudget budget;
  if (const char* env = std::getenv("CHROMADISC_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || value < 0 || value > kMaxVertices) {
      throw GraphError(std::string("CHROMADISC_BUDGET must be a vertex count in [0, 64], got '") +
                       env + "'");
    }
    budget.max_vertices = static_cast<int>(value);
  }
  return budget;
}

// ---------------------------------------------------------------------------
// Coloring

Coloring::Coloring(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {
  std::sort(blocks_.begin(), blocks_.end(),
            [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
}

Coloring Coloring::trusted(std::vector<VertexSet> blocks) { return Coloring(std::move(blocks)); }

Coloring Coloring::from_blocks(const Graph& g, std::vector<VertexSet> blocks) {
  Coloring c(std::move(blocks));
  if (!is_proper_partition(g, c)) {
    throw GraphError("blocks do not form a proper coloring of the graph");
  }
  return c;
}

Coloring Coloring::from_labels(const Graph& g, std::span<const int> labels) {
  if (static_cast<int>(labels.size()) != g.order()) {
    throw GraphError("coloring has " + std::to_string(labels.size()) + " labels for " +
                     std::to_string(g.order()) + " vertices");
  }
  std::map<int, Mask> classes;
  for (int v = 0; v < g.order(); ++v) {
    classes[labels[static_cast<std::size_t>(v)]] |= bits::bit(v);
  }
  std::vector<VertexSet> blocks;
  for (const auto& [label, members] : classes) {
    blocks.emplace_back(members);
  }
  return from_blocks(g, std::move(blocks));
}

int Coloring::color_of(int v) const {
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].contains(v)) {
      return static_cast<int>(b);
    }
  }
  return -1;
}

int Coloring::colors_in(Mask s) const {
  return static_cast<int>(std::count_if(blocks_.begin(), blocks_.end(),
                                        [s](VertexSet b) { return (b.bits() & s) != 0; }));
}

bool Coloring::is_complete(const Graph& g) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Mask reach = g.neighbors_of(blocks_[i].bits());
    for (std::size_t j = i + 1; j < blocks_.size(); ++j) {
      if ((reach & blocks_[j].bits()) == 0) {
        return false;
      }
    }
  }
  return true;
}

bool is_proper_partition(const Graph& g, const Coloring& c) {
  Mask seen = 0;
  for (VertexSet b : c.blocks()) {
    if (b.empty() || (b.bits() & seen) != 0 || !b.subset_of(g.vertex_set()) ||
        !g.is_independent(b.bits())) {
      return false;
    }
    seen |= b.bits();
  }
  return seen == g.vertices();
}

// ---------------------------------------------------------------------------
// Chromatic number

namespace {

int greedy_color_count(const Graph& g, Mask s) {
  int colors = 0;
  while (s != 0) {
    Mask cls = 0;
    Mask avail = s;
    while (avail != 0) {
      const int v = bits::lowest(avail);
      cls |= bits::bit(v);
      avail &= ~g.closed_neighbors(v);
    }
    s &= ~cls;
    ++colors;
  }
  return colors;
}

Mask greedy_clique(const Graph& g, Mask s) {
  Mask best = 0;
  bits::for_each(s, [&](int start) {
    Mask clique = bits::bit(start);
    Mask cand = g.neighbors(start) & s;
    while (cand != 0) {
      int pick = -1;
      int pick_deg = -1;
      bits::for_each(cand, [&](int v) {
        const int d = bits::count(g.neighbors(v) & cand);
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      });
      clique |= bits::bit(pick);
      cand &= g.neighbors(pick);
    }
    if (bits::count(clique) > bits::count(best)) {
      best = clique;
    }
  });
  return best;
}

/// DSATUR backtracking for a fixed color count.
class FixedColorer {
 public:
  FixedColorer(const Graph& g, int k) : g_(g), k_(k) {}

  bool solve(Mask uncolored) {
    if (uncolored == 0) {
      return true;
    }
    int pick = -1;
    int pick_sat = -1;
    int pick_deg = -1;
    Mask pick_forbidden = 0;
    bool dead = false;
    bits::for_each(uncolored, [&](int v) {
      if (dead) {
        return;
      }
      const Mask nb = g_.neighbors(v);
      Mask forbidden = 0;
      for (int c = 0; c < used_; ++c) {
        if ((classes_[static_cast<std::size_t>(c)] & nb) != 0) {
          forbidden |= bits::bit(c);
        }
      }
      const int sat = bits::count(forbidden);
      if (sat >= k_) {
        dead = true;
        return;
      }
      const int deg = bits::count(nb & uncolored);
      if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
        pick = v;
        pick_sat = sat;
        pick_deg = deg;
        pick_forbidden = forbidden;
      }
    });
    if (dead) {
      return false;
    }
    const Mask rest = uncolored & ~bits::bit(pick);
    for (int c = 0; c < used_; ++c) {
      if ((pick_forbidden >> c) & 1U) {
        continue;
      }
      classes_[static_cast<std::size_t>(c)] |= bits::bit(pick);
      if (solve(rest)) {
        return true;
      }
      classes_[static_cast<std::size_t>(c)] &= ~bits::bit(pick);
    }
    if (used_ < k_) {
      classes_[static_cast<std::size_t>(used_++)] = bits::bit(pick);
      if (solve(rest)) {
        return true;
      }
      --used_;
    }
    return false;
  }

  std::vector<VertexSet> classes() const {
    std::vector<VertexSet> out;
    for (int c = 0; c < used_; ++c) {
      out.emplace_back(classes_[static_cast<std::size_t>(c)]);
    }
    return out;
  }

 private:
  const Graph& g_;
  int k_;
  int used_ = 0;
  std::array<Mask, kMaxVertices> classes_{};
};

/// Returns χ(s) and, when requested, an optimal set of color classes.
int chromatic_search(const Graph& g, Mask s, std::vector<VertexSet>* classes) {
  if (s == 0) {
    return 0;
  }
  if (g.is_independent(s)) {
    if (classes != nullptr) {
      *classes = {VertexSet(s)};
    }
    return 1;
  }
  const int lower = bits::count(greedy_clique(g, s));
  const int upper = greedy_color_count(g, s);
  for (int k = lower; k < upper; ++k) {
    FixedColorer colorer(g, k);
    if (colorer.solve(s)) {
      if (classes != nullptr) {
        *classes = colorer.classes();
      }
      return k;
    }
  }
  if (classes != nullptr) {
    FixedColorer colorer(g, upper);
    colorer.solve(s);
    *classes = colorer.classes();
  }
  return upper;
}

}  // namespace

ChromaticResult chromatic_number(const Graph& g) {
  std::vector<VertexSet> classes;
  const int k = chromatic_search(g, g.vertices(), &classes);
  return {k, Coloring::from_blocks(g, std::move(classes))};
}

int chromatic_number_of(const Graph& g, Mask s) { return chromatic_search(g, s & g.vertices(), nullptr); }

bool is_colorable(const Graph& g, Mask s, int k) {
  s &= g.vertices();
  if (s == 0) {
    return k >= 0;
  }
  if (k <= 0) {
    return false;
  }
  FixedColorer colorer(g, k);
  return colorer.solve(s);
}

// ---------------------------------------------------------------------------
// Cliques and friends

namespace {

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  Mask run(Mask s) {
    best_ = greedy_clique(g_, s);
    best_size_ = bits::count(best_);
    extend(0, 0, s);
    return best_;
  }

 private:
  void extend(Mask clique, int size, Mask cand) {
    if (cand == 0) {
      if (size > best_size_) {
        best_ = clique;
        best_size_ = size;
      }
      return;
    }
    if (size + greedy_color_count(g_, cand) <= best_size_) {
      return;
    }
    int pick = -1;
    int pick_deg = -1;
    bits::for_each(cand, [&](int v) {
      const int d = bits::count(g_.neighbors(v) & cand);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });
    extend(clique | bits::bit(pick), size + 1, cand & g_.neighbors(pick));
    extend(clique, size, cand & ~bits::bit(pick));
  }

  const Graph& g_;
  Mask best_ = 0;
  int best_size_ = 0;
};

}  // namespace

Mask maximum_clique(const Graph& g, Mask s) {
  s &= g.vertices();
  return s == 0 ? 0 : CliqueSearch(g).run(s);
}

int clique_number_of(const Graph& g, Mask s) { return bits::count(maximum_clique(g, s)); }

int clique_number(const Graph& g) { return clique_number_of(g, g.vertices()); }

int independence_number(const Graph& g) { return clique_number(complement(g)); }

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    best = std::max(best, g.degree(v));
  }
  return best;
}

bool is_triangle_free(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    const Mask nb = g.neighbors(v);
    bool found = false;
    bits::for_each(nb, [&](int u) { found = found || (g.neighbors(u) & nb) != 0; });
    if (found) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Partition enumeration

void for_each_proper_partition(const Graph& g, const PartitionFilter& filter,
                               const std::function<bool(const Coloring&)>& visit) {
  detail::SearchLimits limits;
  limits.require_complete = filter.complete_only;
  if (filter.max_colors) {
    limits.max_blocks = std::max(0, *filter.max_colors);
  }
  detail::NodeBudget budget(SolverBudget{}.max_search_nodes);
  auto leaf = [&](detail::PartialColoring& pc) { return visit(pc.to_coloring()); };
  detail::LeafOnly<decltype(leaf)> hooks{leaf};
  detail::search_partitions(g, limits, budget, hooks);
}

std::vector<Coloring> proper_partitions(const Graph& g, const PartitionFilter& filter) {
  std::vector<Coloring> out;
  for_each_proper_partition(g, filter, [&](const Coloring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

int max_closed_neighborhood_colors(const Graph& g, const Coloring& c) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    best = std::max(best, c.colors_in(g.closed_neighbors(v)));
  }
  return best;
}

namespace {

/// Branch and bound for ψ. seen[u] holds the colors present among the
/// assigned part of N[u]; its popcount only grows as vertices are added.
struct LocalChromaticHooks {
  const Graph& g;
  int best;
  std::vector<std::array<Mask, kMaxVertices>> saved;
  std::array<Mask, kMaxVertices> seen{};

  bool enter(detail::PartialColoring& pc, int v) {
    saved.push_back(seen);
    const Mask color = bits::bit(pc.color[static_cast<std::size_t>(v)]);
    int worst = 0;
    bits::for_each(g.closed_neighbors(v) & pc.assigned, [&](int u) {
      auto& s = seen[static_cast<std::size_t>(u)];
      s |= color;
      worst = std::max(worst, bits::count(s));
    });
    auto& own = seen[static_cast<std::size_t>(v)];
    bits::for_each(g.neighbors(v) & pc.assigned,
                   [&](int u) { own |= bits::bit(pc.color[static_cast<std::size_t>(u)]); });
    worst = std::max(worst, bits::count(own));
    return worst < best && lower_bound() < best;
  }

  int lower_bound() const {
    int worst = 0;
    for (const Mask s : seen) {
      worst = std::max(worst, bits::count(s));
    }
    return worst;
  }

  void leave(detail::PartialColoring&, int) {
    seen = saved.back();
    saved.pop_back();
  }

  bool leaf(detail::PartialColoring&) {
    best = lower_bound();
    return true;
  }
};

struct AchromaticHooks {
  int best;
  int cap;

  bool enter(detail::PartialColoring& pc, int v) {
    return pc.blocks + (pc.n - v - 1) > best;
  }
  void leave(detail::PartialColoring&, int) {}
  bool leaf(detail::PartialColoring& pc) {
    best = std::max(best, pc.blocks);
    return best < cap;
  }
};

}  // namespace

int local_chromatic_number(const Graph& g, const SolverBudget& budget) {
  if (g.order() == 0) {
    throw GraphError("local chromatic number is undefined for the empty graph");
  }
  const ChromaticResult chi = chromatic_number(g);
  LocalChromaticHooks hooks{g, max_closed_neighborhood_colors(g, chi.coloring), {}, {}};
  detail::NodeBudget nodes(budget.max_search_nodes);
  detail::SearchLimits limits;
  limits.require_complete = true;
  detail::search_partitions(g, limits, nodes, hooks);
  return hooks.best;
}

int achromatic_number(const Graph& g, const SolverBudget& budget) {
  if (g.order() == 0) {
    return 0;
  }
  // A complete coloring with k blocks needs k(k-1)/2 distinct edges.
  const int m = g.edge_count();
  int cap = 1;
  while (cap < g.order() && (cap + 1) * cap / 2 <= m) {
    ++cap;
  }
  const int chi = chromatic_number(g).value;
  if (chi == cap) {
    return chi;
  }
  AchromaticHooks hooks{chi, cap};
  detail::NodeBudget nodes(budget.max_search_nodes);
  detail::SearchLimits limits;
  limits.require_complete = true;
  limits.max_blocks = cap;
  detail::search_partitions(g, limits, nodes, hooks);
  return hooks.best;
}

}  // namespace chromadisc

#include "chromadisc/discrepancy.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "chromadisc/subset_chromatic.hpp"
#include "detail/partition_search.hpp"

namespace chromadisc {

namespace {

void require_proper(const Graph& g, const Coloring& c) {
  if (!is_proper_partition(g, c)) {
    throw GraphError("coloring is not a proper partition of the graph's vertices");
  }
}

void require_budget(const Graph& g, const SolverBudget& budget) {
  if (g.order() > budget.max_vertices) {
    throw BudgetExceeded("graph has " + std::to_string(g.order()) +
                         " vertices; exact solver budget is " +
                         std::to_string(budget.max_vertices));
  }
}

bool better(int value, Mask mask, int best_value, Mask best_mask) {
  return value > best_value || (value == best_value && mask < best_mask);
}

/// Minimum-χ transversal through a list of blocks, one vertex per block on top
/// of a fixed seed set. χ of a partial transversal bounds every completion.
class TransversalSearch {
 public:
  /// stop_at: give up refining once χ ≤ stop_at. break_ties: among minimum-χ
  /// transversals keep the smallest mask (costs extra search).
  TransversalSearch(SubsetChromatic& chi, std::vector<Mask> blocks, int stop_at, bool break_ties)
      : chi_(chi), blocks_(std::move(blocks)), stop_at_(stop_at), break_ties_(break_ties) {}

  /// Only transversals with χ < ceiling are recorded.
  void run(Mask seed, int ceiling) {
    best_chi_ = ceiling;
    descend(0, seed);
  }

  bool found() const { return best_mask_.has_value(); }
  int best_chi() const { return best_chi_; }
  Mask best_mask() const { return *best_mask_; }

 private:
  void descend(std::size_t i, Mask partial) {
    if (stopped_) {
      return;
    }
    const int here = chi_(partial);
    const bool tie_allowed = break_ties_ && best_mask_.has_value();
    if (here > best_chi_ || (here == best_chi_ && !tie_allowed)) {
      return;
    }
    if (i == blocks_.size()) {
      if (!best_mask_ || here < best_chi_ || partial < *best_mask_) {
        best_chi_ = here;
        best_mask_ = partial;
      }
      stopped_ = best_chi_ <= stop_at_;
      return;
    }
    bits::for_each(blocks_[i], [&](int u) { descend(i + 1, partial | bits::bit(u)); });
  }

  SubsetChromatic& chi_;
  std::vector<Mask> blocks_;
  int stop_at_;
  bool break_ties_;
  int best_chi_ = 0;
  std::optional<Mask> best_mask_;
  bool stopped_ = false;
};

}  // namespace

bool validate_witness(const Graph& g, const Witness& w, bool connected) {
  if (!is_proper_partition(g, w.coloring) || !w.subgraph.subset_of(g.vertex_set())) {
    return false;
  }
  if (w.subgraph.empty()) {
    return g.order() == 0 && w.value == 0;
  }
  if (connected && !is_connected_subset(g, w.subgraph.bits())) {
    return false;
  }
  return w.value == w.coloring.colors_in(w.subgraph.bits()) - chromatic_number_of(g, w.subgraph.bits());
}

Witness phi_of_coloring(const Graph& g, const Coloring& c) {
  require_proper(g, c);
  if (g.order() == 0) {
    return {c, VertexSet{}, 0};
  }
  SubsetChromatic chi(g);
  std::vector<Mask> blocks;
  for (VertexSet b : c.blocks()) {
    blocks.push_back(b.bits());
  }
  TransversalSearch search(chi, std::move(blocks), -1, true);
  search.run(0, c.size() + 1);
  return {c, VertexSet(search.best_mask()), c.size() - search.best_chi()};
}

Witness phi_of_coloring_by_subsets(const Graph& g, const Coloring& c) {
  require_proper(g, c);
  if (g.order() == 0) {
    return {c, VertexSet{}, 0};
  }
  SubsetChromatic chi(g);
  int best = 0;
  Mask best_mask = bits::bit(0);
  for (Mask s = 1;; ++s) {
    const int value = c.colors_in(s) - chi(s);
    if (better(value, s, best, best_mask)) {
      best = value;
      best_mask = s;
    }
    if (s == g.vertices()) {
      break;
    }
  }
  return {c, VertexSet(best_mask), best};
}

Witness phi_hat_of_coloring(const Graph& g, const Coloring& c) {
  require_proper(g, c);
  if (g.order() == 0) {
    return {c, VertexSet{}, 0};
  }
  SubsetChromatic chi(g);
  const int k = c.size();
  int best = 0;
  Mask best_mask = bits::bit(0);
  for_each_connected_subset(g, [&](Mask s) {
    const int chi_s = chi(s);
    const int value = c.colors_in(s) - chi_s;
    if (better(value, s, best, best_mask)) {
      best = value;
      best_mask = s;
    }
    // No superset can score above k - χ(S).
    return k - chi_s >= best;
  });
  return {c, VertexSet(best_mask), best};
}

namespace {

/// Branch and bound over colorings for φ or φ̂.
///
/// The discrepancy of a partial coloring (restricted to the assigned vertices)
/// never decreases as vertices are added, so it is a lower bound for every
/// completion. lower_[d] is that bound after d vertices; only subgraphs that
/// contain the newest vertex need to be examined at each step.
class DiscrepancyHooks {
 public:
  enum class Kind { kPhiTransversal, kPhiSubsets, kPhiHat };

  DiscrepancyHooks(const Graph& g, SubsetChromatic& chi, Kind kind, int best)
      : g_(g), chi_(chi), kind_(kind), best_(best) {
    lower_.push_back(0);
  }

  bool enter(detail::PartialColoring& pc, int v) {
    const int parent = lower_.back();
    int bound = parent;
    if (parent < best_) {
      switch (kind_) {
        case Kind::kPhiTransversal:
          bound = std::max(parent, through_transversals(pc, v, parent));
          break;
        case Kind::kPhiSubsets:
          bound = std::max(parent, through_subsets(pc, v));
          break;
        case Kind::kPhiHat:
          bound = std::max(parent, through_connected(pc, v, parent));
          break;
      }
    }
    lower_.push_back(bound);
    return bound < best_;
  }

  void leave(detail::PartialColoring&, int) { lower_.pop_back(); }

  bool leaf(detail::PartialColoring& pc) {
    best_ = lower_.back();
    improved_ = pc.to_coloring();
    return best_ > 0;
  }

  int best() const { return best_; }
  const std::optional<Coloring>& improved() const { return improved_; }

 private:
  /// max over transversals T ∋ v of the partial blocks of k - χ(T), or
  /// something ≤ floor when no transversal beats floor.
  int through_transversals(const detail::PartialColoring& pc, int v, int floor) {
    std::vector<Mask> others;
    const int own = pc.color[static_cast<std::size_t>(v)];
    for (int b = 0; b < pc.blocks; ++b) {
      if (b != own) {
        others.push_back(pc.members[static_cast<std::size_t>(b)]);
      }
    }
    const int k = pc.blocks;
    TransversalSearch search(chi_, std::move(others), k - best_, false);
    search.run(bits::bit(v), k - floor);
    return search.found() ? k - search.best_chi() : floor;
  }

  int through_subsets(const detail::PartialColoring& pc, int v) {
    const Mask rest = pc.assigned & ~bits::bit(v);
    int best = 0;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask s = sub | bits::bit(v);
      best = std::max(best, pc.colors_in(s) - chi_(s));
      if (best >= best_ || sub == 0) {
        break;
      }
    }
    return best;
  }

  int through_connected(const detail::PartialColoring& pc, int v, int floor) {
    const int k = pc.blocks;
    int best = floor;
    for_each_connected_superset(g_, v, pc.assigned, [&](Mask s) {
      if (best >= best_) {
        return false;
      }
      const int chi_s = chi_(s);
      best = std::max(best, pc.colors_in(s) - chi_s);
      return k - chi_s > best && best < best_;
    });
    return best;
  }

  const Graph& g_;
  SubsetChromatic& chi_;
  Kind kind_;
  int best_;
  std::vector<int> lower_;
  std::optional<Coloring> improved_;
};

/// Minimizes over colorings with χ, χ+1, ... blocks. Because the whole graph
/// (connected, for φ̂) is itself a candidate subgraph, a coloring with k blocks
/// scores at least k - χ, which ends the sweep.
Coloring minimize(const Graph& g, const SolverOptions& options, DiscrepancyHooks::Kind kind,
                  const ChromaticResult& chi, int seed_value) {
  Coloring best_coloring = chi.coloring;
  int best = seed_value;
  SubsetChromatic oracle(g);
  detail::NodeBudget nodes(options.budget.max_search_nodes);
  for (int k = chi.value; k <= g.order() && k - chi.value < best; ++k) {
    DiscrepancyHooks hooks(g, oracle, kind, best);
    detail::SearchLimits limits;
    limits.min_blocks = k;
    limits.max_blocks = k;
    limits.require_complete = options.complete_colorings_only;
    detail::search_partitions(g, limits, nodes, hooks);
    if (hooks.improved()) {
      best = hooks.best();
      best_coloring = *hooks.improved();
    }
  }
  return best_coloring;
}

}  // namespace

Witness phi_exact(const Graph& g, const SolverOptions& options) {
  require_budget(g, options.budget);
  if (g.order() == 0) {
    return {};
  }
  const ChromaticResult chi = chromatic_number(g);
  const int seed = phi_of_coloring(g, chi.coloring).value;
  const auto kind = options.transversal_shortcut ? DiscrepancyHooks::Kind::kPhiTransversal
                                                 : DiscrepancyHooks::Kind::kPhiSubsets;
  const Coloring best = minimize(g, options, kind, chi, seed);
  return options.transversal_shortcut ? phi_of_coloring(g, best)
                                      : phi_of_coloring_by_subsets(g, best);
}

Witness phi_hat_exact(const Graph& g, const SolverOptions& options) {
  require_budget(g, options.budget);
  if (g.order() == 0) {
    return {};
  }
  const auto parts = components(g);
  if (parts.size() > 1) {
    // Overlay the component optima: block i of the result is the union of
    // block i of every component. Connected subgraphs live in one component,
    // so each keeps its own value.
    std::vector<Mask> merged;
    for (VertexSet part : parts) {
      const InducedSubgraph sub = induced_subgraph(g, part);
      const Witness local = phi_hat_exact(sub.graph, options);
      const auto& blocks = local.coloring.blocks();
      if (merged.size() < blocks.size()) {
        merged.resize(blocks.size(), 0);
      }
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        bits::for_each(blocks[b].bits(), [&](int u) {
          merged[b] |= bits::bit(sub.original[static_cast<std::size_t>(u)]);
        });
      }
    }
    std::vector<VertexSet> blocks(merged.begin(), merged.end());
    return phi_hat_of_coloring(g, Coloring::from_blocks(g, std::move(blocks)));
  }
  const ChromaticResult chi = chromatic_number(g);
  const int seed = phi_hat_of_coloring(g, chi.coloring).value;
  const Coloring best = minimize(g, options, DiscrepancyHooks::Kind::kPhiHat, chi, seed);
  return phi_hat_of_coloring(g, best);
}

ColoringProfile optimal_coloring_profile(const Graph& g, const SolverOptions& options) {
  require_budget(g, options.budget);
  ColoringProfile profile;
  const ChromaticResult chi = chromatic_number(g);
  profile.chi = chi.value;
  if (g.order() == 0) {
    return profile;
  }
  detail::NodeBudget nodes(options.budget.max_search_nodes);
  detail::SearchLimits limits;
  limits.min_blocks = chi.value;
  limits.max_blocks = chi.value;
  auto leaf = [&](detail::PartialColoring& pc) {
    const Coloring c = pc.to_coloring();
    Witness phi = phi_of_coloring(g, c);
    Witness phi_hat = phi_hat_of_coloring(g, c);
    if (profile.optimal_colorings++ == 0) {
      profile.min_phi = profile.max_phi = phi;
      profile.min_phi_hat = profile.max_phi_hat = phi_hat;
      return true;
    }
    if (phi.value < profile.min_phi.value) profile.min_phi = phi;
    if (phi.value > profile.max_phi.value) profile.max_phi = phi;
    if (phi_hat.value < profile.min_phi_hat.value) profile.min_phi_hat = phi_hat;
    if (phi_hat.value > profile.max_phi_hat.value) profile.max_phi_hat = std::move(phi_hat);
    return true;
  };
  detail::LeafOnly<decltype(leaf)> hooks{leaf};
  detail::search_partitions(g, limits, nodes, hooks);
  return profile;
}

}  // namespace chromadisc

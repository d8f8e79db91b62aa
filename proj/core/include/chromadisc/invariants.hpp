#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "chromadisc/budget.hpp"
#include "chromadisc/graph.hpp"

namespace chromadisc {

/// A proper coloring viewed as a partition of V into independent blocks.
///
/// Colors have no identity beyond their block; blocks are kept sorted by
/// smallest member so equal partitions compare equal.
class Coloring {
 public:
  Coloring() = default;

  /// Validates that blocks are nonempty, disjoint, independent and cover V.
  static Coloring from_blocks(const Graph& g, std::vector<VertexSet> blocks);
  /// labels[v] is an arbitrary color id for v.
  static Coloring from_labels(const Graph& g, std::span<const int> labels);
  /// Skips validation; only for callers that build partitions themselves.
  static Coloring trusted(std::vector<VertexSet> blocks);

  const std::vector<VertexSet>& blocks() const { return blocks_; }
  int size() const { return static_cast<int>(blocks_.size()); }
  /// Index of the block containing v, or -1.
  int color_of(int v) const;
  /// |c(S)|: number of blocks meeting s.
  int colors_in(Mask s) const;
  /// Every pair of blocks is joined by at least one edge.
  bool is_complete(const Graph& g) const;

  bool operator==(const Coloring&) const = default;

 private:
  explicit Coloring(std::vector<VertexSet> blocks);
  std::vector<VertexSet> blocks_;
};

/// True iff c partitions V(g) into independent sets.
bool is_proper_partition(const Graph& g, const Coloring& c);

struct ChromaticResult {
  int value = 0;
  Coloring coloring;
};

/// Exact χ(g) with an optimal coloring (exactly χ blocks).
ChromaticResult chromatic_number(const Graph& g);
/// χ of the subgraph induced by s.
int chromatic_number_of(const Graph& g, Mask s);
/// Decides whether the subgraph induced by s is k-colorable.
bool is_colorable(const Graph& g, Mask s, int k);

int clique_number(const Graph& g);
/// ω of the subgraph induced by s.
int clique_number_of(const Graph& g, Mask s);
/// A maximum clique of the subgraph induced by s.
Mask maximum_clique(const Graph& g, Mask s);
int independence_number(const Graph& g);
int max_degree(const Graph& g);
bool is_triangle_free(const Graph& g);

struct PartitionFilter {
  /// Only partitions where every block pair sees an edge.
  bool complete_only = false;
  std::optional<int> max_colors;
};

/// Visits each partition of V into independent blocks exactly once.
///
/// Vertex i goes either to an existing block or to a new block (restricted
/// growth), so blocks come out ordered by smallest member. `visit` returns
/// false to stop early.
void for_each_proper_partition(const Graph& g, const PartitionFilter& filter,
                               const std::function<bool(const Coloring&)>& visit);
std::vector<Coloring> proper_partitions(const Graph& g, const PartitionFilter& filter = {});

/// max over v of |c(N[v])|.
int max_closed_neighborhood_colors(const Graph& g, const Coloring& c);

/// ψ(g): min over proper colorings of the max number of colors in a closed
/// neighborhood. Throws GraphError on the empty graph.
///
/// Only complete colorings are searched. Merging two color classes with no
/// edge between them never increases the colors seen in any closed
/// neighborhood, so some complete coloring attains the minimum, and complete
/// colorings have at most achromatic-number blocks.
int local_chromatic_number(const Graph& g, const SolverBudget& budget = {});

/// Maximum number of blocks in a complete coloring.
int achromatic_number(const Graph& g, const SolverBudget& budget = {});

}  // namespace chromadisc

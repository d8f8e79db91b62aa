#pragma once

#include <cstddef>

#include "chromadisc/budget.hpp"
#include "chromadisc/graph.hpp"
#include "chromadisc/invariants.hpp"

namespace chromadisc {

/// Certificate for a discrepancy value: a coloring c and an induced subgraph
/// H with value = |c(H)| - χ(H).
struct Witness {
  Coloring coloring;
  VertexSet subgraph;
  int value = 0;
};

/// Recomputes |c(H)| - χ(H) from the parts and checks it against `value`.
/// With `connected`, H must also induce a connected subgraph (or be empty on
/// the empty graph).
bool validate_witness(const Graph& g, const Witness& w, bool connected);

/// φ_c(g) = k - min χ(T) over transversals T (one vertex per block).
/// The witness subgraph is a minimizing transversal, smallest mask on ties.
/// Throws GraphError if c is not a proper partition of V(g).
Witness phi_of_coloring(const Graph& g, const Coloring& c);

/// φ_c(g) evaluated directly as the max over all nonempty vertex subsets.
/// Exponential in n; kept for cross-checking the transversal route.
Witness phi_of_coloring_by_subsets(const Graph& g, const Coloring& c);

/// φ̂_c(g): max over connected induced S of |c(S)| - χ(S), smallest mask on
/// ties.
Witness phi_hat_of_coloring(const Graph& g, const Coloring& c);

struct SolverOptions {
  SolverBudget budget;
  /// Search complete colorings only. Switching this off searches every proper
  /// coloring; the optimum is the same either way.
  bool complete_colorings_only = true;
  /// Evaluate φ_c through transversals instead of all vertex subsets.
  bool transversal_shortcut = true;
};

/// Exact φ(g) with a minimizing coloring and its worst transversal.
///
/// Ties between optimal colorings go to the fewest blocks. Throws
/// BudgetExceeded when g has more than budget.max_vertices vertices or the
/// search exceeds budget.max_search_nodes.
Witness phi_exact(const Graph& g, const SolverOptions& options = {});

/// Exact φ̂(g). Disconnected graphs are solved per component and the
/// component colorings are overlaid.
Witness phi_hat_exact(const Graph& g, const SolverOptions& options = {});

/// Extremes of φ_c and φ̂_c over every coloring with exactly χ(g) blocks.
struct ColoringProfile {
  int chi = 0;
  std::size_t optimal_colorings = 0;
  Witness min_phi;
  Witness max_phi;
  Witness min_phi_hat;
  Witness max_phi_hat;
};

ColoringProfile optimal_coloring_profile(const Graph& g, const SolverOptions& options = {});

}  // namespace chromadisc

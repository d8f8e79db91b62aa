#pragma once

#include <optional>

#include "chromadisc/budget.hpp"
#include "chromadisc/graph.hpp"

namespace chromadisc {

/// Exact invariants and structural flags of one graph.
///
/// phi / phi_hat stay empty until a discrepancy solver fills them, so corpus
/// sweeps can collect the classical invariants alone. psi and achromatic are
/// partition searches and are only filled within the vertex budget; perfect
/// only up to the odd-hole search cap.
struct ParamReport {
  int n = 0;
  int m = 0;
  int chi = 0;
  int omega = 0;
  int alpha = 0;
  int delta = 0;
  std::optional<int> psi;
  std::optional<int> achromatic;
  std::optional<int> phi;
  std::optional<int> phi_hat;
  /// Empty when disconnected (infinite diameter).
  std::optional<int> diameter;

  struct Flags {
    bool connected = true;
    bool triangle_free = true;
    bool paw_free = true;
    bool complete_multipartite = true;
    std::optional<bool> perfect;
    bool bipartite = true;
  } flags;
};

/// Fills every field except phi / phi_hat.
ParamReport compute_invariants(const Graph& g, const SolverBudget& budget = {});

}  // namespace chromadisc

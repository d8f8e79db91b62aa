#pragma once

#include <cstdint>
#include <stdexcept>

namespace chromadisc {

/// Structural limits for the exponential solvers. Nothing here depends on
/// wall-clock time, so a run that fits on one machine fits on every machine.
struct SolverBudget {
  /// Largest vertex count accepted by the exact discrepancy solvers.
  int max_vertices = 16;
  /// Cap on partition-search nodes for a single solver call.
  std::uint64_t max_search_nodes = 4'000'000'000ULL;

  /// Reads CHROMADISC_BUDGET (a vertex count) when set; defaults otherwise.
  static SolverBudget from_environment();
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chromadisc

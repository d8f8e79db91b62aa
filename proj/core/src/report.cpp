#include "chromadisc/report.hpp"

#include "chromadisc/characterize.hpp"
#include "chromadisc/invariants.hpp"

namespace chromadisc {

ParamReport compute_invariants(const Graph& g, const SolverBudget& budget) {
  ParamReport r;
  r.n = g.order();
  r.m = g.edge_count();
  r.chi = chromatic_number(g).value;
  r.omega = clique_number(g);
  r.alpha = independence_number(g);
  r.delta = max_degree(g);
  if (r.n <= budget.max_vertices) {
    r.psi = r.n == 0 ? 0 : local_chromatic_number(g, budget);
    r.achromatic = achromatic_number(g, budget);
  }
  r.diameter = diameter(g);
  r.flags.connected = is_connected(g);
  r.flags.triangle_free = is_triangle_free(g);
  r.flags.paw_free = is_paw_free(g);
  r.flags.complete_multipartite = is_complete_multipartite(g);
  if (r.n <= kPerfectCheckCap) {
    r.flags.perfect = is_perfect_small(g);
  }
  r.flags.bipartite = is_bipartite(g);
  return r;
}

}  // namespace chromadisc

#pragma once

#include "chromadisc/graph.hpp"

namespace chromadisc {

/// No induced K1 ∪ K2. Cross-checked internally against the complement being
/// a disjoint union of cliques; throws std::logic_error if the two disagree.
bool is_complete_multipartite(const Graph& g);
/// Triple scan for an induced K1 ∪ K2.
bool has_no_induced_k1_k2(const Graph& g);
/// Every component of the complement is a clique.
bool complement_is_union_of_cliques(const Graph& g);

/// No four vertices induce a triangle with a pendant edge.
bool is_paw_free(const Graph& g);

inline constexpr int kPerfectCheckCap = 12;

/// True iff there is an induced cycle of odd length ≥ 5.
bool has_odd_hole(const Graph& g);

/// No odd hole in g or its complement. Throws GraphError when n exceeds cap.
bool is_perfect_small(const Graph& g, int cap = kPerfectCheckCap);

/// Every component is bipartite or complete multipartite.
bool phi_hat_zero_characterization(const Graph& g);

}  // namespace chromadisc

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chromadisc/graph.hpp"

namespace chromadisc::families {

// Vertex layouts are fixed so that witnesses stay stable across runs; each
// constructor documents its own.

/// K_n on 0..n-1.
Graph complete(int n);
/// C_n: i ~ i+1 (mod n). Requires n ≥ 3.
Graph cycle(int n);
/// P_n: i ~ i+1.
Graph path(int n);
/// K_{1,n-1} with center 0.
Graph star(int n);
/// Triangle {0,1,2} with pendant vertex 3 attached to 2.
Graph paw();
Graph empty(int n);
/// Disjoint union of cliques of the given sizes, in order.
Graph cliques(std::span<const int> sizes);

/// Mycielskian of g: V = 0..n-1 (copy of g), U = n..2n-1 with u_i ~ N_g(v_i),
/// and w = 2n adjacent to all of U.
Graph mycielski(const Graph& g);
/// M_2 = K2, M_k = mycielski(M_{k-1}). Has 3·2^(k-2) - 1 vertices.
Graph mycielski_k(int k);

/// K_c ∪ p·K_p with K_c first. Requires c ≥ 1, 0 ≤ p ≤ c-1.
Graph tight_phi(int c, int p);
/// K_{c-p-1} ⋈ (p+1)·K_{p+1} with the single clique first. Requires c ≥ 2,
/// 0 ≤ p ≤ c-2.
Graph tight_phi_hat(int c, int p);

/// One K_t on 0..t-1 and t copies of K_{t-1}; copy i occupies
/// t + i(t-1) .. t + (i+1)(t-1) - 1 and is fully joined to clique vertex i.
Graph gt_gadget(int t);

/// K_r on 0..r-1 plus independent vertices r..2r-1; vertex r+i is adjacent to
/// every clique vertex except i. Requires r ≥ 4.
Graph gr_gadget(int r);

/// g on 0..n-1 plus K_{2n} on n..3n-1; g-vertex i is adjacent to clique
/// vertices n+2i and n+2i+1. Requires g connected with n ≥ 2.
Graph nphard_gadget(const Graph& g);

/// G(n, p) with a counter-based generator: pair (i, j), i < j, is an edge iff
/// u < p, where u is the top 53 bits of
/// splitmix64(splitmix64(seed) ^ (64·i + j)) scaled to [0, 1). Output depends
/// only on (n, p, seed).
Graph gnp(int n, double p, std::uint64_t seed);

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2). Requires 0 ≤ n ≤ 11.
std::uint64_t labeled_count(int n);
/// The labeled graph on n vertices with edge set `code`: bit k is the k-th
/// pair in graph6 order (0,1), (0,2), (1,2), (0,3), ...
Graph labeled(int n, std::uint64_t code);

/// The splitmix64 finalizer used by gnp.
std::uint64_t splitmix64(std::uint64_t x);

// ---------------------------------------------------------------------------
// Named instances with the values the constructions are known to attain.

enum class Quantity {
  kChi,
  kAlpha,
  kPsi,
  kPhi,
  kPhiHat,
  kProfileMinPhi,
  kProfileMaxPhi,
  kProfileMinPhiHat,
  kProfileMaxPhiHat,
};

std::string_view quantity_name(Quantity q);

struct Claim {
  Quantity quantity;
  /// false: value is exact. true: value is a lower bound.
  bool at_least = false;
  int value = 0;
};

struct Instance {
  std::string spec;
  Graph graph;
  std::vector<Claim> claims;
};

/// Parses `name` or `name:a,b,...`; `nphard:` takes a nested spec, e.g.
/// `nphard:path:3`. Throws GraphError on unknown names or bad parameters.
Instance build(std::string_view spec);

/// Names accepted by build().
std::vector<std::string> names();

}  // namespace chromadisc::families

#include "chromadisc/characterize.hpp"

#include <stdexcept>
#include <string>

namespace chromadisc {

bool has_no_induced_k1_k2(const Graph& g) {
  // K1 ∪ K2: an edge plus a vertex adjacent to neither endpoint.
  for (auto [u, v] : g.edges()) {
    const Mask outside = g.vertices() & ~g.closed_neighbors(u) & ~g.closed_neighbors(v);
    if (outside != 0) {
      return false;
    }
  }
  return true;
}

bool complement_is_union_of_cliques(const Graph& g) {
  const Graph co = complement(g);
  for (VertexSet part : components(co)) {
    bool clique = true;
    bits::for_each(part.bits(), [&](int v) {
      clique = clique && (co.closed_neighbors(v) & part.bits()) == part.bits();
    });
    if (!clique) {
      return false;
    }
  }
  return true;
}

bool is_complete_multipartite(const Graph& g) {
  const bool by_scan = has_no_induced_k1_k2(g);
  if (by_scan != complement_is_union_of_cliques(g)) {
    throw std::logic_error("complete multipartite tests disagree");
  }
  return by_scan;
}

bool is_paw_free(const Graph& g) {
  // A paw is a triangle abc plus d adjacent to exactly one of a, b, c.
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) {
        continue;
      }
      const Mask third = g.neighbors(a) & g.neighbors(b) & ~bits::below(b + 1);
      bool found = false;
      bits::for_each(third, [&](int c) {
        const Mask na = g.neighbors(a);
        const Mask nb = g.neighbors(b);
        const Mask nc = g.neighbors(c);
        const Mask tri = bits::bit(a) | bits::bit(b) | bits::bit(c);
        const Mask only_one = ((na & ~nb & ~nc) | (nb & ~na & ~nc) | (nc & ~na & ~nb)) & ~tri;
        found = found || only_one != 0;
      });
      if (found) {
        return false;
      }
    }
  }
  return true;
}

namespace {

/// Extends the induced path start = p0, ..., last looking for an odd induced
/// cycle of length ≥ 5 whose minimum vertex is start.
bool extend_path(const Graph& g, int start, Mask path, Mask interior, int last, int length) {
  // Candidates: neighbors of last, above start, off the path, and not adjacent
  // to any interior vertex (which would create a chord).
  const Mask cand = g.neighbors(last) & ~bits::below(start + 1) & ~path &
                    ~g.neighbors_of(interior);
  bool found = false;
  bits::for_each(cand, [&](int x) {
    if (found) {
      return;
    }
    if (g.adjacent(x, start)) {
      // Cycle start..last,x has length+1 vertices; a triangle (length 2) is
      // not a hole, and length+1 ≥ 4 makes it an induced cycle.
      const int cycle = length + 1;
      found = cycle >= 5 && cycle % 2 == 1;
      return;
    }
    found = extend_path(g, start, path | bits::bit(x), interior | bits::bit(last), x, length + 1);
  });
  return found;
}

}  // namespace

bool has_odd_hole(const Graph& g) {
  for (int s = 0; s < g.order(); ++s) {
    const Mask first = g.neighbors(s) & ~bits::below(s + 1);
    bool found = false;
    bits::for_each(first, [&](int p1) {
      // Interior starts empty: p1 may be adjacent to start, later vertices
      // may not be adjacent to p1 (except the next one on the path).
      found = found || extend_path(g, s, bits::bit(s) | bits::bit(p1), 0, p1, 2);
    });
    if (found) {
      return true;
    }
  }
  return false;
}

bool is_perfect_small(const Graph& g, int cap) {
  if (g.order() > cap) {
    throw GraphError("perfectness check is capped at " + std::to_string(cap) + " vertices, got " +
                     std::to_string(g.order()));
  }
  return !has_odd_hole(g) && !has_odd_hole(complement(g));
}

bool phi_hat_zero_characterization(const Graph& g) {
  for (VertexSet part : components(g)) {
    const Graph h = induced_subgraph(g, part).graph;
    if (!is_bipartite(h) && !is_complete_multipartite(h)) {
      return false;
    }
  }
  return true;
}

}  // namespace chromadisc

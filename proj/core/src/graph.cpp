#include "chromadisc/graph.hpp"

#include <algorithm>
#include <string>

namespace chromadisc {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, 64]");
  }
}

void check_vertex(int v, int n) {
  if (v < 0 || v >= n) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
  }
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    check_vertex(v, kMaxVertices);
    bits_ |= bits::bit(v);
  }
}

VertexSet VertexSet::from_vector(std::span<const int> vertices) {
  Mask m = 0;
  for (int v : vertices) {
    check_vertex(v, kMaxVertices);
    m |= bits::bit(v);
  }
  return VertexSet(m);
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  bits::for_each(bits_, [&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) {
      throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    g.adj_[static_cast<std::size_t>(u)] |= bits::bit(v);
    g.adj_[static_cast<std::size_t>(v)] |= bits::bit(u);
  }
  return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_adjacency(std::span<const Mask> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  Graph g(n);
  const Mask all = bits::below(n);
  for (int v = 0; v < n; ++v) {
    const Mask row = adjacency[static_cast<std::size_t>(v)];
    if ((row & ~all) != 0) {
      throw GraphError("neighbor mask of vertex " + std::to_string(v) + " exceeds n");
    }
    if ((row >> v) & 1U) {
      throw GraphError("self-loop at vertex " + std::to_string(v));
    }
    g.adj_[static_cast<std::size_t>(v)] = row;
  }
  for (int v = 0; v < n; ++v) {
    bits::for_each(g.adj_[static_cast<std::size_t>(v)], [&](int u) {
      if (!g.adjacent(u, v)) {
        throw GraphError("adjacency is not symmetric");
      }
    });
  }
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) {
    twice += degree(v);
  }
  return twice / 2;
}

Mask Graph::neighbors_of(Mask s) const {
  Mask out = 0;
  bits::for_each(s, [&](int v) { out |= adj_[static_cast<std::size_t>(v)]; });
  return out;
}

bool Graph::is_independent(Mask s) const {
  bool ok = true;
  bits::for_each(s, [&](int v) { ok = ok && (adj_[static_cast<std::size_t>(v)] & s) == 0; });
  return ok;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    bits::for_each(adj_[static_cast<std::size_t>(u)] & ~bits::below(u + 1),
                   [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertex_set())) {
    throw GraphError("vertex set is not contained in the graph");
  }
  InducedSubgraph out;
  out.original = s.to_vector();
  std::array<int, kMaxVertices> relabel{};
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    relabel[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i);
  }
  std::vector<Mask> rows(out.original.size(), 0);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    bits::for_each(g.neighbors(out.original[i]) & s.bits(), [&](int u) {
      rows[i] |= bits::bit(relabel[static_cast<std::size_t>(u)]);
    });
  }
  out.graph = Graph::from_adjacency(rows);
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Mask> rows(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    rows[static_cast<std::size_t>(v)] = ~g.neighbors(v) & g.vertices() & ~bits::bit(v);
  }
  return Graph::from_adjacency(rows);
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross_edges) {
  const int a = g.order();
  const int b = h.order();
  if (a + b > kMaxVertices) {
    throw GraphError("combined graph would have " + std::to_string(a + b) + " > 64 vertices");
  }
  std::vector<Mask> rows(static_cast<std::size_t>(a + b));
  const Mask g_side = bits::below(a);
  const Mask h_side = bits::below(a + b) & ~g_side;
  for (int v = 0; v < a; ++v) {
    rows[static_cast<std::size_t>(v)] = g.neighbors(v) | (cross_edges ? h_side : 0);
  }
  for (int v = 0; v < b; ++v) {
    rows[static_cast<std::size_t>(a + v)] = (h.neighbors(v) << a) | (cross_edges ? g_side : 0);
  }
  return Graph::from_adjacency(rows);
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }

namespace {

Mask reach(const Graph& g, int start, Mask within) {
  Mask seen = bits::bit(start);
  Mask frontier = seen;
  while (frontier != 0) {
    frontier = g.neighbors_of(frontier) & within & ~seen;
    seen |= frontier;
  }
  return seen;
}

}  // namespace

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  Mask left = g.vertices();
  while (left != 0) {
    const Mask comp = reach(g, bits::lowest(left), g.vertices());
    out.emplace_back(comp);
    left &= ~comp;
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() == 0 || reach(g, 0, g.vertices()) == g.vertices();
}

bool is_connected_subset(const Graph& g, Mask s) {
  return s != 0 && reach(g, bits::lowest(s), s) == s;
}

std::optional<int> diameter(const Graph& g) {
  if (!is_connected(g)) {
    return std::nullopt;
  }
  int best = 0;
  for (int v = 0; v < g.order(); ++v) {
    Mask seen = bits::bit(v);
    Mask frontier = seen;
    int depth = 0;
    while (true) {
      frontier = g.neighbors_of(frontier) & ~seen;
      if (frontier == 0) {
        break;
      }
      seen |= frontier;
      ++depth;
    }
    best = std::max(best, depth);
  }
  return best;
}

bool is_bipartite(const Graph& g) {
  Mask left = g.vertices();
  while (left != 0) {
    // BFS layers alternate sides; an edge inside a side is an odd cycle.
    Mask side[2] = {bits::bit(bits::lowest(left)), 0};
    Mask seen = side[0];
    Mask frontier = side[0];
    int parity = 0;
    while (frontier != 0) {
      frontier = g.neighbors_of(frontier) & ~seen;
      parity ^= 1;
      side[parity] |= frontier;
      seen |= frontier;
    }
    if (!g.is_independent(side[0]) || !g.is_independent(side[1])) {
      return false;
    }
    left &= ~seen;
  }
  return true;
}

namespace {

void expand(const Graph& g, Mask universe, Mask set, Mask extension, Mask closed_nbhd,
            const std::function<bool(Mask)>& visit) {
  if (!visit(set)) {
    return;
  }
  while (extension != 0) {
    const int w = bits::lowest(extension);
    extension &= extension - 1;
    const Mask exclusive = g.neighbors(w) & universe & ~closed_nbhd;
    expand(g, universe, set | bits::bit(w), extension | exclusive,
           closed_nbhd | g.closed_neighbors(w), visit);
  }
}

}  // namespace

void for_each_connected_superset(const Graph& g, int root, Mask universe,
                                 const std::function<bool(Mask)>& visit) {
  universe &= g.vertices() & ~bits::bit(root);
  expand(g, universe, bits::bit(root), g.neighbors(root) & universe, g.closed_neighbors(root),
         visit);
}

void for_each_connected_subset(const Graph& g, const std::function<bool(Mask)>& visit) {
  for (int v = 0; v < g.order(); ++v) {
    for_each_connected_superset(g, v, g.vertices() & ~bits::below(v + 1), visit);
  }
}

std::vector<VertexSet> connected_induced_subsets(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_connected_subset(g, [&](Mask s) {
    out.emplace_back(s);
    return true;
  });
  return out;
}

}  // namespace chromadisc

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromadisc {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// Raised for malformed inputs: bad vertex ids, oversized graphs, invalid
/// colorings, out-of-range family parameters.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text readers (graph6, edge list).
class ParseError : public GraphError {
 public:
  using GraphError::GraphError;
};

namespace bits {

constexpr int count(Mask m) { return std::popcount(m); }
constexpr int lowest(Mask m) { return std::countr_zero(m); }
constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr Mask below(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Calls fn(v) for every set bit, lowest first.
template <class Fn>
constexpr void for_each(Mask m, Fn&& fn) {
  while (m != 0) {
    fn(std::countr_zero(m));
    m &= m - 1;
  }
}

}  // namespace bits

/// A subset of vertices, stored as a 64-bit mask.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}
  VertexSet(std::initializer_list<int> vertices);

  static VertexSet from_vector(std::span<const int> vertices);
  static constexpr VertexSet all(int n) { return VertexSet(bits::below(n)); }

  constexpr Mask bits() const { return bits_; }
  constexpr int size() const { return bits::count(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return v >= 0 && v < 64 && ((bits_ >> v) & 1U) != 0; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr int min() const { return bits::lowest(bits_); }

  std::vector<int> to_vector() const;

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  Mask bits_ = 0;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on at most 64 labeled vertices 0..n-1.
///
/// Adjacency is a symmetric, irreflexive array of neighbor masks. Instances are
/// immutable once built; all constructors validate their input.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges);
  /// Neighbor masks must already be symmetric and irreflexive.
  static Graph from_adjacency(std::span<const Mask> adjacency);

  int order() const { return n_; }
  int edge_count() const;
  Mask vertices() const { return bits::below(n_); }
  VertexSet vertex_set() const { return VertexSet(vertices()); }

  Mask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  Mask closed_neighbors(int v) const { return adj_[static_cast<std::size_t>(v)] | bits::bit(v); }
  bool adjacent(int u, int v) const { return ((adj_[static_cast<std::size_t>(u)] >> v) & 1U) != 0; }
  int degree(int v) const { return bits::count(adj_[static_cast<std::size_t>(v)]); }

  /// Union of the neighborhoods of the vertices in s.
  Mask neighbors_of(Mask s) const;
  bool is_independent(Mask s) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::array<Mask, kMaxVertices> adj_{};
};

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the host vertex that became vertex i.
  std::vector<int> original;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
/// True iff the subgraph induced by s is connected (the empty set is not).
bool is_connected_subset(const Graph& g, Mask s);
/// Longest shortest path; nullopt when the graph is disconnected.
std::optional<int> diameter(const Graph& g);
bool is_bipartite(const Graph& g);

/// Enumerates every connected vertex set S with root ∈ S ⊆ universe ∪ {root}.
///
/// Exclusive-neighborhood expansion: each set is produced exactly once, and
/// every set below S in the expansion tree is a superset of S. `visit(S)`
/// returns whether to expand S; returning false prunes that subtree, which is
/// sound for any criterion that is monotone under taking supersets.
void for_each_connected_superset(const Graph& g, int root, Mask universe,
                                 const std::function<bool(Mask)>& visit);

/// Every nonempty S ⊆ V inducing a connected subgraph, each exactly once,
/// generated from its minimum vertex. `visit` returning false prunes.
void for_each_connected_subset(const Graph& g, const std::function<bool(Mask)>& visit);

std::vector<VertexSet> connected_induced_subsets(const Graph& g);

}  // namespace chromadisc

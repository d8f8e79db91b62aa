#pragma once

// Restricted-growth enumeration of proper partitions with caller-supplied
// pruning. Shared by the invariant and discrepancy solvers.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "chromadisc/budget.hpp"
#include "chromadisc/graph.hpp"
#include "chromadisc/invariants.hpp"

namespace chromadisc::detail {

class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}

  void tick() {
    if (++used_ > limit_) {
      throw BudgetExceeded("partition search exceeded " + std::to_string(limit_) + " nodes");
    }
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

struct PartialColoring {
  int n = 0;
  int blocks = 0;
  Mask assigned = 0;
  std::array<Mask, kMaxVertices> members{};
  /// Union of the neighborhoods of each block's members.
  std::array<Mask, kMaxVertices> reach{};
  std::array<int, kMaxVertices> color{};

  int colors_in(Mask s) const {
    int k = 0;
    for (int b = 0; b < blocks; ++b) {
      k += (members[static_cast<std::size_t>(b)] & s) != 0 ? 1 : 0;
    }
    return k;
  }

  bool complete() const {
    for (int i = 0; i < blocks; ++i) {
      for (int j = i + 1; j < blocks; ++j) {
        if ((reach[static_cast<std::size_t>(i)] & members[static_cast<std::size_t>(j)]) == 0) {
          return false;
        }
      }
    }
    return true;
  }

  /// Necessary condition for some completion to be complete: for every block
  /// pair without an edge, a vertex that may still join one block must be
  /// adjacent to a vertex that is in, or may still join, the other.
  bool may_become_complete(const Graph& g) const {
    const Mask rest = g.vertices() & ~assigned;
    for (int i = 0; i < blocks; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const Mask side_i = members[ui] | (rest & ~reach[ui]);
      const Mask reach_i = g.neighbors_of(side_i);
      for (int j = i + 1; j < blocks; ++j) {
        const auto uj = static_cast<std::size_t>(j);
        if ((reach[ui] & members[uj]) != 0) {
          continue;
        }
        const Mask side_j = members[uj] | (rest & ~reach[uj]);
        if ((reach_i & side_j) == 0) {
          return false;
        }
      }
    }
    return true;
  }

  Coloring to_coloring() const {
    std::vector<VertexSet> out;
    out.reserve(static_cast<std::size_t>(blocks));
    for (int b = 0; b < blocks; ++b) {
      out.emplace_back(members[static_cast<std::size_t>(b)]);
    }
    return Coloring::trusted(std::move(out));
  }
};

struct SearchLimits {
  int min_blocks = 0;
  int max_blocks = kMaxVertices;
  bool require_complete = false;
};

// Hooks interface:
//   bool enter(PartialColoring&, int v)  after v is placed; false prunes
//   void leave(PartialColoring&, int v)  before v is removed
//   bool leaf(PartialColoring&)          full partition; false stops the search
template <class Hooks>
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, SearchLimits limits, NodeBudget& budget, Hooks& hooks)
      : g_(g), limits_(limits), budget_(budget), hooks_(hooks) {
    state_.n = g.order();
  }

  /// Returns false when a hook stopped the search early.
  bool run() { return descend(0); }

 private:
  bool descend(int v) {
    if (v == state_.n) {
      if (state_.blocks < limits_.min_blocks) {
        return true;
      }
      if (limits_.require_complete && !state_.complete()) {
        return true;
      }
      return hooks_.leaf(state_);
    }
    const int after = state_.n - v - 1;
    const Mask nb = g_.neighbors(v);
    if (state_.blocks + after >= limits_.min_blocks) {
      for (int b = 0; b < state_.blocks; ++b) {
        if ((state_.members[static_cast<std::size_t>(b)] & nb) == 0 && !place(v, b)) {
          return false;
        }
      }
    }
    if (state_.blocks < limits_.max_blocks) {
      return place(v, state_.blocks);
    }
    return true;
  }

  bool place(int v, int b) {
    budget_.tick();
    const auto ub = static_cast<std::size_t>(b);
    const bool fresh = b == state_.blocks;
    if (fresh) {
      state_.members[ub] = 0;
      state_.reach[ub] = 0;
      ++state_.blocks;
    }
    const Mask old_reach = state_.reach[ub];
    state_.members[ub] |= bits::bit(v);
    state_.reach[ub] |= g_.neighbors(v);
    state_.color[static_cast<std::size_t>(v)] = b;
    state_.assigned |= bits::bit(v);

    bool keep_going = true;
    const bool viable = !limits_.require_complete || state_.may_become_complete(g_);
    if (viable && hooks_.enter(state_, v)) {
      keep_going = descend(v + 1);
    }
    if (viable) {
      hooks_.leave(state_, v);
    }

    state_.assigned &= ~bits::bit(v);
    state_.reach[ub] = old_reach;
    state_.members[ub] &= ~bits::bit(v);
    if (fresh) {
      --state_.blocks;
    }
    return keep_going;
  }

  const Graph& g_;
  SearchLimits limits_;
  NodeBudget& budget_;
  Hooks& hooks_;
  PartialColoring state_;
};

template <class Hooks>
bool search_partitions(const Graph& g, SearchLimits limits, NodeBudget& budget, Hooks& hooks) {
  return PartitionSearch<Hooks>(g, limits, budget, hooks).run();
}

/// Hooks with no pruning that hand every leaf to a callable.
template <class Fn>
struct LeafOnly {
  Fn fn;
  bool enter(PartialColoring&, int) { return true; }
  void leave(PartialColoring&, int) {}
  bool leaf(PartialColoring& pc) { return fn(pc); }
};

}  // namespace chromadisc::detail

#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "chromadisc/graph.hpp"

namespace chromadisc {

/// Memoized χ of induced subgraphs of one host graph.
///
/// Dense table for n ≤ 22, hash map beyond. Not thread-safe; give each
/// worker its own instance. The host graph must outlive the oracle.
class SubsetChromatic {
 public:
  explicit SubsetChromatic(const Graph& g);

  int operator()(Mask s);
  const Graph& graph() const { return *g_; }

 private:
  static constexpr int kDenseLimit = 22;

  const Graph* g_;
  std::vector<std::int8_t> dense_;
  std::unordered_map<Mask, std::int8_t> sparse_;
};

}  // namespace chromadisc

#include "chromadisc/subset_chromatic.hpp"

#include "chromadisc/invariants.hpp"

namespace chromadisc {

SubsetChromatic::SubsetChromatic(const Graph& g) : g_(&g) {
  if (g.order() <= kDenseLimit) {
    dense_.assign(std::size_t{1} << g.order(), std::int8_t{-1});
  }
}

int SubsetChromatic::operator()(Mask s) {
  if (!dense_.empty()) {
    auto& slot = dense_[static_cast<std::size_t>(s)];
    if (slot < 0) {
      slot = static_cast<std::int8_t>(chromatic_number_of(*g_, s));
    }
    return slot;
  }
  if (auto it = sparse_.find(s); it != sparse_.end()) {
    return it->second;
  }
  const auto value = static_cast<std::int8_t>(chromatic_number_of(*g_, s));
  sparse_.emplace(s, value);
  return value;
}

}  // namespace chromadisc

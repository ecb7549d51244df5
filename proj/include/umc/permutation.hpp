#ifndef UMC_PERMUTATION_HPP
#define UMC_PERMUTATION_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "umc/prng.hpp"

namespace umc {

using NodeId = std::uint64_t;

// Serialization order: order[i] is the original node id placed at position i.
// The inverse view (node id -> position) is what invert_permutation builds.
struct Permutation {
  std::vector<NodeId> order;

  std::size_t size() const { return order.size(); }

  static Permutation identity(std::size_t n) {
    Permutation p;
    p.order.resize(n);
    std::iota(p.order.begin(), p.order.end(), NodeId{0});
    return p;
  }

  bool is_bijection() const {
    std::vector<bool> seen(order.size(), false);
    for (NodeId v : order) {
      if (v >= order.size() || seen[v]) return false;
      seen[v] = true;
    }
    return true;
  }

  bool operator==(const Permutation&) const = default;
};

inline Permutation random_permutation(std::size_t n, std::uint64_t seed) {
  Permutation p = Permutation::identity(n);
  SplitMix64 rng(seed);
  fisher_yates_shuffle(std::span<NodeId>(p.order), rng);
  return p;
}

}  // namespace umc

#endif

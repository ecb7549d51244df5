#ifndef UMC_ORDERING_HPP
#define UMC_ORDERING_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include "umc/graph.hpp"
#include "umc/permutation.hpp"

namespace umc {

struct OrderingStrategy {
  enum class Kind { identity, random, greedy, bfs, rcm };

  Kind kind = Kind::identity;
  std::uint64_t seed = 0;  // random only

  // "identity" | "random" | "random:SEED" | "greedy" | "bfs" | "rcm"
  static OrderingStrategy from_string(const std::string& text);
  std::string to_string() const;
};

// Greedy traversal: starting from `start`, repeatedly append the unvisited
// neighbor of the last visited node at minimum Euclidean distance (ties to the
// smallest node id); when the last node has no unvisited neighbor, jump to the
// smallest unvisited id. Every node is visited exactly once.
Permutation greedy_order(const Graph& graph, std::span<const double> coords, int dim,
                         NodeId start);

// Breadth-first from node 0, neighbors in ascending id, further components in
// ascending lowest-id order.
Permutation bfs_order(const Graph& graph);

// Cuthill-McKee per component (components in ascending lowest-id order,
// start at the component's minimum-degree node with lowest id, neighbors by
// ascending degree then id), then the whole order reversed.
Permutation rcm_order(const Graph& graph);

Permutation order_nodes(const OrderingStrategy& strategy, const Graph& graph,
                        std::span<const double> coords, int dim);

// Linear-arrangement cost: sum over unique undirected edges of the absolute
// position distance |pos(u) - pos(v)| under the permutation.
std::uint64_t minla_cost(const Graph& graph, const Permutation& perm);

// Exhaustive minimum over all arrangements; n_nodes <= 10. Returns the
// lexicographically smallest optimal order and its cost.
std::pair<Permutation, std::uint64_t> brute_force_minla(const Graph& graph);

}  // namespace umc

#endif

#ifndef UMC_GRAPH_HPP
#define UMC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "umc/mesh.hpp"

namespace umc {

// Undirected node graph in CSR form: neighbor lists are sorted ascending and
// duplicate-free, no self-loops, symmetric by construction.
struct Graph {
  std::vector<std::uint64_t> offsets;  // n_nodes + 1
  std::vector<NodeId> adjacency;

  std::size_t n_nodes() const { return offsets.empty() ? 0 : offsets.size() - 1; }
  std::size_t edge_count() const { return adjacency.size() / 2; }

  std::size_t degree(NodeId v) const {
    return offsets[static_cast<std::size_t>(v) + 1] - offsets[static_cast<std::size_t>(v)];
  }

  std::span<const NodeId> neighbors(NodeId v) const;
};

// Clique expansion of the element connectivity: every pair of distinct nodes
// sharing an element becomes an edge. For quads and hexes this adds diagonals
// that are not mesh edges; nodes in no element keep empty adjacency.
Graph build_traversal_graph(const Mesh& mesh);

std::size_t component_count(const Graph& graph);

// debug dump, one line per node: "u: v1 v2 ..."
void dump_adjacency(const Graph& graph, std::ostream& out);

}  // namespace umc

#endif

#include "umc/graph.hpp"

#include <algorithm>
#include <ostream>

#include "umc/errors.hpp"

namespace umc {

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  if (v >= n_nodes()) throw ValidationError("node id " + std::to_string(v) + " out of range");
  const std::size_t begin = offsets[static_cast<std::size_t>(v)];
  const std::size_t end = offsets[static_cast<std::size_t>(v) + 1];
  return std::span<const NodeId>(adjacency).subspan(begin, end - begin);
}

Graph build_traversal_graph(const Mesh& mesh) {
  mesh.validate();
  const std::size_t n = mesh.n_nodes();
  std::vector<std::vector<NodeId>> rows(n);
  for (const Element& el : mesh.elements)
    for (NodeId u : el.nodes)
      for (NodeId v : el.nodes)
        if (u != v) rows[static_cast<std::size_t>(u)].push_back(v);

  Graph graph;
  graph.offsets.resize(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) {
    auto& row = rows[u];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    graph.offsets[u + 1] = graph.offsets[u] + row.size();
  }
  graph.adjacency.reserve(graph.offsets[n]);
  for (auto& row : rows) graph.adjacency.insert(graph.adjacency.end(), row.begin(), row.end());
  return graph;
}

std::size_t component_count(const Graph& graph) {
  const std::size_t n = graph.n_nodes();
  std::vector<bool> visited(n, false);
  std::vector<NodeId> stack;
  std::size_t components = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (visited[s]) continue;
    ++components;
    visited[s] = true;
    stack.push_back(static_cast<NodeId>(s));
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId v : graph.neighbors(u)) {
        if (!visited[static_cast<std::size_t>(v)]) {
          visited[static_cast<std::size_t>(v)] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return components;
}

void dump_adjacency(const Graph& graph, std::ostream& out) {
  for (std::size_t u = 0; u < graph.n_nodes(); ++u) {
    out << u << ':';
    for (NodeId v : graph.neighbors(static_cast<NodeId>(u))) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace umc

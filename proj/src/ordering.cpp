#include "umc/ordering.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "umc/errors.hpp"

namespace umc {

OrderingStrategy OrderingStrategy::from_string(const std::string& text) {
  OrderingStrategy s;
  if (text == "identity") {
    s.kind = Kind::identity;
  } else if (text == "greedy") {
    s.kind = Kind::greedy;
  } else if (text == "bfs") {
    s.kind = Kind::bfs;
  } else if (text == "rcm") {
    s.kind = Kind::rcm;
  } else if (text == "random" || text.rfind("random:", 0) == 0) {
    s.kind = Kind::random;
    if (text.size() > 7) {
      errno = 0;
      char* end = nullptr;
      s.seed = std::strtoull(text.c_str() + 7, &end, 10);
      if (errno != 0 || *end != '\0')
        throw ValidationError("bad random seed in strategy '" + text + "'");
    }
  } else {
    throw ValidationError("unknown ordering strategy '" + text + "'");
  }
  return s;
}

std::string OrderingStrategy::to_string() const {
  switch (kind) {
    case Kind::identity: return "identity";
    case Kind::greedy: return "greedy";
    case Kind::bfs: return "bfs";
    case Kind::rcm: return "rcm";
    case Kind::random: return "random:" + std::to_string(seed);
  }
  return "?";
}

Permutation greedy_order(const Graph& graph, std::span<const double> coords, int dim,
                         NodeId start) {
  const std::size_t n = graph.n_nodes();
  if (coords.size() != n * static_cast<std::size_t>(dim))
    throw ValidationError("coords length does not match node count");
  if (n == 0) return Permutation{};
  if (start >= n) throw ValidationError("start node " + std::to_string(start) + " out of range");

  auto dist2 = [&](NodeId a, NodeId b) {
    double s = 0.0;
    for (int d = 0; d < dim; ++d) {
      double delta = coords[static_cast<std::size_t>(a) * dim + d] -
                     coords[static_cast<std::size_t>(b) * dim + d];
      s += delta * delta;
    }
    return s;  // squared distance orders the same as distance and ties agree
  };

  Permutation path;
  path.order.reserve(n);
  std::vector<bool> visited(n, false);
  std::size_t scan = 0;  // all ids below this are visited

  NodeId current = start;
  visited[static_cast<std::size_t>(start)] = true;
  path.order.push_back(start);

  while (path.order.size() < n) {
    NodeId best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    bool found = false;
    for (NodeId v : graph.neighbors(current)) {
      if (visited[static_cast<std::size_t>(v)]) continue;
      const double d2 = dist2(current, v);
      // strict < keeps the smallest id on ties (neighbors ascend)
      if (!found || d2 < best_d2) {
        found = true;
        best = v;
        best_d2 = d2;
      }
    }
    if (!found) {
      while (visited[scan]) ++scan;
      best = static_cast<NodeId>(scan);
    }
    visited[static_cast<std::size_t>(best)] = true;
    path.order.push_back(best);
    current = best;
  }
  return path;
}

Permutation bfs_order(const Graph& graph) {
  const std::size_t n = graph.n_nodes();
  Permutation p;
  p.order.reserve(n);
  std::vector<bool> visited(n, false);
  std::vector<NodeId> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (visited[s]) continue;
    visited[s] = true;
    queue.clear();
    queue.push_back(static_cast<NodeId>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      NodeId u = queue[head];
      p.order.push_back(u);
      for (NodeId v : graph.neighbors(u)) {
        if (!visited[static_cast<std::size_t>(v)]) {
          visited[static_cast<std::size_t>(v)] = true;
          queue.push_back(v);
        }
      }
    }
  }
  return p;
}

Permutation rcm_order(const Graph& graph) {
  const std::size_t n = graph.n_nodes();
  Permutation p;
  p.order.reserve(n);
  std::vector<bool> visited(n, false);
  std::vector<NodeId> queue;
  std::vector<NodeId> component;

  for (std::size_t s = 0; s < n; ++s) {
    if (visited[s]) continue;
    // collect the component to pick its minimum-degree start
    component.clear();
    component.push_back(static_cast<NodeId>(s));
    visited[s] = true;
    for (std::size_t head = 0; head < component.size(); ++head)
      for (NodeId v : graph.neighbors(component[head]))
        if (!visited[static_cast<std::size_t>(v)]) {
          visited[static_cast<std::size_t>(v)] = true;
          component.push_back(v);
        }
    NodeId root = component[0];
    for (NodeId v : component)
      if (graph.degree(v) < graph.degree(root) || (graph.degree(v) == graph.degree(root) && v < root))
        root = v;

    for (NodeId v : component) visited[static_cast<std::size_t>(v)] = false;

    // Cuthill-McKee breadth-first with neighbors by ascending degree then id
    visited[static_cast<std::size_t>(root)] = true;
    queue.clear();
    queue.push_back(root);
    std::vector<NodeId> frontier;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      NodeId u = queue[head];
      p.order.push_back(u);
      frontier.clear();
      for (NodeId v : graph.neighbors(u))
        if (!visited[static_cast<std::size_t>(v)]) {
          visited[static_cast<std::size_t>(v)] = true;
          frontier.push_back(v);
        }
      std::sort(frontier.begin(), frontier.end(), [&](NodeId a, NodeId b) {
        return graph.degree(a) != graph.degree(b) ? graph.degree(a) < graph.degree(b) : a < b;
      });
      queue.insert(queue.end(), frontier.begin(), frontier.end());
    }
  }
  std::reverse(p.order.begin(), p.order.end());
  return p;
}

Permutation order_nodes(const OrderingStrategy& strategy, const Graph& graph,
                        std::span<const double> coords, int dim) {
  const std::size_t n = graph.n_nodes();
  switch (strategy.kind) {
    case OrderingStrategy::Kind::identity: return Permutation::identity(n);
    case OrderingStrategy::Kind::random: return random_permutation(n, strategy.seed);
    case OrderingStrategy::Kind::greedy:
      return n == 0 ? Permutation{} : greedy_order(graph, coords, dim, 0);
    case OrderingStrategy::Kind::bfs: return bfs_order(graph);
    case OrderingStrategy::Kind::rcm: return rcm_order(graph);
  }
  throw ValidationError("unknown ordering strategy");
}

std::uint64_t minla_cost(const Graph& graph, const Permutation& perm) {
  const std::size_t n = graph.n_nodes();
  if (perm.size() != n) throw ValidationError("permutation length does not match node count");
  std::vector<std::uint64_t> pos(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm.order[i] >= n) throw ValidationError("permutation entry out of range");
    pos[static_cast<std::size_t>(perm.order[i])] = i;
  }
  std::uint64_t cost = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (NodeId v : graph.neighbors(static_cast<NodeId>(u)))
      if (v > static_cast<NodeId>(u)) {
        const std::uint64_t pu = pos[u];
        const std::uint64_t pv = pos[static_cast<std::size_t>(v)];
        cost += pu > pv ? pu - pv : pv - pu;
      }
  return cost;
}

std::pair<Permutation, std::uint64_t> brute_force_minla(const Graph& graph) {
  const std::size_t n = graph.n_nodes();
  if (n > 10) throw ValidationError("exhaustive arrangement search limited to 10 nodes");
  Permutation p = Permutation::identity(n);
  Permutation best = p;
  std::uint64_t best_cost = minla_cost(graph, p);
  // lexicographic enumeration + strict improvement keeps the lexicographically
  // smallest optimal order
  while (std::next_permutation(p.order.begin(), p.order.end())) {
    const std::uint64_t cost = minla_cost(graph, p);
    if (cost < best_cost) {
      best_cost = cost;
      best = p;
    }
  }
  return {best, best_cost};
}

}  // namespace umc

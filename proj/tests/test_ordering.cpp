#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "test_util.hpp"
#include "umc/ordering.hpp"

using namespace umc;

namespace {

// edge-list graph builder for tests
Graph make_graph(std::size_t n, std::vector<std::pair<NodeId, NodeId>> edges) {
  std::vector<std::vector<NodeId>> rows(n);
  for (auto [u, v] : edges) {
    rows[static_cast<std::size_t>(u)].push_back(v);
    rows[static_cast<std::size_t>(v)].push_back(u);
  }
  Graph g;
  g.offsets.assign(n + 1, 0);
  for (std::size_t u = 0; u < n; ++u) {
    std::sort(rows[u].begin(), rows[u].end());
    rows[u].erase(std::unique(rows[u].begin(), rows[u].end()), rows[u].end());
    g.offsets[u + 1] = g.offsets[u] + rows[u].size();
  }
  for (auto& row : rows) g.adjacency.insert(g.adjacency.end(), row.begin(), row.end());
  return g;
}

Graph path_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(n, std::move(edges));
}

std::vector<double> line_coords(std::size_t n) {
  std::vector<double> coords(2 * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) coords[2 * i] = static_cast<double>(i);
  return coords;
}

Graph random_graph(std::size_t n, std::uint64_t seed, double density = 0.4) {
  SplitMix64 rng(seed);
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.next_unit() < density) edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

bool connected(const Graph& g) { return g.n_nodes() == 0 || component_count(g) == 1; }

}  // namespace

TEST_CASE("greedy order walks the closest connected node") {
  // unit square, clique of the single quad element [0,1,3,2]
  const Graph g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const std::vector<double> coords = {0, 0, 1, 0, 0, 1, 1, 1};
  const Permutation p = greedy_order(g, coords, 2, 0);
  CHECK(p.order == std::vector<NodeId>{0, 1, 3, 2});
}

TEST_CASE("greedy order jumps to the smallest unvisited id when stuck") {
  const Graph g = make_graph(4, {{0, 1}, {2, 3}});
  const Permutation p = greedy_order(g, line_coords(4), 2, 0);
  CHECK(p.order == std::vector<NodeId>{0, 1, 2, 3});
}

TEST_CASE("greedy order on an edgeless graph falls back to ascending ids") {
  const Graph g = make_graph(3, {});
  CHECK(greedy_order(g, line_coords(3), 2, 0).order == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("greedy order argument validation") {
  const Graph g = path_graph(3);
  CHECK_THROWS_AS(greedy_order(g, line_coords(3), 2, 5), ValidationError);
  CHECK_THROWS_AS(greedy_order(g, line_coords(2), 2, 0), ValidationError);
}

TEST_CASE("greedy order respects the start node") {
  const Graph g = path_graph(4);
  const Permutation p = greedy_order(g, line_coords(4), 2, 2);
  CHECK(p.order[0] == 2);
  CHECK(p.size() == 4);
  CHECK(p.is_bijection());
}

TEST_CASE("strategy dispatch") {
  const Graph g = path_graph(3);
  const auto coords = line_coords(3);

  CHECK(order_nodes(OrderingStrategy::from_string("identity"), g, coords, 2).order ==
        std::vector<NodeId>{0, 1, 2});
  CHECK(order_nodes(OrderingStrategy::from_string("rcm"), g, coords, 2).order ==
        std::vector<NodeId>{2, 1, 0});

  const Graph tri = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(order_nodes(OrderingStrategy::from_string("bfs"), tri, coords, 2).order ==
        std::vector<NodeId>{0, 1, 2});

  CHECK_THROWS_AS(OrderingStrategy::from_string("simulated-annealing"), ValidationError);
  CHECK(OrderingStrategy::from_string("random:77").seed == 77);
  CHECK(OrderingStrategy::from_string("random:77").to_string() == "random:77");
}

TEST_CASE("rcm starts at a minimum-degree node and reverses") {
  // star with an appendage: degrees 0:3, 1:1, 2:1, 3:2, 4:1
  const Graph g = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
  // CM from node 1 (lowest id among degree-1 nodes): [1,0,2,3,4], reversed
  CHECK(rcm_order(g).order == std::vector<NodeId>{4, 3, 2, 0, 1});
}

TEST_CASE("bfs covers components in ascending lowest-id order") {
  const Graph g = make_graph(6, {{4, 5}, {0, 2}, {2, 3}});
  CHECK(bfs_order(g).order == std::vector<NodeId>{0, 2, 3, 1, 4, 5});
}

TEST_CASE("arrangement cost") {
  const Graph p3 = path_graph(3);
  CHECK(minla_cost(p3, Permutation::identity(3)) == 2);
  CHECK(minla_cost(p3, Permutation{{1, 0, 2}}) == 3);

  const Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  Permutation p = Permutation::identity(4);
  do {
    CHECK(minla_cost(c4, p) >= 6);
  } while (std::next_permutation(p.order.begin(), p.order.end()));

  CHECK_THROWS_AS(minla_cost(p3, Permutation::identity(4)), ValidationError);
}

TEST_CASE("exhaustive arrangement search") {
  CHECK(brute_force_minla(path_graph(3)).second == 2);
  CHECK(brute_force_minla(path_graph(3)).first.order == std::vector<NodeId>{0, 1, 2});

  const Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(brute_force_minla(c4).second == 6);

  const Graph k3 = make_graph(3, {{0, 1}, {0, 2}, {1, 2}});
  const auto [order, cost] = brute_force_minla(k3);
  CHECK(cost == 4);
  CHECK(order.order == std::vector<NodeId>{0, 1, 2});

  CHECK_THROWS_AS(brute_force_minla(random_graph(11, 1)), ValidationError);
}

TEST_CASE("every strategy emits a bijection") {
  const char* names[] = {"identity", "random:3", "greedy", "bfs", "rcm"};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const std::size_t n = 1 + seed % 9;
    const Graph g = random_graph(n, seed);
    const auto coords = line_coords(n);
    for (const char* name : names) {
      const Permutation p = order_nodes(OrderingStrategy::from_string(name), g, coords, 2);
      CHECK(p.size() == n);
      CHECK(p.is_bijection());
    }
  }
}

TEST_CASE("cost is bounded below by the edge count") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = random_graph(3 + seed % 6, 100 + seed);
    const auto coords = line_coords(g.n_nodes());
    for (const char* name : {"greedy", "bfs", "rcm", "random:9"}) {
      const Permutation p = order_nodes(OrderingStrategy::from_string(name), g, coords, 2);
      CHECK(minla_cost(g, p) >= g.edge_count());
    }
  }
}

TEST_CASE("greedy never beats the exhaustive optimum") {
  int tried = 0;
  for (std::uint64_t seed = 0; tried < 25 && seed < 200; ++seed) {
    const std::size_t n = 2 + seed % 7;  // up to 8 nodes
    const Graph g = random_graph(n, 500 + seed);
    if (!connected(g)) continue;
    ++tried;
    const Permutation greedy = greedy_order(g, line_coords(n), 2, 0);
    CHECK(minla_cost(g, greedy) >= brute_force_minla(g).second);
  }
  CHECK(tried == 25);
}

TEST_CASE("orders are deterministic across runs") {
  const Graph g = random_graph(9, 321);
  std::vector<double> coords(18);
  SplitMix64 rng(7);
  for (auto& c : coords) c = rng.next_unit();
  for (const char* name : {"greedy", "bfs", "rcm", "random:5"}) {
    const OrderingStrategy s = OrderingStrategy::from_string(name);
    CHECK(order_nodes(s, g, coords, 2).order == order_nodes(s, g, coords, 2).order);
  }
}

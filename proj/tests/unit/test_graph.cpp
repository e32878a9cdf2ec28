#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "srgkit/geometry.hpp"
#include "srgkit/graph.hpp"

using namespace srg;

TEST_CASE("graph6 small cases") {
  CHECK(graph6_encode(Graph::complete(3)) == "Bw");
  CHECK(graph6_encode(Graph::from_edges(1, {})) == "@");
  CHECK(graph6_encode(Graph()) == "?");
  CHECK(graph6_decode("Bw") == Graph::complete(3));
  CHECK(graph6_decode(">>graph6<<Bw\n") == Graph::complete(3));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> order(1, 100);
  std::uniform_real_distribution<double> dens(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    Graph g = oracle::random_graph(order(rng), dens(rng), rng);
    const std::string s = graph6_encode(g);
    Graph h = graph6_decode(s);
    REQUIRE(h == g);
    REQUIRE(graph6_encode(h) == s);
  }
}

TEST_CASE("graph6 long length form") {
  Graph g = Graph::cycle(70);
  const std::string s = graph6_encode(g);
  CHECK(s[0] == '~');
  CHECK(graph6_decode(s) == g);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(graph6_decode(""), Graph6Error);
  CHECK_THROWS_AS(graph6_decode("B"), Graph6Error);     // missing body
  CHECK_THROWS_AS(graph6_decode("Bww"), Graph6Error);   // extra byte
  CHECK_THROWS_AS(graph6_decode("Bx"), Graph6Error);    // padding bit set
  CHECK_THROWS_AS(graph6_decode("B "), Graph6Error);    // out of range
  CHECK_THROWS_AS(graph6_decode("~??~"), Graph6Error);  // non-canonical length
  try {
    graph6_decode("Bx");
  } catch (const Graph6Error& e) {
    CHECK(e.position() == 1);
  }
}

TEST_CASE("builder rejects loops and bad vertices") {
  GraphBuilder b(3);
  CHECK_THROWS(b.add_edge(1, 1));
  CHECK_THROWS(b.add_edge(0, 3));
  CHECK_THROWS(b.add_edge(-1, 0));
}

TEST_CASE("common neighbours agree with A^2") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 5 + trial;
    Graph g = oracle::random_graph(n, 0.4, rng);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        int a2 = 0;
        for (int z = 0; z < n; ++z) a2 += g.adjacent(x, z) && g.adjacent(z, y);
        REQUIRE(common_neighbor_count(g, x, y) == a2);
        REQUIRE(static_cast<int>(common_neighbors(g, x, y).size()) == a2);
      }
  }
  CHECK_THROWS_AS(common_neighbors(Graph::complete(3), 1, 1), std::invalid_argument);
}

TEST_CASE("W(2) neighbourhood counts") {
  Graph g = wq_graph(2);
  for (int y = 1; y < g.order(); ++y) CHECK(common_neighbor_count(g, 0, y) == (g.adjacent(0, y) ? 1 : 3));
  CHECK(common_neighbor_count(Graph::petersen(), 0, 1) == 0);
}

TEST_CASE("distance partitions") {
  auto sizes = [](const VertexPartition& p) {
    std::vector<int> s;
    for (const auto& c : p.cells) s.push_back(static_cast<int>(c.size()));
    return s;
  };
  CHECK(sizes(distance_partition(wq_graph(2), 3)) == std::vector<int>{1, 6, 8});
  CHECK(sizes(distance_partition(Graph::complete(6), 0)) == std::vector<int>{1, 5});
  CHECK(sizes(distance_partition(wq_graph(4), 0)) == std::vector<int>{1, 20, 64});
  // unreachable vertices trail
  Graph two = Graph::from_edges(4, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}});
  auto p = distance_partition(two, 0);
  CHECK(sizes(p) == std::vector<int>{1, 1, 2});
  p.validate(4);
}

TEST_CASE("induced subgraphs") {
  Graph g = wq_graph(2);
  std::vector<Vertex> far, near;
  for (int x = 1; x < g.order(); ++x) (g.adjacent(0, x) ? near : far).push_back(x);
  CHECK(oracle::brute_isomorphic(induced_subgraph(g, far).graph, Graph::cube()));

  Graph w3 = wq_graph(3);
  std::vector<Vertex> nb = w3.neighbors(5);
  auto sub = induced_subgraph(w3, nb);
  CHECK(sub.original == nb);
  auto tris = maximal_cliques_of_size(sub.graph, 3);
  CHECK(tris.size() == 4);
  CHECK(sub.graph.edge_count() == 12);

  std::vector<Vertex> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  CHECK(induced_subgraph(g, all).graph == g);
  std::vector<Vertex> bad{0, 99};
  CHECK_THROWS(induced_subgraph(g, bad));
}

namespace {

std::vector<std::vector<Vertex>> naive_cliques(const Graph& g, int m, bool maximal) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != m) continue;
    std::vector<Vertex> vs;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) vs.push_back(i);
    if (!is_clique(g, vs)) continue;
    if (maximal) {
      bool ext = false;
      for (int z = 0; z < n && !ext; ++z) {
        if (mask >> z & 1) continue;
        ext = std::all_of(vs.begin(), vs.end(), [&](int x) { return g.adjacent(x, z); });
      }
      if (ext) continue;
    }
    out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("clique enumeration matches subset search") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 9;
    Graph g = oracle::random_graph(n, 0.3 + 0.01 * trial, rng);
    for (int m = 2; m <= 5; ++m) {
      REQUIRE(maximal_cliques_of_size(g, m) == naive_cliques(g, m, true));
      REQUIRE(cliques_of_size(g, m) == naive_cliques(g, m, false));
    }
  }
}

TEST_CASE("maxcliques of W(3)") {
  Graph g = wq_graph(3);
  CHECK(maximal_cliques_of_size(g, 4).size() == 40);
  for (int c : clique_counts_per_vertex(g, 4)) CHECK(c == 4);
  CHECK(maximal_cliques_of_size(Graph::complete(5), 5).size() == 1);
  CHECK(cliques_of_size(Graph::petersen(), 3).empty());
}

TEST_CASE("permuted and complement") {
  std::mt19937 rng(3);
  Graph g = oracle::random_graph(20, 0.5, rng);
  auto p = oracle::random_permutation(20, rng);
  Graph h = g.permuted(p);
  for (int u = 0; u < 20; ++u)
    for (int v = 0; v < 20; ++v) CHECK(g.adjacent(u, v) == h.adjacent(p[u], p[v]));
  Graph c = g.complement();
  CHECK(c.edge_count() + g.edge_count() == 190);
  CHECK(c.complement() == g);
}

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "srgkit/isocanon.hpp"
#include "srgkit/switchkit.hpp"

using namespace srg;

namespace {

Graph gamma2(const Graph& g, Vertex v) {
  std::vector<Vertex> far;
  for (Vertex x = 0; x < g.order(); ++x)
    if (x != v && !g.adjacent(v, x)) far.push_back(x);
  return induced_subgraph(g, far).graph;
}

Permutation transposition(int n, int a, int b) {
  Permutation p = identity_permutation(n);
  std::swap(p[a], p[b]);
  return p;
}

// D = {v} ∪ Γ1(v), one cell holding both fibres, every other fibre its own cell.
Graph gm_for_transposition(const RegularPointData& d, int a, int b) {
  std::vector<Vertex> dset{d.v};
  dset.insert(dset.end(), d.blocks.begin(), d.blocks.end());
  std::vector<std::vector<Vertex>> cells;
  std::vector<Vertex> merged = d.fibres[a];
  merged.insert(merged.end(), d.fibres[b].begin(), d.fibres[b].end());
  cells.push_back(merged);
  for (int i = 0; i < static_cast<int>(d.fibres.size()); ++i)
    if (i != a && i != b) cells.push_back(d.fibres[i]);
  return gm_switch(d.base, dset, cells);
}

}  // namespace

TEST_CASE("identity sigma reproduces the graph") {
  for (int q : {2, 3, 4}) {
    Graph g = wq_graph(q);
    auto d = decompose(g, 0, GqOrder::make(q, q));
    CHECK(switch_sigma(d, identity_permutation(q * q)) == g);
  }
  Graph h = hermitian_gq_graph(2);
  auto d = decompose(h, 3, GqOrder::make(4, 2));
  CHECK(switch_sigma(d, identity_permutation(16)) == h);
}

TEST_CASE("W(2): every sigma gives W(2)") {
  Graph g = wq_graph(2);
  auto d = decompose(g, 0, GqOrder::make(2, 2));
  Permutation p = identity_permutation(4);
  int count = 0;
  do {
    Graph h = switch_sigma(d, p);
    CHECK(check_srg(h) == SrgParams{15, 6, 1, 3});
    CHECK(are_isomorphic(h, g));
    ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  CHECK(count == 24);
}

TEST_CASE("switched graphs keep v regular with the same fibres") {
  std::mt19937 rng(11);
  Graph g = wq_graph(3);
  GqOrder o = GqOrder::make(3, 3);
  auto d = decompose(g, 4, o);
  for (int i = 0; i < 20; ++i) {
    Graph h = switch_sigma(d, oracle::random_permutation(9, rng));
    CHECK(check_srg(h) == SrgParams{40, 12, 2, 4});
    auto e = decompose(h, 4, o);
    CHECK(e.fibres == d.fibres);
    CHECK(e.cliques == d.cliques);
  }
}

TEST_CASE("fibre transposition equals Godsil-McKay switching") {
  std::mt19937 rng(5);
  for (int q : {2, 3, 4}) {
    Graph g = wq_graph(q);
    auto d = decompose(g, 1, GqOrder::make(q, q));
    for (int i = 0; i < 10; ++i) {
      int a = rng() % (q * q), b = rng() % (q * q - 1);
      if (b >= a) ++b;
      CHECK(switch_sigma(d, transposition(q * q, a, b)) == gm_for_transposition(d, a, b));
    }
  }
}

TEST_CASE("gm_switch on a six-vertex instance") {
  // 4-cycle 0-1-2-3 as the single cell; 4 meets it in {0,1}, 5 meets all of it
  GraphBuilder b(6);
  for (auto [x, y] : {std::pair{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {5, 0}, {5, 1}, {5, 2}, {5, 3}, {4, 5}})
    b.add_edge(x, y);
  Graph g = std::move(b).build();
  std::vector<Vertex> dset{4, 5};
  Graph h = gm_switch(g, dset, {{0, 1, 2, 3}});
  CHECK(h.adjacent(4, 2));
  CHECK(h.adjacent(4, 3));
  CHECK(!h.adjacent(4, 0));
  CHECK(!h.adjacent(4, 1));
  CHECK(h.adjacent(5, 0));
  CHECK(h.adjacent(4, 5));
  CHECK(h.edge_count() == g.edge_count());
  CHECK(oracle::characteristic_polynomial(h) == oracle::characteristic_polynomial(g));

  // a vertex meeting the cell in one of four is rejected
  GraphBuilder b2(g);
  b2.remove_edge(4, 1);
  Graph bad = std::move(b2).build();
  CHECK_THROWS_AS(gm_switch(bad, dset, {{0, 1, 2, 3}}), std::invalid_argument);
  // not a partition
  CHECK_THROWS_AS(gm_switch(g, dset, {{0, 1, 2}}), std::invalid_argument);
  // 0 sees both of {2,3}, 1 sees one
  GraphBuilder b3(g);
  b3.add_edge(0, 2);
  CHECK_THROWS_AS(gm_switch(std::move(b3).build(), dset, {{0, 1}, {2, 3}}), std::invalid_argument);
  // no half vertices: unchanged
  GraphBuilder b4(g);
  b4.remove_edge(4, 0);
  b4.remove_edge(4, 1);
  Graph flat = std::move(b4).build();
  CHECK(gm_switch(flat, dset, {{0, 1, 2, 3}}) == flat);
}

TEST_CASE("GM switching preserves the characteristic polynomial on random instances") {
  std::mt19937 rng(3);
  int tried = 0;
  while (tried < 30) {
    // a regular graph on the cell plus one vertex meeting half of it
    Graph cell = Graph::cycle(6);
    GraphBuilder b(8);
    for (Vertex x = 0; x < 6; ++x)
      for (Vertex y : cell.neighbors(x))
        if (y > x) b.add_edge(x, y);
    auto perm = oracle::random_permutation(6, rng);
    for (int i = 0; i < 3; ++i) b.add_edge(6, perm[i]);
    if (rng() % 2) b.add_edge(6, 7);
    if (rng() % 2)
      for (Vertex x = 0; x < 6; ++x) b.add_edge(7, x);
    Graph g = std::move(b).build();
    std::vector<Vertex> dset{6, 7};
    Graph h = gm_switch(g, dset, {{0, 1, 2, 3, 4, 5}});
    CHECK(oracle::characteristic_polynomial(h) == oracle::characteristic_polynomial(g));
    ++tried;
  }
}

TEST_CASE("spreads of small graphs") {
  auto k6 = find_spreads(Graph::complete(6), 2);
  CHECK(k6.size() == 10);
  std::set<std::vector<std::vector<Vertex>>> distinct;
  for (const auto& sp : k6) {
    CHECK(sp.cliques.size() == 2);
    distinct.insert(sp.cliques);
  }
  CHECK(distinct.size() == 10);
  CHECK(find_spreads(Graph::complete(6), 2, 3).size() == 3);
  CHECK(find_spreads(Graph::cube(), 2).empty());
  CHECK(find_spreads(Graph::petersen(), 2).empty());
  CHECK(find_spreads(Graph::complete(7), 2).empty());
}

TEST_CASE("spreads of SRG(27,10,1,5) give both 3-covers of K9") {
  Graph w3 = wq_graph(3);
  auto d = decompose(w3, 0, GqOrder::make(3, 3));
  Graph cover = gamma2(w3, 0);
  CHECK(check_antipodal_cover(cover, 3));
  Graph srg27 = add_spread(cover, antipodal_classes(cover));
  CHECK(check_srg(srg27) == SrgParams{27, 10, 1, 5});
  CHECK(remove_spread(srg27, Spread{antipodal_classes(cover)}) == cover);
  auto spreads = find_spreads(srg27, 2);
  CHECK(!spreads.empty());
  std::set<std::string> covers;
  for (const auto& sp : spreads) {
    Graph c = remove_spread(srg27, sp);
    CHECK(check_antipodal_cover(c, 3));
    covers.insert(canonical_form(c));
  }
  CHECK(covers.size() == 2);
}

TEST_CASE("add_spread on the cube and inverse pair") {
  Graph cube = Graph::cube();
  auto classes = antipodal_classes(cube);
  CHECK(classes.size() == 4);
  Graph g = add_spread(cube, classes);
  CHECK(g.edge_count() == 16);
  CHECK(check_srg(g) == SrgParams{8, 4, 0, 4});
  CHECK(remove_spread(g, Spread{classes}) == cube);
  CHECK_THROWS_AS(add_spread(cube, {{0, 1}, {2, 3, 4, 5, 6, 7}}), std::invalid_argument);
  CHECK_THROWS_AS(remove_spread(cube, Spread{classes}), std::invalid_argument);
  CHECK_THROWS_AS(remove_spread(g, Spread{{{0}}}), std::invalid_argument);
}

TEST_CASE("sigma in the same collineation coset gives isomorphic graphs") {
  std::mt19937 rng(17);
  Graph g = wq_graph(3);
  auto d = decompose(g, 0, GqOrder::make(3, 3));
  auto gens = collineation_generators(d.net);
  CHECK(group_order(gens, 9) == 432);
  for (int i = 0; i < 10; ++i) {
    Permutation c = identity_permutation(9);
    for (int j = 0; j < 6; ++j) c = compose(gens[rng() % gens.size()], c);
    CHECK(is_collineation(c, d.net));
    Permutation sigma = oracle::random_permutation(9, rng);
    CHECK(are_isomorphic(switch_sigma(d, sigma), switch_sigma(d, compose(c, sigma))));
  }
}

TEST_CASE("s > t: sigma must be an automorphism of the quotient") {
  Graph h = hermitian_gq_graph(2);
  auto d = decompose(h, 0, GqOrder::make(4, 2));
  // two collinear fibres and one non-collinear: swapping breaks adjacency
  int a = 0, b = 1;
  while (d.quotient.adjacent(a, b)) ++b;
  CHECK_THROWS_AS(switch_sigma(d, transposition(16, a, b)), std::invalid_argument);
  CHECK_THROWS_AS(switch_sigma(d, Permutation{0, 1, 2}), std::invalid_argument);
  Permutation dup = identity_permutation(16);
  dup[3] = 4;
  CHECK_THROWS_AS(assemble(d, dup), std::invalid_argument);
  // a collineation switch reproduces the class
  auto gens = collineation_generators(d.net);
  for (const auto& c : gens) CHECK(are_isomorphic(switch_sigma(d, c), h));
}

TEST_CASE("cycles on collinear points: clique fingerprint") {
  const int q = 3;
  Graph g = wq_graph(q);
  auto d = decompose(g, 0, GqOrder::make(q, q));
  const auto& line = d.net.blocks[0];
  for (int r = 2; r <= q; ++r) {
    Permutation sigma = identity_permutation(q * q);
    for (int i = 0; i < r; ++i) sigma[line[i]] = line[(i + 1) % r];
    auto counts = clique_counts_per_vertex(switch_sigma(d, sigma), q + 1);
    std::map<int, int> hist, want;
    for (int c : counts) ++hist[c];
    want[1] += 2 * r * q;
    want[q + 1] += 2 * q * q - (2 * r - 1) * q + 1;
    want[q + 1 - r] += q * q * q - q * q;
    CHECK(hist == want);
  }
}

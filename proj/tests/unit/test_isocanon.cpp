#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "srgkit/geometry.hpp"
#include "srgkit/isocanon.hpp"
#include "srgkit/specalg.hpp"

using namespace srg;

namespace {

Graph kneser52() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) pairs.push_back({a, b});
  return Graph::from_predicate(10, [&](int x, int y) {
    auto [a, b] = pairs[x];
    auto [c, d] = pairs[y];
    return a != c && a != d && b != c && b != d;
  });
}

}  // namespace

TEST_CASE("canonical forms are relabelling invariant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> order(1, 64);
  std::uniform_real_distribution<double> dens(0.05, 0.95);
  for (int trial = 0; trial < 1000; ++trial) {
    Graph g = oracle::random_graph(order(rng), dens(rng), rng);
    Graph h = g.permuted(oracle::random_permutation(g.order(), rng));
    REQUIRE(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("relabelling invariance on symmetric graphs") {
  std::mt19937 rng(12);
  std::vector<Graph> graphs{Graph::cube(), Graph::petersen(), wq_graph(2), wq_graph(3), lattice_graph(4),
                            bilinear_forms_graph(2), hermitian_gq_graph(2), Graph::complete(9), Graph::cycle(17)};
  for (const auto& g : graphs) {
    const auto form = canonical_form(g);
    CHECK(graph6_decode(form).order() == g.order());
    for (int i = 0; i < 25; ++i) REQUIRE(canonical_form(g.permuted(oracle::random_permutation(g.order(), rng))) == form);
  }
}

TEST_CASE("canonical labelling reproduces the form") {
  Graph g = wq_graph(3);
  auto cl = canonical_labeling(g);
  CHECK(is_permutation(cl.labeling));
  CHECK(graph6_encode(g.permuted(cl.labeling)) == cl.form);
}

TEST_CASE("isomorphism agrees with brute force on small graphs") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> order(1, 8);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = order(rng);
    Graph g = oracle::random_graph(n, 0.5, rng);
    Graph h = trial % 2 ? g.permuted(oracle::random_permutation(n, rng)) : oracle::random_graph(n, 0.5, rng);
    REQUIRE(are_isomorphic(g, h) == oracle::brute_isomorphic(g, h));
  }
}

TEST_CASE("known isomorphisms") {
  CHECK(are_isomorphic(Graph::petersen(), kneser52()));
  // K4,4 minus a perfect matching
  Graph k44 = Graph::from_predicate(8, [](int x, int y) { return (x < 4) != (y < 4) && x % 4 != y % 4; });
  CHECK(are_isomorphic(Graph::cube(), k44));
  CHECK(oracle::brute_isomorphic(Graph::cube(), k44));
  CHECK_FALSE(are_isomorphic(Graph::cube(), Graph::cycle(8)));
  CHECK(are_isomorphic(lattice_graph(4).complement(), bilinear_forms_graph(2)));
}

TEST_CASE("automorphism group orders") {
  auto order_of = [](const Graph& g) { return group_order(automorphism_generators(g), g.order()); };
  CHECK(order_of(Graph::cube()) == 48);
  CHECK(order_of(Graph::petersen()) == 120);
  CHECK(order_of(Graph::complete(9)) == 362880);
  CHECK(order_of(Graph::cycle(7)) == 14);
  CHECK(order_of(bilinear_forms_graph(2)) == 1152);
  CHECK(order_of(wq_graph(2)) == 720);
  CHECK(order_of(wq_graph(3)) == 51840);
  Graph inc = net_incidence_graph(affine_plane(3));
  CHECK(order_of(inc) == 432);
  std::mt19937 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(7, 0.45, rng);
    auto gens = automorphism_generators(g);
    for (const auto& p : gens) REQUIRE(is_automorphism(g, p));
    REQUIRE(static_cast<long long>(group_order(gens, 7)) == oracle::brute_automorphism_count(g));
  }
}

TEST_CASE("group order from explicit generators") {
  Permutation cyc{1, 2, 3, 4, 5, 0}, tr{1, 0, 2, 3, 4, 5};
  std::vector<Permutation> gens{cyc, tr};
  CHECK(group_order(gens, 6) == 720);
  std::vector<Permutation> only{cyc};
  CHECK(group_order(only, 6) == 6);
  CHECK(group_order(std::vector<Permutation>{}, 4) == 1);
  CHECK(orbits(only, 6).size() == 1);
  CHECK_THROWS(group_order(std::vector<Permutation>{{0, 0}}, 2));
}

TEST_CASE("collineations of AG(2,3)") {
  Net n = affine_plane(3);
  // translation (x,y) -> (x+1,y)
  Permutation tr(9);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) tr[x * 3 + y] = ((x + 1) % 3) * 3 + y;
  CHECK(is_collineation(tr, n));
  Permutation swap = identity_permutation(9);
  std::swap(swap[0], swap[1]);
  CHECK_FALSE(is_collineation(swap, n));
  CHECK_THROWS(is_collineation(identity_permutation(8), n));
  auto gens = collineation_generators(n);
  for (const auto& g : gens) CHECK(is_collineation(g, n));
  CHECK(group_order(gens, 9) == 432);
  auto nc = non_collineation_automorphism(n);
  REQUIRE(nc);
  CHECK_FALSE(is_collineation(*nc, n));
}

TEST_CASE("type swapping automorphisms of bilinear forms graphs") {
  for (int q : {2, 3}) {
    auto tr = type_swapping_automorphism(q);
    REQUIRE(tr);
    CHECK(*tr == bilinear_transpose(q));
    Graph g = bilinear_forms_graph(q);
    auto generic = type_swapping_automorphism(g);
    REQUIRE(generic);
    CHECK(is_automorphism(g, *generic));
    // it maps some column-type clique to a row-type one
    auto c = maximal_cliques_of_size(g, q * q).front();
    std::vector<Vertex> img;
    for (Vertex x : c) img.push_back((*generic)[x]);
    std::sort(img.begin(), img.end());
    CHECK(bilinear_clique_type(q, img) != bilinear_clique_type(q, c));
  }
  // identity fixes types: the generic search never returns it
  CHECK_FALSE(type_swapping_automorphism(Graph::petersen()));
}

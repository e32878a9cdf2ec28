#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "srgkit/geometry.hpp"
#include "srgkit/specalg.hpp"

using namespace srg;

TEST_CASE("PG(3,q) point counts") {
  CHECK(pg3_points(2).size() == 15);
  CHECK(pg3_points(3).size() == 40);
  CHECK(pg3_points(5).size() == 156);
  auto pts = pg3_points(4);
  CHECK(std::is_sorted(pts.begin(), pts.end()));
  for (const auto& p : pts) {
    int first = 0;
    while (p.coords[first] == 0) ++first;
    CHECK(p.coords[first] == 1);
  }
  CHECK_THROWS(pg3_points(6));
  CHECK_THROWS(pg3_points(27));
}

TEST_CASE("lines of PG(3,q)") {
  ProjectiveSpace3 ps(Field::of_order(3));
  ProjLine l = ps.line(0, 7);
  CHECK(l.points.size() == 4);
  for (std::size_t i = 0; i < l.points.size(); ++i)
    for (std::size_t j = i + 1; j < l.points.size(); ++j) CHECK(ps.line(l.points[i], l.points[j]).points == l.points);
}

TEST_CASE("W(q) parameters") {
  CHECK(check_srg(wq_graph(2)) == SrgParams{15, 6, 1, 3});
  CHECK(check_srg(wq_graph(3)) == SrgParams{40, 12, 2, 4});
  CHECK(check_srg(wq_graph(4)) == SrgParams{85, 20, 3, 5});
  CHECK(check_srg(wq_graph(5)) == SrgParams{156, 30, 4, 6});
}

TEST_CASE("W(q) adjacency is the alternating form") {
  // Independent evaluation through FieldElement arithmetic.
  const int q = 3;
  Field f = Field::of_order(q);
  auto pts = pg3_points(q);
  Graph g = wq_graph(q);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      auto x = [&](int k) { return f.element(pts[i].coords[k]); };
      auto y = [&](int k) { return f.element(pts[j].coords[k]); };
      auto form = x(0) * y(1) - x(1) * y(0) + x(2) * y(3) - x(3) * y(2);
      REQUIRE(g.adjacent(static_cast<int>(i), static_cast<int>(j)) == form.is_zero());
    }
}

TEST_CASE("Hermitian quadrangles") {
  // 45 points by direct scan of PG(3,4)
  const int q = 2;
  Field f = Field::of_order(q * q);
  int count = 0;
  for (const auto& p : pg3_points(q * q)) {
    auto s = f.zero();
    for (auto c : p.coords) s = s + f.element(c).pow(q + 1);
    count += s.is_zero();
  }
  CHECK(count == 45);
  CHECK(hermitian_points(2).size() == 45);
  CHECK(check_srg(hermitian_gq_graph(2)) == SrgParams{45, 12, 3, 3});
  CHECK(check_srg(hermitian_gq_graph(3)) == SrgParams{280, 36, 8, 4});
}

TEST_CASE("affine planes") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    Net n = affine_plane(q);
    n.validate();
    CHECK(n.point_count == q * q);
    CHECK(static_cast<int>(n.blocks.size()) == q * q + q);
    CHECK(n.classes() == q + 1);
    // every pair of points on exactly one line
    std::map<std::pair<int, int>, int> pairs;
    for (const auto& b : n.blocks)
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j) ++pairs[{b[i], b[j]}];
    CHECK(static_cast<int>(pairs.size()) == q * q * (q * q - 1) / 2);
    for (auto& [_, c] : pairs) CHECK(c == 1);
    CHECK(net_collinearity_graph(n) == Graph::complete(q * q));
  }
}

TEST_CASE("net validation reports violations") {
  Net n = affine_plane(3);
  Net bad = n;
  std::swap(bad.blocks[0][1], bad.blocks[3][1]);
  std::sort(bad.blocks[0].begin(), bad.blocks[0].end());
  std::sort(bad.blocks[3].begin(), bad.blocks[3].end());
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  Net short_class = n;
  short_class.parallel_classes[0].pop_back();
  CHECK_THROWS_AS(short_class.validate(), std::invalid_argument);
}

TEST_CASE("net incidence graph") {
  Net n = affine_plane(3);
  Graph g = net_incidence_graph(n);
  CHECK(g.order() == 21);
  CHECK(g.edge_count() == 36);
}

TEST_CASE("bilinear forms graph") {
  CHECK(check_srg(bilinear_forms_graph(2)) == SrgParams{16, 9, 4, 6});
  CHECK(check_srg(bilinear_forms_graph(3)) == SrgParams{81, 32, 13, 12});
  CHECK(check_srg(lattice_graph(4)) == SrgParams{16, 6, 2, 2});
  CHECK(oracle::brute_isomorphic(lattice_graph(3).complement(), lattice_graph(3)));
  for (int q : {2, 3}) {
    Graph g = bilinear_forms_graph(q);
    auto cliques = maximal_cliques_of_size(g, q * q);
    int col = 0, row = 0;
    // each edge in exactly one clique of each type
    std::map<std::pair<int, int>, std::pair<int, int>> per_edge;
    for (const auto& c : cliques) {
      auto type = bilinear_clique_type(q, c);
      REQUIRE(type != BilinearCliqueType::kNeither);
      (type == BilinearCliqueType::kFixedColumnSpace ? col : row)++;
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
          auto& e = per_edge[{c[i], c[j]}];
          (type == BilinearCliqueType::kFixedColumnSpace ? e.first : e.second)++;
        }
    }
    CHECK(col == row);
    CHECK(static_cast<long long>(per_edge.size()) == g.edge_count());
    for (auto& [_, e] : per_edge) CHECK(e == std::pair{1, 1});
    auto tr = bilinear_transpose(q);
    CHECK(g.permuted(tr) == g);
  }
}

TEST_CASE("GqOrder") {
  CHECK(GqOrder::make(4, 2).vertex_count() == 45);
  CHECK_THROWS(GqOrder::make(2, 3));
  CHECK_THROWS(GqOrder::make(1, 1));
}

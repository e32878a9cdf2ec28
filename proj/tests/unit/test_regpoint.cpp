#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "srgkit/isocanon.hpp"
#include "srgkit/regpoint.hpp"
#include "srgkit/switchkit.hpp"

using namespace srg;

namespace {

// Definition-level span: perp of the common neighbours, points collinear with themselves.
std::vector<Vertex> span_by_definition(const Graph& g, Vertex v, Vertex x) {
  auto common = common_neighbors(g, v, x);
  std::vector<Vertex> out;
  for (Vertex z = 0; z < g.order(); ++z) {
    bool ok = true;
    for (Vertex c : common) ok = ok && (z == c || g.adjacent(z, c));
    if (ok) out.push_back(z);
  }
  return out;
}

void check_equivalence(const Graph& g, GqOrder o) {
  for (Vertex v = 0; v < g.order(); ++v) {
    const bool reg = is_regular_point(g, v, o);
    CHECK(reg == scheme_on_second_subconstituent(g, v, o).has_value());
  }
}

}  // namespace

TEST_CASE("span sizes") {
  Graph w2 = wq_graph(2), w3 = wq_graph(3);
  for (Vertex x = 1; x < w2.order(); ++x) {
    if (w2.adjacent(0, x)) continue;
    auto sp = span(w2, 0, x);
    CHECK(sp.size() == 3);
    CHECK(sp == span_by_definition(w2, 0, x));
    CHECK(std::find(sp.begin(), sp.end(), 0) != sp.end());
    CHECK(std::find(sp.begin(), sp.end(), x) != sp.end());
  }
  for (Vertex x = 1; x < w3.order(); ++x)
    if (!w3.adjacent(5, x) && x != 5) CHECK(span(w3, 5, x) == span_by_definition(w3, 5, x));
  CHECK_THROWS_AS(span(w3, 3, 3), std::invalid_argument);
  Vertex nb = w3.neighbors(0).front();
  CHECK_THROWS_AS(span(w3, 0, nb), std::invalid_argument);
}

TEST_CASE("regular points of W(q) and H(3,4)") {
  CHECK(regular_points(wq_graph(2), GqOrder::make(2, 2)).size() == 15);
  CHECK(regular_points(wq_graph(3), GqOrder::make(3, 3)).size() == 40);
  auto h = hermitian_gq_graph(2);
  auto rp = regular_points(h, GqOrder::make(4, 2));
  CHECK(rp.size() == 45);
  check_equivalence(wq_graph(3), GqOrder::make(3, 3));
}

TEST_CASE("precondition: parameters must match") {
  CHECK_THROWS_AS(is_regular_point(Graph::cycle(5), 0, GqOrder::make(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(regular_points(Graph::petersen(), GqOrder::make(2, 2)), std::invalid_argument);
  CHECK_THROWS_AS(is_regular_point(wq_graph(2), 0, GqOrder::make(3, 3)), std::invalid_argument);
  CHECK_THROWS_AS(is_regular_point(wq_graph(2), 15, GqOrder::make(2, 2)), std::out_of_range);
}

TEST_CASE("decompose W(2)") {
  Graph g = wq_graph(2);
  auto d = decompose(g, 0, GqOrder::make(2, 2));
  CHECK(d.fibres.size() == 4);
  for (const auto& f : d.fibres) CHECK(f.size() == 2);
  CHECK(d.net.point_count == 4);
  CHECK(d.net.blocks.size() == 6);
  CHECK(d.net.classes() == 3);
  CHECK(d.quotient == Graph::complete(4));
  CHECK(d.phi == identity_permutation(4));
  // second subconstituent is the cube
  std::vector<Vertex> far;
  for (Vertex x = 1; x < 15; ++x)
    if (!g.adjacent(0, x)) far.push_back(x);
  CHECK(oracle::brute_isomorphic(induced_subgraph(g, far).graph, Graph::cube()));
  CHECK(assemble(d, d.phi) == g);
}

TEST_CASE("decompose W(3) at every vertex") {
  Graph g = wq_graph(3);
  GqOrder o = GqOrder::make(3, 3);
  for (Vertex v = 0; v < g.order(); v += 7) {
    auto d = decompose(g, v, o);
    CHECK(d.fibres.size() == 9);
    CHECK(d.quotient == Graph::complete(9));
    CHECK(d.cliques.size() == 4);
    // fibres in order of minimum, members share their Γ1(v)-neighbourhood of size t+1
    for (std::size_t i = 0; i + 1 < d.fibres.size(); ++i) CHECK(d.fibres[i].front() < d.fibres[i + 1].front());
    for (const auto& f : d.fibres) {
      CHECK(f.size() == 3);
      auto nb = [&](Vertex x) {
        std::vector<Vertex> out;
        for (Vertex b : d.blocks)
          if (g.adjacent(b, x)) out.push_back(b);
        return out;
      };
      auto first = nb(f.front());
      CHECK(first.size() == 4);
      for (Vertex x : f) CHECK(nb(x) == first);
    }
    CHECK(assemble(d, d.phi) == g);
  }
}

TEST_CASE("incidence identities on a decomposition") {
  // M M^T = sI + (J - I - C) and M^T M = (t+1)I + quotient
  for (auto [g, o] : {std::pair{wq_graph(3), GqOrder::make(3, 3)}, std::pair{hermitian_gq_graph(2), GqOrder::make(4, 2)}}) {
    auto d = decompose(g, 0, o);
    const int nb = static_cast<int>(d.blocks.size()), np = d.net.point_count;
    std::vector<std::vector<int>> m(nb, std::vector<int>(np, 0));
    for (int b = 0; b < nb; ++b)
      for (int p : d.net.blocks[b]) m[b][p] = 1;
    std::vector<int> cls(nb);
    for (int c = 0; c < static_cast<int>(d.cliques.size()); ++c)
      for (int b : d.cliques[c]) cls[b] = c;
    for (int a = 0; a < nb; ++a)
      for (int b = 0; b < nb; ++b) {
        int dot = 0;
        for (int p = 0; p < np; ++p) dot += m[a][p] * m[b][p];
        CHECK(dot == (a == b ? o.s : (cls[a] == cls[b] ? 0 : 1)));
      }
    for (int x = 0; x < np; ++x)
      for (int y = 0; y < np; ++y) {
        int dot = 0;
        for (int b = 0; b < nb; ++b) dot += m[b][x] * m[b][y];
        CHECK(dot == (x == y ? o.t + 1 : d.quotient.adjacent(x, y)));
      }
  }
}

TEST_CASE("decompose the Hermitian quadrangle") {
  Graph g = hermitian_gq_graph(2);
  auto d = decompose(g, 0, GqOrder::make(4, 2));
  CHECK(d.fibres.size() == 16);
  CHECK(d.net.classes() == 3);
  CHECK(check_srg(d.quotient) == SrgParams{16, 9, 4, 6});
  CHECK(are_isomorphic(d.quotient, bilinear_forms_graph(2)));
  CHECK(are_isomorphic(d.quotient, lattice_graph(4).complement()));
}

TEST_CASE("decompose rejects non-regular points") {
  // a 3-cycle on non-collinear points of AG(2,3) keeps v regular but breaks other points
  Graph g = wq_graph(3);
  GqOrder o = GqOrder::make(3, 3);
  auto d = decompose(g, 0, o);
  Permutation sigma = identity_permutation(9);
  // choose three points not on a common block
  std::vector<int> pts;
  for (int p = 0; p < 9 && pts.size() < 3; ++p) {
    bool ok = true;
    if (pts.size() == 2)
      for (const auto& blk : d.net.blocks)
        ok = ok && !(std::count(blk.begin(), blk.end(), pts[0]) && std::count(blk.begin(), blk.end(), pts[1]) &&
                     std::count(blk.begin(), blk.end(), p));
    if (ok) pts.push_back(p);
  }
  sigma[pts[0]] = pts[1];
  sigma[pts[1]] = pts[2];
  sigma[pts[2]] = pts[0];
  Graph h = switch_sigma(d, sigma);
  CHECK(is_regular_point(h, 0, o));
  auto rp = regular_points(h, o);
  CHECK(rp.size() < 40);
  check_equivalence(h, o);
  Vertex bad = 0;
  while (std::count(rp.begin(), rp.end(), bad)) ++bad;
  CHECK_THROWS_AS(decompose(h, bad, o), std::invalid_argument);
  // some span at a non-regular point is not a 4-coclique
  bool bad_span = false;
  for (Vertex x = 0; x < h.order(); ++x)
    if (x != bad && !h.adjacent(bad, x)) {
      auto sp = span(h, bad, x);
      bad_span = bad_span || sp.size() != 4 || !is_coclique(h, sp);
    }
  CHECK(bad_span);
}

TEST_CASE("dump format") {
  auto d = decompose(wq_graph(2), 0, GqOrder::make(2, 2));
  std::string text = to_text(d);
  CHECK(text.rfind("regular-point 0\norder 2 2\nclique 0:", 0) == 0);
  CHECK(text.find("fibre 3:") != std::string::npos);
  CHECK(text.find("phi: 0 1 2 3\n") != std::string::npos);
}

#include "srgkit/switchkit.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace srg {
namespace {

// owner[x] = index of the part containing x; throws unless parts partition [0,n).
std::vector<int> partition_owner(int n, const std::vector<std::vector<Vertex>>& parts, const char* what) {
  std::vector<int> owner(n, -1);
  for (int i = 0; i < static_cast<int>(parts.size()); ++i)
    for (Vertex x : parts[i]) {
      if (x < 0 || x >= n) throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(x) + " out of range");
      if (owner[x] >= 0)
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(x) + " appears twice");
      owner[x] = i;
    }
  for (Vertex x = 0; x < n; ++x)
    if (owner[x] < 0) throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(x) + " not covered");
  return owner;
}

}  // namespace

Graph assemble(const RegularPointData& d, std::span<const int> phi) {
  const int points = d.net.point_count;
  if (static_cast<int>(phi.size()) != points || !is_permutation(phi))
    throw std::invalid_argument("assemble: phi is not a bijection of the " + std::to_string(points) + " net points");
  if (d.order.s > d.order.t) {
    Graph col = net_collinearity_graph(d.net);
    for (int a = 0; a < points; ++a)
      for (int b = a + 1; b < points; ++b)
        if (d.quotient.adjacent(a, b) != col.adjacent(phi[a], phi[b]))
          throw std::invalid_argument("assemble: phi is not an isomorphism onto the net collinearity graph (fibres " +
                                      std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  std::vector<int> fibre_at(points);
  for (int w = 0; w < points; ++w) fibre_at[phi[w]] = w;

  GraphBuilder b(d.skeleton);
  for (std::size_t blk = 0; blk < d.blocks.size(); ++blk)
    for (int p : d.net.blocks[blk])
      for (Vertex x : d.fibres[fibre_at[p]]) b.add_edge(d.blocks[blk], x);
  Graph out = std::move(b).build();

  auto params = check_srg(out);
  if (!params || !(*params == gq_params(d.order.s, d.order.t)))
    throw std::logic_error("assemble: result is not strongly regular with parameters " +
                           to_string(gq_params(d.order.s, d.order.t)));
  return out;
}

Graph switch_sigma(const RegularPointData& d, std::span<const int> sigma) {
  if (static_cast<int>(sigma.size()) != d.net.point_count || !is_permutation(sigma))
    throw std::invalid_argument("switch_sigma: sigma is not a permutation of the net points");
  return assemble(d, compose(sigma, d.phi));
}

Graph gm_switch(const Graph& g, std::span<const Vertex> d, const std::vector<std::vector<Vertex>>& cells) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> parts(cells);
  parts.emplace_back(d.begin(), d.end());
  const int dpart = static_cast<int>(cells.size());
  std::vector<int> owner = partition_owner(n, parts, "gm_switch");
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].empty()) throw std::invalid_argument("gm_switch: cell " + std::to_string(i) + " is empty");

  auto count_in = [&](Vertex x, int cell) {
    int c = 0;
    for (Vertex y : cells[cell]) c += g.adjacent(x, y);
    return c;
  };
  for (int i = 0; i < dpart; ++i)
    for (int j = 0; j < dpart; ++j) {
      const int want = count_in(cells[i][0], j);
      for (Vertex x : cells[i])
        if (count_in(x, j) != want)
          throw std::invalid_argument("gm_switch: cells " + std::to_string(i) + " and " + std::to_string(j) +
                                      " are not equitable at vertex " + std::to_string(x));
    }

  GraphBuilder b(g);
  for (Vertex x : d)
    for (int j = 0; j < dpart; ++j) {
      const int k = count_in(x, j), m = static_cast<int>(cells[j].size());
      if (k == 0 || k == m) continue;
      if (2 * k != m)
        throw std::invalid_argument("gm_switch: vertex " + std::to_string(x) + " meets cell " + std::to_string(j) +
                                    " in " + std::to_string(k) + " of " + std::to_string(m) + " vertices");
      for (Vertex y : cells[j]) b.toggle_edge(x, y);
    }
  return std::move(b).build();
}

std::vector<Spread> find_spreads(const Graph& g, int s, std::optional<std::size_t> limit) {
  const int n = g.order(), m = s + 1;
  std::vector<Spread> out;
  if (m < 1 || n % m != 0) return out;
  const auto cliques = cliques_of_size(g, m);
  std::vector<Bitset> sets;
  std::vector<std::vector<int>> on(n);
  for (int i = 0; i < static_cast<int>(cliques.size()); ++i) {
    sets.emplace_back(n, cliques[i]);
    for (Vertex x : cliques[i]) on[x].push_back(i);
  }
  Bitset covered(n);
  std::vector<int> chosen;
  std::function<bool()> rec = [&]() -> bool {
    Vertex u = 0;
    while (u < n && covered.test(u)) ++u;
    if (u == n) {
      Spread sp;
      for (int c : chosen) sp.cliques.push_back(cliques[c]);
      out.push_back(std::move(sp));
      return limit && out.size() >= *limit;
    }
    for (int c : on[u]) {
      Bitset meet = sets[c];
      meet &= covered.words();
      if (!meet.none()) continue;
      covered |= sets[c].words();
      chosen.push_back(c);
      const bool stop = rec();
      chosen.pop_back();
      covered.and_not(sets[c].words());
      if (stop) return true;
    }
    return false;
  };
  rec();
  return out;
}

Graph remove_spread(const Graph& g, const Spread& spread) {
  partition_owner(g.order(), spread.cliques, "remove_spread");
  GraphBuilder b(g);
  for (const auto& c : spread.cliques) {
    if (!is_clique(g, c)) throw std::invalid_argument("remove_spread: a spread member is not a clique");
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) b.remove_edge(c[i], c[j]);
  }
  return std::move(b).build();
}

Graph add_spread(const Graph& cover, const std::vector<std::vector<Vertex>>& classes) {
  partition_owner(cover.order(), classes, "add_spread");
  GraphBuilder b(cover);
  for (const auto& c : classes) {
    if (!is_coclique(cover, c)) throw std::invalid_argument("add_spread: a class is not a coclique");
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) b.add_edge(c[i], c[j]);
  }
  return std::move(b).build();
}

}  // namespace srg

#include "srgkit/regpoint.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "srgkit/switchkit.hpp"

namespace srg {
namespace {

void require_params(const Graph& g, GqOrder order) {
  auto p = check_srg(g);
  if (!p || !(*p == gq_params(order.s, order.t)))
    throw std::invalid_argument("graph is not strongly regular with parameters " + to_string(gq_params(order.s, order.t)));
}

bool closed_row_contains(const Graph& g, Vertex z, std::span<const Word> set) {
  auto rz = g.row(z);
  for (std::size_t i = 0; i < set.size(); ++i) {
    Word closed = rz[i];
    if (static_cast<std::size_t>(z >> 6) == i) closed |= Word{1} << (z & 63);
    if ((closed & set[i]) != set[i]) return false;
  }
  return true;
}

// Components of Γ1(v) when each is a clique of size s; empty otherwise.
std::vector<std::vector<Vertex>> neighbourhood_cliques(const Graph& g, Vertex v, int s) {
  Bitset rest(g.order());
  rest |= g.row(v);
  std::vector<std::vector<Vertex>> out;
  while (!rest.none()) {
    Vertex x = rest.members().front();
    Bitset c(g.order());
    c |= g.row(x);
    c &= g.row(v);
    c.set(x);
    std::vector<Vertex> members = c.members();
    if (static_cast<int>(members.size()) != s || !is_clique(g, members)) return {};
    for (Vertex y : members) {
      if (!rest.test(y)) return {};
      rest.reset(y);
    }
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::vector<Vertex> span(const Graph& g, Vertex v, Vertex x) {
  if (v == x) throw std::invalid_argument("span: vertices must be distinct");
  if (g.adjacent(v, x)) throw std::invalid_argument("span: vertices must be non-adjacent");
  Bitset common(g.order());
  common |= g.row(v);
  common &= g.row(x);
  std::vector<Vertex> out;
  if (common.none()) {
    for (Vertex z = 0; z < g.order(); ++z) out.push_back(z);
    return out;
  }
  // Candidates lie in the closed neighbourhood of any common neighbour.
  const Vertex c0 = common.members().front();
  std::vector<Vertex> cand = g.neighbors(c0);
  cand.push_back(c0);
  std::sort(cand.begin(), cand.end());
  for (Vertex z : cand)
    if (closed_row_contains(g, z, common.words())) out.push_back(z);
  return out;
}

namespace detail {

bool is_regular_point_unchecked(const Graph& g, Vertex v, GqOrder order) {
  auto cliques = neighbourhood_cliques(g, v, order.s);
  if (static_cast<int>(cliques.size()) != order.t + 1) return false;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x == v || g.adjacent(v, x)) continue;
    auto sp = span(g, v, x);
    if (static_cast<int>(sp.size()) != order.t + 1 || !is_coclique(g, sp)) return false;
  }
  return true;
}

}  // namespace detail

bool is_regular_point(const Graph& g, Vertex v, GqOrder order) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("is_regular_point: vertex out of range");
  require_params(g, order);
  return detail::is_regular_point_unchecked(g, v, order);
}

std::vector<Vertex> regular_points(const Graph& g, GqOrder order) {
  require_params(g, order);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (detail::is_regular_point_unchecked(g, v, order)) out.push_back(v);
  return out;
}

RegularPointData decompose(const Graph& g, Vertex v, GqOrder order) {
  if (!is_regular_point(g, v, order))
    throw std::invalid_argument("decompose: vertex " + std::to_string(v) + " is not a regular point");
  const int s = order.s, t = order.t, n = g.order();
  auto fail = [v](const std::string& what) { throw std::logic_error("decompose at " + std::to_string(v) + ": " + what); };

  RegularPointData d;
  d.base = g;
  d.order = order;
  d.v = v;
  d.blocks = g.neighbors(v);
  std::vector<int> block_of(n, -1);
  for (int i = 0; i < static_cast<int>(d.blocks.size()); ++i) block_of[d.blocks[i]] = i;
  for (const auto& c : neighbourhood_cliques(g, v, s)) {
    std::vector<int> idx;
    for (Vertex x : c) idx.push_back(block_of[x]);
    d.cliques.push_back(std::move(idx));
  }

  auto res = scheme_check(g, v, order);
  if (!res.scheme) fail("scheme check failed: " + res.failure);
  d.scheme = std::move(*res.scheme);

  std::vector<int> fibre_of(n, -1);
  for (Vertex x = 0; x < n; ++x) {
    if (x == v || g.adjacent(v, x) || fibre_of[x] >= 0) continue;
    std::vector<Vertex> f;
    for (Vertex y : span(g, v, x))
      if (y != v) f.push_back(y);
    if (static_cast<int>(f.size()) != t) fail("fibre of size " + std::to_string(f.size()));
    for (Vertex y : f) {
      if (fibre_of[y] >= 0) fail("overlapping spans");
      fibre_of[y] = static_cast<int>(d.fibres.size());
    }
    d.fibres.push_back(std::move(f));
  }
  if (static_cast<int>(d.fibres.size()) != s * s) fail("expected s^2 fibres");
  // Same fibres as the scheme's identical-neighbourhood classes.
  if (d.scheme.fibres.size() != d.fibres.size()) fail("span fibres differ from scheme fibres");
  for (std::size_t i = 0; i < d.fibres.size(); ++i) {
    std::vector<Vertex> f;
    for (int local : d.scheme.fibres[i]) f.push_back(d.scheme.vertices[local]);
    if (f != d.fibres[i]) fail("span fibres differ from scheme fibres");
  }

  d.net.point_count = s * s;
  d.net.blocks.resize(d.blocks.size());
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b) {
    for (int w = 0; w < s * s; ++w) {
      int hits = 0;
      for (Vertex x : d.fibres[w]) hits += g.adjacent(d.blocks[b], x);
      if (hits == t) d.net.blocks[b].push_back(w);
      else if (hits != 0) fail("block " + std::to_string(d.blocks[b]) + " meets a fibre partially");
    }
  }
  d.net.parallel_classes = d.cliques;
  try {
    d.net.validate();
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }

  GraphBuilder qb(s * s);
  for (Vertex x = 0; x < n; ++x) {
    if (fibre_of[x] < 0) continue;
    for_each_bit(g.row(x), [&](int y) {
      if (fibre_of[y] >= 0 && fibre_of[y] != fibre_of[x] && !qb.adjacent(fibre_of[x], fibre_of[y]))
        qb.add_edge(fibre_of[x], fibre_of[y]);
    });
  }
  d.quotient = std::move(qb).build();
  d.phi = identity_permutation(s * s);
  if (!(net_collinearity_graph(d.net) == d.quotient)) fail("quotient differs from the net collinearity graph");

  auto report = verify_subconstituent_equations(g, v, order);
  if (!report.all_pass()) fail("identity check failed\n" + report.to_text());

  GraphBuilder sk(n);
  for (Vertex b : d.blocks) sk.add_edge(v, b);
  for (const auto& c : d.cliques)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) sk.add_edge(d.blocks[c[i]], d.blocks[c[j]]);
  for (Vertex x = 0; x < n; ++x) {
    if (fibre_of[x] < 0) continue;
    for_each_bit(g.row(x), [&](int y) {
      if (y > x && fibre_of[y] >= 0) sk.add_edge(x, y);
    });
  }
  d.skeleton = std::move(sk).build();

  if (!(assemble(d, d.phi) == g)) fail("reassembly does not reproduce the graph");
  return d;
}

std::string to_text(const RegularPointData& d) {
  std::ostringstream os;
  os << "regular-point " << d.v << "\n";
  os << "order " << d.order.s << " " << d.order.t << "\n";
  for (std::size_t i = 0; i < d.cliques.size(); ++i) {
    os << "clique " << i << ":";
    for (int b : d.cliques[i]) os << " " << d.blocks[b];
    os << "\n";
  }
  for (std::size_t i = 0; i < d.fibres.size(); ++i) {
    os << "fibre " << i << ":";
    for (Vertex x : d.fibres[i]) os << " " << x;
    os << "\n";
  }
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    os << "block " << d.blocks[b] << ":";
    for (int p : d.net.blocks[b]) os << " " << p;
    os << "\n";
  }
  os << "phi: " << to_string(d.phi) << "\n";
  return os.str();
}

}  // namespace srg

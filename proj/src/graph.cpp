#include "srgkit/graph.hpp"

#include <algorithm>
#include <deque>

namespace srg {

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree(v));
  for_each_bit(row(v), [&](int u) { out.push_back(u); });
  return out;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (Vertex v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u)
    for_each_bit(row(u), [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permuted: size mismatch");
  GraphBuilder b(n_);
  for (Vertex u = 0; u < n_; ++u)
    for_each_bit(row(u), [&](int v) {
      if (u < v) b.add_edge(perm[u], perm[v]);
    });
  return std::move(b).build();
}

Graph Graph::complement() const {
  return from_predicate(n_, [&](Vertex u, Vertex v) { return !adjacent(u, v); });
}

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::complete(int n) {
  return from_predicate(n, [](Vertex, Vertex) { return true; });
}

Graph Graph::cycle(int n) {
  return from_predicate(n, [n](Vertex u, Vertex v) { return v - u == 1 || (u == 0 && v == n - 1); });
}

Graph Graph::petersen() {
  // Outer 5-cycle 0..4, spokes i–i+5, inner pentagram on 5..9.
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build();
}

Graph Graph::cube() {
  return from_predicate(8, [](Vertex u, Vertex v) { return std::popcount(static_cast<unsigned>(u ^ v)) == 1; });
}

void GraphBuilder::check(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("graph: vertex out of range");
  if (u == v) throw std::invalid_argument("graph: loops are not allowed");
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  rows_[u * wpr_ + (v >> 6)] |= Word{1} << (v & 63);
  rows_[v * wpr_ + (u >> 6)] |= Word{1} << (u & 63);
}

void GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  rows_[u * wpr_ + (v >> 6)] &= ~(Word{1} << (v & 63));
  rows_[v * wpr_ + (u >> 6)] &= ~(Word{1} << (u & 63));
}

void GraphBuilder::toggle_edge(Vertex u, Vertex v) {
  check(u, v);
  rows_[u * wpr_ + (v >> 6)] ^= Word{1} << (v & 63);
  rows_[v * wpr_ + (u >> 6)] ^= Word{1} << (u & 63);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.n_ = n_;
  g.wpr_ = wpr_;
  g.rows_ = std::move(rows_);
  return g;
}

void VertexPartition::validate(int n) const {
  std::vector<char> seen(n, 0);
  int total = 0;
  for (const auto& cell : cells)
    for (Vertex v : cell) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition: vertex out of range");
      if (seen[v]) throw std::invalid_argument("partition: vertex " + std::to_string(v) + " repeated");
      seen[v] = 1;
      ++total;
    }
  if (total != n) throw std::invalid_argument("partition: cells do not cover all vertices");
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs) {
  std::vector<Vertex> sorted(vs.begin(), vs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted)
    if (v < 0 || v >= g.order()) throw std::out_of_range("induced_subgraph: vertex out of range");
  const int m = static_cast<int>(sorted.size());
  GraphBuilder b(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g.adjacent(sorted[i], sorted[j])) b.add_edge(i, j);
  return {std::move(b).build(), std::move(sorted)};
}

std::vector<int> distances_from(const Graph& g, Vertex v) {
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for_each_bit(g.row(u), [&](int w) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

VertexPartition distance_partition(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("distance_partition: vertex out of range");
  auto dist = distances_from(g, v);
  int depth = *std::max_element(dist.begin(), dist.end());
  VertexPartition p;
  p.cells.resize(depth + 1);
  std::vector<Vertex> unreachable;
  for (Vertex u = 0; u < g.order(); ++u) {
    if (dist[u] < 0)
      unreachable.push_back(u);
    else
      p.cells[dist[u]].push_back(u);
  }
  if (!unreachable.empty()) p.cells.push_back(std::move(unreachable));
  return p;
}

std::vector<Vertex> common_neighbors(const Graph& g, Vertex x, Vertex y) {
  if (x == y) throw std::invalid_argument("common_neighbors: x == y");
  Bitset s(g.order());
  s |= g.row(x);
  s &= g.row(y);
  return s.members();
}

int common_neighbor_count(const Graph& g, Vertex x, Vertex y) {
  auto rx = g.row(x), ry = g.row(y);
  int c = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) c += std::popcount(rx[i] & ry[i]);
  return c;
}

namespace {

struct CliqueSearch {
  const Graph& g;
  int m;
  std::vector<Vertex> r;
  std::vector<std::vector<Vertex>> out;

  // Bron–Kerbosch with pivoting, restricted to cliques of size exactly m.
  void bk(Bitset p, Bitset x) {
    const int rs = static_cast<int>(r.size());
    if (rs == m) {
      if (p.none() && x.none()) {
        auto c = r;
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
      }
      return;
    }
    const int pc = p.count();
    if (rs + pc < m || pc == 0) return;

    // Pivot maximising |P ∩ N(u)| over P ∪ X.
    Vertex pivot = -1;
    int best = -1;
    auto consider = [&](int u) {
      int c = 0;
      auto row = g.row(u);
      auto pw = p.words();
      for (std::size_t i = 0; i < pw.size(); ++i) c += std::popcount(pw[i] & row[i]);
      if (c > best) {
        best = c;
        pivot = u;
      }
    };
    for_each_bit(p.words(), consider);
    for_each_bit(x.words(), consider);

    Bitset cand = p;
    cand.and_not(g.row(pivot));
    for (Vertex v : cand.members()) {
      Bitset np = p, nx = x;
      np &= g.row(v);
      nx &= g.row(v);
      r.push_back(v);
      bk(std::move(np), std::move(nx));
      r.pop_back();
      p.reset(v);
      x.set(v);
    }
  }

  // Plain ordered enumeration of all m-cliques.
  void all(Bitset cand) {
    if (static_cast<int>(r.size()) == m) {
      out.push_back(r);
      return;
    }
    if (static_cast<int>(r.size()) + cand.count() < m) return;
    for (Vertex v : cand.members()) {
      Bitset next = cand;
      next &= g.row(v);
      // Only larger vertices keep the enumeration ordered and duplicate-free.
      for (int u = 0; u <= v; ++u) next.reset(u);
      r.push_back(v);
      all(std::move(next));
      r.pop_back();
    }
  }
};

}  // namespace

std::vector<std::vector<Vertex>> maximal_cliques_of_size(const Graph& g, int m) {
  if (m < 1) throw std::invalid_argument("maximal_cliques_of_size: m must be positive");
  CliqueSearch s{g, m, {}, {}};
  Bitset p(g.order()), x(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= m - 1) p.set(v);
  // A vertex of degree < m-1 can neither lie in nor extend an m-clique.
  s.bk(std::move(p), std::move(x));
  std::sort(s.out.begin(), s.out.end());
  return std::move(s.out);
}

std::vector<std::vector<Vertex>> cliques_of_size(const Graph& g, int m) {
  if (m < 1) throw std::invalid_argument("cliques_of_size: m must be positive");
  CliqueSearch s{g, m, {}, {}};
  Bitset cand(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= m - 1) cand.set(v);
  s.all(std::move(cand));
  return std::move(s.out);
}

std::vector<int> clique_counts_per_vertex(const Graph& g, int m) {
  std::vector<int> counts(g.order(), 0);
  for (const auto& c : maximal_cliques_of_size(g, m))
    for (Vertex v : c) ++counts[v];
  return counts;
}

bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || !g.adjacent(vs[i], vs[j])) return false;
  return true;
}

bool is_coclique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j] || g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace srg

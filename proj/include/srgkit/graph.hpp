#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace srg {

using Vertex = int;
using Word = std::uint64_t;

inline int words_for(int n) { return (n + 63) / 64; }

// Calls f(i) for every set bit i of a word row, ascending.
template <class F>
void for_each_bit(std::span<const Word> row, F&& f) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    Word bits = row[w];
    while (bits) {
      f(static_cast<int>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
}

inline int popcount(std::span<const Word> row) {
  int c = 0;
  for (Word w : row) c += std::popcount(w);
  return c;
}

// Fixed-size dynamic bitset over vertex ids.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_(words_for(n), 0) {}
  Bitset(int n, std::span<const Vertex> members) : Bitset(n) {
    for (Vertex v : members) set(v);
  }

  int size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { w_[i >> 6] |= Word{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(Word{1} << (i & 63)); }
  int count() const { return popcount(w_); }
  bool none() const {
    for (Word w : w_)
      if (w) return false;
    return true;
  }
  std::span<const Word> words() const { return w_; }
  std::span<Word> words() { return w_; }
  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for_each_bit(words(), [&](int i) { out.push_back(i); });
    return out;
  }

  Bitset& operator&=(std::span<const Word> o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o[i];
    return *this;
  }
  Bitset& operator|=(std::span<const Word> o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o[i];
    return *this;
  }
  Bitset& and_not(std::span<const Word> o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o[i];
    return *this;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  int n_ = 0;
  std::vector<Word> w_;
};

// Simple undirected loopless graph stored as n bitset rows of 64-bit words.
// Values are immutable once built; GraphBuilder assembles them.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int words_per_row() const { return wpr_; }
  std::span<const Word> row(Vertex v) const {
    return {rows_.data() + static_cast<std::size_t>(v) * wpr_, static_cast<std::size_t>(wpr_)};
  }
  bool adjacent(Vertex u, Vertex v) const { return (row(u)[v >> 6] >> (v & 63)) & 1; }
  int degree(Vertex v) const { return popcount(row(v)); }
  std::vector<Vertex> neighbors(Vertex v) const;
  long long edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  // Relabel: vertex v of *this becomes perm[v] in the result.
  Graph permuted(std::span<const Vertex> perm) const;
  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  template <class Pred>
  static Graph from_predicate(int n, Pred&& adjacent);

  // Named small graphs used throughout the tests and CLI.
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph petersen();
  static Graph cube();

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int wpr_ = 0;
  std::vector<Word> rows_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : n_(n), wpr_(words_for(n)), rows_(static_cast<std::size_t>(n) * wpr_, 0) {}
  explicit GraphBuilder(const Graph& g) : n_(g.n_), wpr_(g.wpr_), rows_(g.rows_) {}

  int order() const { return n_; }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return (rows_[u * wpr_ + (v >> 6)] >> (v & 63)) & 1; }
  Graph build() &&;

 private:
  void check(Vertex u, Vertex v) const;
  int n_;
  int wpr_;
  std::vector<Word> rows_;
};

template <class Pred>
Graph Graph::from_predicate(int n, Pred&& adjacent) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

// Image-array permutation: x -> p[x].
using Permutation = std::vector<Vertex>;

bool is_permutation(std::span<const Vertex> p);
Permutation identity_permutation(int n);
Permutation inverse(std::span<const Vertex> p);
// (a ∘ b)[x] = a[b[x]]
Permutation compose(std::span<const Vertex> a, std::span<const Vertex> b);
// Parses "3 1 0 2"; throws std::invalid_argument unless it is a permutation.
Permutation parse_permutation(std::string_view text);
std::string to_string(std::span<const Vertex> p);

// Ordered list of disjoint vertex sets covering [0, n).
struct VertexPartition {
  std::vector<std::vector<Vertex>> cells;

  std::size_t size() const { return cells.size(); }
  const std::vector<Vertex>& operator[](std::size_t i) const { return cells[i]; }
  // Throws std::invalid_argument unless the cells are disjoint and cover [0, n).
  void validate(int n) const;
};

// graph6 codec (McKay's format). Decoding accepts an optional ">>graph6<<"
// header and trailing newline; anything else malformed throws Graph6Error
// naming the byte position.
class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(std::size_t pos, const std::string& what)
      : std::invalid_argument("graph6: " + what + " at byte " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new index -> original vertex
};

// Vertices renumbered in ascending original order; duplicates are ignored.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vs);

// BFS layers from v; unreachable vertices form a trailing cell.
VertexPartition distance_partition(const Graph& g, Vertex v);
// Distance from v to every vertex, -1 when unreachable.
std::vector<int> distances_from(const Graph& g, Vertex v);

// N(x) ∩ N(y); throws std::invalid_argument when x == y.
std::vector<Vertex> common_neighbors(const Graph& g, Vertex x, Vertex y);
int common_neighbor_count(const Graph& g, Vertex x, Vertex y);

// All maximal cliques with exactly m vertices (pivoting Bron–Kerbosch, pruned
// to size m). Each clique sorted, list sorted lexicographically.
std::vector<std::vector<Vertex>> maximal_cliques_of_size(const Graph& g, int m);
// All cliques with exactly m vertices, maximal or not, same ordering.
std::vector<std::vector<Vertex>> cliques_of_size(const Graph& g, int m);
// Number of maximal m-cliques through each vertex.
std::vector<int> clique_counts_per_vertex(const Graph& g, int m);

bool is_clique(const Graph& g, std::span<const Vertex> vs);
bool is_coclique(const Graph& g, std::span<const Vertex> vs);

}  // namespace srg

#pragma once

#include <array>
#include <vector>

#include "srgkit/field.hpp"
#include "srgkit/graph.hpp"

namespace srg {

// Order (s,t) of a (pseudo-)generalized quadrangle, s >= t >= 2.
struct GqOrder {
  int s = 0;
  int t = 0;

  // Throws std::invalid_argument unless s >= t >= 2.
  static GqOrder make(int s, int t);

  long long vertex_count() const { return static_cast<long long>(s + 1) * (s * t + 1); }
  friend bool operator==(GqOrder, GqOrder) = default;
};

// Canonical projective point: first nonzero coordinate is 1.
struct ProjPoint {
  std::array<Field::Index, 4> coords{};
  friend auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

struct ProjLine {
  std::array<int, 2> spanned_by{};
  std::vector<int> points;  // sorted point indices, q+1 of them
};

// PG(3,q) with points in lexicographic order of their canonical coordinates.
class ProjectiveSpace3 {
 public:
  explicit ProjectiveSpace3(Field f);

  const Field& field() const { return f_; }
  const std::vector<ProjPoint>& points() const { return points_; }
  int point_count() const { return static_cast<int>(points_.size()); }
  // Index of the point represented by any nonzero vector.
  int index_of(std::array<Field::Index, 4> v) const;
  ProjLine line(int i, int j) const;

 private:
  Field f_;
  std::vector<ProjPoint> points_;
  std::vector<int> index_of_code_;
};

// A (t+1)-net of order s: s^2 points, (t+1)s blocks of s points each, the
// blocks split into t+1 parallel classes of s mutually disjoint blocks.
struct Net {
  int point_count = 0;
  std::vector<std::vector<int>> blocks;             // sorted point lists
  std::vector<std::vector<int>> parallel_classes;   // block indices

  int order() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().size()); }
  int classes() const { return static_cast<int>(parallel_classes.size()); }
  // Throws std::invalid_argument naming the first violated net axiom.
  void validate() const;
  // point -> list of incident blocks.
  std::vector<std::vector<int>> blocks_on_points() const;
};

// Supported q: prime powers up to 25.
void require_supported_q(int q);

std::vector<ProjPoint> pg3_points(int q);

// Collinearity graph of the symplectic quadrangle W(q): distinct points x, y
// adjacent iff x^T S y = 0 for the alternating form x0y1 - x1y0 + x2y3 - x3y2.
Graph wq_graph(int q);

// Points of the Hermitian surface sum x_i^(q+1) = 0 in PG(3,q^2), as indices
// into the ProjectiveSpace3 over GF(q^2), ascending.
std::vector<int> hermitian_points(int q);
// Collinearity graph of H(3,q^2); supported for q <= 4.
Graph hermitian_gq_graph(int q);

// AG(2,q): point (x,y) has index x*q + y; lines y = mx + b grouped by slope m,
// then the vertical lines x = c as the last parallel class.
Net affine_plane(int q);

Graph net_collinearity_graph(const Net& net);

// Bipartite point/block incidence graph: points 0..P-1, then blocks.
Graph net_incidence_graph(const Net& net);

// Bilinear forms graph H_q(2,2) on 2x2 matrices over GF(q), adjacent iff the
// difference has rank 1. Vertex of [[a,b],[c,d]] is ((a*q + b)*q + c)*q + d
// with entries as field indices.
Graph bilinear_forms_graph(int q);
std::array<Field::Index, 4> bilinear_matrix(int q, int vertex);
int bilinear_vertex(int q, std::array<Field::Index, 4> m);
// X -> X^T on the vertex set of bilinear_forms_graph(q).
std::vector<Vertex> bilinear_transpose(int q);

enum class BilinearCliqueType { kFixedColumnSpace, kFixedRowSpace, kNeither };
// Classifies a q^2-clique of H_q(2,2) by whether all its differences share a
// column space or a row space.
BilinearCliqueType bilinear_clique_type(int q, const std::vector<Vertex>& clique);

// The m x m lattice (rook's) graph K_m x K_m.
Graph lattice_graph(int m);

}  // namespace srg

#pragma once

#include <string>
#include <vector>

#include "srgkit/geometry.hpp"
#include "srgkit/graph.hpp"
#include "srgkit/specalg.hpp"

namespace srg {

// Decomposition of a graph at a regular point v.
//   blocks   : Γ1(v) in ascending order; block i is vertex blocks[i]
//   cliques  : the t+1 cliques of Γ1(v), as block indices, ordered by minimum
//   fibres   : the s^2 fibres of Γ2(v) (original vertex ids), ordered by minimum
//   net      : points = fibre indices, block i = fibres completely joined to blocks[i],
//              parallel classes = cliques
//   phi      : fibre -> net point (identity for a fresh decomposition)
//   quotient : graph on fibres, adjacent when some edge of Γ2(v) joins them
struct RegularPointData {
  Graph base;
  GqOrder order;
  Vertex v = -1;
  std::vector<Vertex> blocks;
  std::vector<std::vector<int>> cliques;
  SchemePartition scheme;
  std::vector<std::vector<Vertex>> fibres;
  Net net;
  Permutation phi;
  Graph quotient;
  // Edges that do not depend on phi: v to Γ1(v), within parallel classes, and Γ2(v).
  Graph skeleton;
};

// {z : N[z] ⊇ N(v) ∩ N(x)}, closed neighbourhoods. Throws std::invalid_argument
// if v = x or v ~ x.
std::vector<Vertex> span(const Graph& g, Vertex v, Vertex x);

// Γ1(v) is a disjoint union of t+1 cliques of size s, and every span(v,x) with
// x ≁ v is a coclique of size t+1. Throws std::invalid_argument unless g is
// strongly regular with the parameters of order.
bool is_regular_point(const Graph& g, Vertex v, GqOrder order);
std::vector<Vertex> regular_points(const Graph& g, GqOrder order);

// Throws std::invalid_argument if v is not a regular point, std::logic_error if
// any internal invariant fails (never returns partial data).
RegularPointData decompose(const Graph& g, Vertex v, GqOrder order);

// Line-oriented dump used by the CLI.
std::string to_text(const RegularPointData& d);

namespace detail {
bool is_regular_point_unchecked(const Graph& g, Vertex v, GqOrder order);
}

}  // namespace srg

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "srgkit/graph.hpp"
#include "srgkit/regpoint.hpp"

namespace srg {

// Reassembles the graph from a decomposition with fibre -> net point map phi,
// keeping the original vertex ids. For s > t phi must be an isomorphism from
// the quotient onto the net collinearity graph (std::invalid_argument
// otherwise). The result is re-certified strongly regular; failure throws
// std::logic_error.
Graph assemble(const RegularPointData& d, std::span<const int> phi);

// assemble(d, sigma ∘ phi); sigma permutes net points.
Graph switch_sigma(const RegularPointData& d, std::span<const int> sigma);

// Godsil–McKay switching with respect to D and cells partitioning the rest.
// Throws std::invalid_argument naming the offending vertex or cell when the
// partition is not a partition, the cells are not equitable, or a vertex of D
// meets a cell in something other than none, half or all of it.
Graph gm_switch(const Graph& g, std::span<const Vertex> d, const std::vector<std::vector<Vertex>>& cells);

// A partition of the vertices into cliques of size s+1.
struct Spread {
  std::vector<std::vector<Vertex>> cliques;
  friend bool operator==(const Spread&, const Spread&) = default;
};

// All spreads, by exact cover over the (s+1)-cliques: the lowest uncovered
// vertex is covered first, candidate cliques in ascending order. Stops after
// limit spreads when given.
std::vector<Spread> find_spreads(const Graph& g, int s, std::optional<std::size_t> limit = std::nullopt);

// Deletes the edges inside every spread clique. Throws std::invalid_argument
// if the spread is not a partition into cliques.
Graph remove_spread(const Graph& g, const Spread& spread);
// Joins every class into a clique. Throws std::invalid_argument unless the
// classes partition the vertices into cocliques.
Graph add_spread(const Graph& cover, const std::vector<std::vector<Vertex>>& classes);

}  // namespace srg

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "srgkit/geometry.hpp"
#include "srgkit/graph.hpp"

namespace srg {

// graph6 bytes of the canonically relabelled graph.
using CanonicalForm = std::string;

struct CanonicalLabeling {
  Permutation labeling;  // vertex -> canonical position
  CanonicalForm form;
  std::vector<Permutation> generators;  // generate the (colour-preserving) automorphism group
  long long leaves = 0;                 // search statistics
  long long nodes = 0;
};

// Individualization-refinement search. colours (optional, one integer per
// vertex) restrict to colour-preserving relabellings; cells are ordered by
// colour value, so equal forms imply an isomorphism mapping colour c to c.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colours = {});
CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& g, const Graph& h);
std::vector<Permutation> automorphism_generators(const Graph& g, std::span<const int> colours = {});

// Order of the permutation group on [0,n) generated by gens (deterministic
// Schreier–Sims). Throws std::overflow_error beyond 2^64-1.
std::uint64_t group_order(std::span<const Permutation> gens, int n);

// Orbits of the group generated by gens, each sorted, ordered by minimum.
std::vector<std::vector<Vertex>> orbits(std::span<const Permutation> gens, int n);

bool is_automorphism(const Graph& g, std::span<const Vertex> p);

// sigma acts on net points; true iff it maps every block onto a block.
// Throws std::invalid_argument on size mismatch.
bool is_collineation(std::span<const Vertex> sigma, const Net& net);

// Collineation group of a net: automorphisms of the point/block incidence
// graph with points and blocks coloured apart, restricted to the points.
std::vector<Permutation> collineation_generators(const Net& net);

// Automorphism of the net collinearity graph that is not a collineation, or
// nothing if the collinearity graph's whole group preserves the blocks.
std::optional<Permutation> non_collineation_automorphism(const Net& net);

// For the bilinear forms graph in its matrix labelling: X -> X^T, checked to be
// an automorphism that swaps the two clique types. Nothing on a failed check.
std::optional<Permutation> type_swapping_automorphism(int q);
// Generic form: splits the q^2-cliques of an H_q(2,2)-like graph into the two
// families (cliques of one family meet in 0 or 1 vertices) and returns an
// automorphism generator exchanging them, if any.
std::optional<Permutation> type_swapping_automorphism(const Graph& bform);

}  // namespace srg

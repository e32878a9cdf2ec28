#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "srgkit/geometry.hpp"
#include "srgkit/graph.hpp"

namespace srg {

using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

IntMatrix adjacency_matrix(const Graph& g);

struct SrgParams {
  int v = 0, k = 0, a = 0, c = 0;

  // k(k - a - 1) = (v - k - 1)c
  bool feasible() const {
    return static_cast<long long>(k) * (k - a - 1) == static_cast<long long>(v - k - 1) * c;
  }
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

std::string to_string(const SrgParams& p);

// Parameters ((s+1)(st+1), s(t+1), s-1, t+1).
SrgParams gq_params(int s, int t);
// (s,t) = (a+1, c-1) when the parameters are exactly of GQ shape (any s,t >= 1).
std::optional<std::pair<int, int>> gq_shape(const SrgParams& p);

// Parameters of g if it is strongly regular (regular, constant adjacent and
// non-adjacent common-neighbour counts, neither complete nor edgeless).
std::optional<SrgParams> check_srg(const Graph& g);

// First eigenmatrix of the imprimitive 4-class scheme on the second
// subconstituent of a regular point, rows = eigenspaces, columns = relations.
using Eigenmatrix = Eigen::Matrix<long long, 5, 5>;
// Throws std::invalid_argument when s < t.
Eigenmatrix eigenmatrix(int s, int t);

// Intersection numbers p^k_{ij} implied by the eigenmatrix, indexed
// [k][i][j] over the relations present (4 classes, or 3 when s = t).
// Throws std::logic_error if any is not a non-negative integer.
std::vector<std::vector<std::vector<long long>>> scheme_intersection_numbers(int s, int t);
// Eigenspace multiplicities implied by the eigenmatrix (same row subset).
std::vector<long long> scheme_multiplicities(int s, int t);

// Relations on the second subconstituent of v:
//   1 adjacent, 2 non-adjacent with t common neighbours (collinear fibres),
//   3 same fibre, 4 non-adjacent with t+1 common neighbours; 0 on the diagonal.
struct SchemePartition {
  GqOrder order;
  Vertex base_vertex = -1;
  Graph base;                           // induced graph on Γ2(v), local indices
  std::vector<Vertex> vertices;         // local index -> original vertex
  std::vector<std::uint8_t> relations;  // row-major n x n labels
  std::vector<std::vector<int>> fibres; // local indices, ordered by minimum member
  std::vector<int> fibre_of;            // local index -> fibre

  int size() const { return static_cast<int>(vertices.size()); }
  int relation(int x, int y) const { return relations[static_cast<std::size_t>(x) * size() + y]; }
  int class_count() const { return order.s == order.t ? 3 : 4; }
};

struct SchemeResult {
  std::optional<SchemePartition> scheme;
  std::string failure;  // empty on success, e.g. "P-MATRIX FAIL at p^2_{11}"
};

// Builds and certifies the scheme; every intersection number is checked
// exhaustively against the eigenmatrix. Requires g to be SRG with the
// pseudo-GQ parameters of order; otherwise fails with a precondition message.
SchemeResult scheme_check(const Graph& g, Vertex v, GqOrder order);
std::optional<SchemePartition> scheme_on_second_subconstituent(const Graph& g, Vertex v, GqOrder order);

// Same as scheme_check without re-verifying the SRG precondition.
SchemeResult scheme_check_unchecked(const Graph& g, Vertex v, GqOrder order);

struct EquationResult {
  std::string name;  // "EQ2", "EQ5", ...
  bool pass = false;
};

struct EquationReport {
  std::vector<EquationResult> results;
  bool all_pass() const;
  int failures() const;
  // One "EQn PASS" / "EQn FAIL" line per identity.
  std::string to_text() const;
};

// Exact integer check of the block identities for the partition of A by
// {v}, Γ1(v), the rest. Fibres are the classes of identical Γ1(v)-
// neighbourhoods; B2/B4 split the remaining non-adjacent pairs by whether
// their fibres share a neighbour in Γ1(v). Never throws on odd inputs: a
// graph without the expected structure simply fails identities.
EquationReport verify_subconstituent_equations(const Graph& g, Vertex v, GqOrder order);

struct IntersectionArray {
  std::vector<int> b;  // b_0 .. b_{d-1}
  std::vector<int> c;  // c_1 .. c_d
  std::string to_string() const;  // "{8,6,1;1,3,8}"
  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

// The intersection array if g is connected and distance-regular.
std::optional<IntersectionArray> intersection_array(const Graph& g);

// Distance-regular with array {q^2-1, q^2-q, 1; 1, q, q^2-1} and the
// distance-3 relation an equivalence with classes of size q.
bool check_antipodal_cover(const Graph& g, int q);

// Antipodal classes ({x} ∪ Γ3(x)) of an antipodal cover, ordered by minimum
// member; empty when distance-3 is not an equivalence.
std::vector<std::vector<Vertex>> antipodal_classes(const Graph& g);

struct Eigenvalue {
  long long value;
  long long multiplicity;
};

// Exact spectrum certificate: prod (A - theta I) = 0 and tr(A^j) equals
// sum m theta^j for j = 0..3. Throws std::overflow_error if exact int64
// evaluation cannot be guaranteed.
bool check_spectrum_by_annihilation(const IntMatrix& a, const std::vector<Eigenvalue>& spectrum);
bool check_spectrum_by_annihilation(const Graph& g, const std::vector<Eigenvalue>& spectrum);

}  // namespace srg

#pragma once

// Symmetry reduction of the search Hamiltonian.
//
// Vertices that share a cell of an equitable partition (with the marked
// vertex alone in cell 0) keep equal amplitudes under the walk, so the
// dynamics from a cell-uniform state live in the span of the normalized
// cell indicators. The quotient acting there has entries
//
//   Q(a, b) = d(a, b) * sqrt(|C_a| / |C_b|),
//
// where d(a, b) is the number of neighbors a vertex of C_a has in C_b.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kronwalk/graph.hpp"
#include "kronwalk/state.hpp"

namespace kronwalk {

struct Partition {
  std::vector<std::vector<Vertex>> cells;  // each sorted ascending
  std::vector<std::uint64_t> cell_sizes;

  std::size_t num_cells() const noexcept { return cells.size(); }
  std::uint64_t num_vertices() const noexcept;
};

struct ReducedHamiltonian {
  Eigen::MatrixXd matrix;     // -gamma * adjacency - |0><0|
  Eigen::MatrixXd adjacency;  // symmetrized quotient of A
  double gamma = 0.0;
  std::vector<std::uint64_t> cell_sizes;

  std::size_t dimension() const noexcept { return cell_sizes.size(); }
  std::uint64_t num_vertices() const noexcept;
};

/// Coarsest equitable refinement of {{w}, V \ {w}}. Cells are split by exact
/// neighbor-count signatures until stable, then ordered: {w} first, the rest
/// by smallest member.
Partition equitable_partition(const Graph& g, Vertex w);

/// Neighbor counts d(a, b), or nullopt if some cell is not uniform.
std::optional<std::vector<std::vector<std::uint64_t>>> cell_neighbor_counts(const Graph& g,
                                                                             const Partition& p);

bool is_equitable(const Graph& g, const Partition& p);

/// Quotient of H = -gamma A - |w><w| on p. Throws InvalidArgument when p is
/// not equitable or w is not alone in cell 0.
ReducedHamiltonian reduce_hamiltonian(const Graph& g, const Partition& p, double gamma, Vertex w);

/// Builds the reduced Hamiltonian from neighbor counts d(a, b); cell 0 is
/// the marked cell.
ReducedHamiltonian quotient_from_counts(const std::vector<std::vector<std::uint64_t>>& counts,
                                        std::vector<std::uint64_t> cell_sizes, double gamma);

/// Uniform superposition in the reduced basis: component c is sqrt(|C_c|/N).
StateVector project_uniform(const Partition& p, std::uint64_t num_vertices);
StateVector project_uniform(const std::vector<std::uint64_t>& cell_sizes);

/// Cell-uniform embedding: vertex v in cell c gets coefficient(c)/sqrt(|C_c|).
StateVector lift(const Partition& p, const StateVector& reduced);

// --- Kronecker powers of K_M ---------------------------------------------

/// Permutation into class order for a partition of K_M^{(x) j}: marked,
/// adjacent (all coordinates differ from w), then the remaining cells by
/// increasing number of differing coordinates. For j = 3 this is the
/// (a, b, c, d) order of the usual four-state basis. Entry i is the index of the
/// partition cell placed at position i. Throws InvalidArgument if a cell
/// mixes Hamming distances from w.
std::vector<std::size_t> kronecker_class_order(const Partition& p, std::uint32_t m,
                                               std::uint32_t order, Vertex w);

ReducedHamiltonian permute(const ReducedHamiltonian& h, const std::vector<std::size_t>& order);
Partition permute(const Partition& p, const std::vector<std::size_t>& order);

/// Closed-form quotient of K_M^{(x) j} for j in {1, 2, 3}, in class order.
/// Needs no graph, so it serves M far beyond what can be materialized.
ReducedHamiltonian closed_form_quotient(std::uint32_t m, std::uint32_t order, double gamma);

/// Nonadjacent vertex classes of K_M^{(x) 3} relative to the marked vertex,
/// described by (set, subset, position) = coordinates (p1, p2, p3).
struct CensusRow {
  std::string description;
  std::uint64_t count = 0;
  std::uint64_t mutual_neighbors = 0;
  int vertex_type = 0;  // 2 = adjacent, 3 or 4 = nonadjacent classes
};

struct Census {
  std::uint32_t m = 0;
  std::vector<CensusRow> rows;  // six nonadjacent rows, then the adjacent class

  /// 1 (marked) + every row count.
  std::uint64_t total() const noexcept;
};

/// Throws InvalidArgument for M < 3.
Census third_order_census(std::uint32_t m);

}  // namespace kronwalk

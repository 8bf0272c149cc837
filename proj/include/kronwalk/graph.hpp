#pragma once

// Undirected simple graphs with Kronecker-power construction.
//
// A Graph is either materialized (sorted neighbor lists in CSR layout) or,
// for Kronecker powers of the complete graph that are too large to store,
// implicit: adjacency is decided from vertex coordinates (u ~ v iff every
// coordinate differs) and neighbors are enumerated on the fly.

#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kronwalk/errors.hpp"

namespace kronwalk {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using Complex = std::complex<double>;

/// Largest vertex count addressable by Vertex.
inline constexpr std::uint64_t kMaxVertices = std::numeric_limits<Vertex>::max();

/// Neighbor-list entries above which a complete-initiator Kronecker power is
/// kept implicit instead of materialized.
inline constexpr std::uint64_t kMaxMaterializedEntries = std::uint64_t{1} << 25;

/// Where a graph came from: initiator size M and Kronecker order j.
struct Provenance {
  std::uint32_t initiator_size = 1;
  std::uint32_t order = 1;
  bool complete_initiator = false;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// Mixed-radix coordinates p_1..p_j of a Kronecker vertex, most significant
/// first, each in [0, M).
struct VertexCode {
  std::vector<std::uint32_t> positions;

  friend bool operator==(const VertexCode&, const VertexCode&) = default;
};

/// index = sum_i p_i * M^(j-i). Throws InvalidArgument on a coordinate >= M.
Vertex encode(const VertexCode& code, std::uint32_t initiator_size);

/// Inverse of encode. Throws InvalidArgument when index >= M^j.
VertexCode decode(Vertex index, std::uint32_t initiator_size, std::uint32_t order);

/// Checked M^j; throws CapacityExceeded past kMaxVertices.
std::uint64_t checked_power(std::uint64_t base, std::uint32_t exponent);

class Graph {
 public:
  /// Builds a materialized graph. Duplicate edges are merged; self-loops and
  /// out-of-range endpoints are rejected.
  static Graph from_edges(Vertex num_vertices, std::span<const Edge> edges);

  Vertex num_vertices() const noexcept { return num_vertices_; }
  std::uint64_t num_edges() const noexcept { return num_edges_; }

  bool materialized() const noexcept { return !implicit_; }
  const std::optional<Provenance>& provenance() const noexcept { return provenance_; }
  bool is_complete_kronecker() const noexcept {
    return provenance_ && provenance_->complete_initiator;
  }

  /// Sorted neighbors. Only valid for materialized graphs.
  std::span<const Vertex> neighbors(Vertex v) const;

  /// Sorted neighbors for either representation.
  std::vector<Vertex> neighbor_list(Vertex v) const;

  template <class Fn>
  void for_each_neighbor(Vertex v, Fn&& fn) const;

  std::uint64_t degree(Vertex v) const;
  std::uint64_t max_degree() const noexcept { return max_degree_; }
  bool adjacent(Vertex u, Vertex v) const;

  /// y = A x. Complete-initiator Kronecker powers use the factored form
  /// (J - I)^{(x) j}, applied one level at a time.
  void apply_adjacency(std::span<const Complex> x, std::span<Complex> y) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  friend Graph complete_graph(std::uint32_t);
  friend Graph kron_power(const Graph&, std::uint32_t);

  void check_vertex(Vertex v) const;
  void enumerate_implicit(Vertex v, std::vector<Vertex>& out) const;

  Vertex num_vertices_ = 0;
  std::uint64_t num_edges_ = 0;
  std::uint64_t max_degree_ = 0;
  bool implicit_ = false;
  std::optional<Provenance> provenance_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> targets_;
};

/// K_M: every distinct pair adjacent. Throws InvalidArgument for M = 0.
Graph complete_graph(std::uint32_t m);

/// A^{(x) j} for an order-1 graph A. Materialized unless the initiator is
/// complete and the neighbor lists would exceed kMaxMaterializedEntries.
Graph kron_power(const Graph& initiator, std::uint32_t order);

template <class Fn>
void Graph::for_each_neighbor(Vertex v, Fn&& fn) const {
  if (!implicit_) {
    for (Vertex u : neighbors(v)) fn(u);
    return;
  }
  std::vector<Vertex> scratch;
  enumerate_implicit(v, scratch);
  for (Vertex u : scratch) fn(u);
}

}  // namespace kronwalk

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kronwalk/graph.hpp"

namespace kronwalk {

/// Strongly regular graph parameters (N, k, lambda, mu).
struct SrgParams {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;

  /// k(k - lambda - 1) == (N - k - 1) mu
  bool feasible() const noexcept;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

enum class SrgStatus { strongly_regular, not_strongly_regular, degenerate };

struct SrgCheck {
  SrgStatus status = SrgStatus::not_strongly_regular;
  std::optional<SrgParams> params;
  std::string reason;
};

/// Brute-force checks refuse graphs larger than this.
inline constexpr std::uint64_t kMaxBruteForceVertices = 4096;

/// |N(u) ∩ N(v)| by merging sorted neighbor lists. Throws when u == v.
std::uint64_t common_neighbor_count(const Graph& g, Vertex u, Vertex v);

/// BFS distances from source; -1 marks unreachable vertices.
std::vector<std::int64_t> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

/// Largest BFS distance over all vertex pairs; nullopt when disconnected.
std::optional<std::uint32_t> diameter(const Graph& g);

/// Exhaustive pair census. Throws CapacityExceeded above kMaxBruteForceVertices
/// and InvalidArgument for N < 2.
SrgCheck srg_params(const Graph& g);

}  // namespace kronwalk

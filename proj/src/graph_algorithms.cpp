#include "kronwalk/graph_algorithms.hpp"

#include <algorithm>
#include <queue>

namespace kronwalk {

bool SrgParams::feasible() const noexcept {
  const auto sn = static_cast<std::int64_t>(n);
  const auto sk = static_cast<std::int64_t>(k);
  const auto sl = static_cast<std::int64_t>(lambda);
  const auto sm = static_cast<std::int64_t>(mu);
  return sk * (sk - sl - 1) == (sn - sk - 1) * sm;
}

std::uint64_t common_neighbor_count(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("common_neighbor_count: u and v must differ");
  const auto a = g.neighbor_list(u);
  const auto b = g.neighbor_list(v);
  std::uint64_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::vector<std::int64_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::int64_t> dist(g.num_vertices(), -1);
  std::queue<Vertex> frontier;
  dist.at(source) = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    g.for_each_neighbor(v, [&](Vertex u) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        frontier.push(u);
      }
    });
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](std::int64_t d) { return d < 0; });
}

std::optional<std::uint32_t> diameter(const Graph& g) {
  std::int64_t best = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    const auto dist = bfs_distances(g, s);
    for (std::int64_t d : dist) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return static_cast<std::uint32_t>(best);
}

SrgCheck srg_params(const Graph& g) {
  const std::uint64_t n = g.num_vertices();
  if (n < 2) throw InvalidArgument("srg_params: need at least two vertices");
  if (n > kMaxBruteForceVertices) {
    throw CapacityExceeded("srg_params: brute-force census is limited to " +
                           std::to_string(kMaxBruteForceVertices) + " vertices");
  }
  SrgCheck out;
  if (!is_connected(g)) {
    out.reason = "graph is disconnected";
    return out;
  }
  const std::uint64_t k = g.degree(0);
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) != k) {
      out.reason = "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                   ", vertex 0 has " + std::to_string(k);
      return out;
    }
  }

  std::optional<std::uint64_t> lambda;
  std::optional<std::uint64_t> mu;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::uint64_t c = common_neighbor_count(g, u, v);
      const bool adj = g.adjacent(u, v);
      auto& slot = adj ? lambda : mu;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        out.reason = std::string(adj ? "adjacent" : "nonadjacent") + " pair (" +
                     std::to_string(u) + ", " + std::to_string(v) + ") has " + std::to_string(c) +
                     " common neighbors, expected " + std::to_string(*slot);
        return out;
      }
    }
  }
  if (!mu) {
    out.status = SrgStatus::degenerate;
    out.reason = "complete graph: no nonadjacent pair, mu undefined";
    return out;
  }
  out.status = SrgStatus::strongly_regular;
  out.params = SrgParams{n, k, lambda.value_or(0), *mu};
  return out;
}

}  // namespace kronwalk

#include "kronwalk/reducer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <limits>
#include <numeric>
#include <optional>

#include "kronwalk/errors.hpp"

namespace kronwalk {

std::uint64_t Partition::num_vertices() const noexcept {
  return std::accumulate(cell_sizes.begin(), cell_sizes.end(), std::uint64_t{0});
}

std::uint64_t ReducedHamiltonian::num_vertices() const noexcept {
  return std::accumulate(cell_sizes.begin(), cell_sizes.end(), std::uint64_t{0});
}

namespace {

Partition from_colors(const std::vector<std::uint32_t>& color, std::uint32_t num_colors,
                      Vertex w) {
  std::vector<std::vector<Vertex>> cells(num_colors);
  for (Vertex v = 0; v < color.size(); ++v) cells[color[v]].push_back(v);
  std::sort(cells.begin(), cells.end(), [w](const auto& a, const auto& b) {
    const bool a_marked = a.front() == w && a.size() == 1;
    const bool b_marked = b.front() == w && b.size() == 1;
    if (a_marked != b_marked) return a_marked;
    return a.front() < b.front();
  });
  Partition p;
  p.cells = std::move(cells);
  for (const auto& c : p.cells) p.cell_sizes.push_back(c.size());
  return p;
}

}  // namespace

Partition equitable_partition(const Graph& g, Vertex w) {
  const Vertex n = g.num_vertices();
  if (w >= n) throw InvalidArgument("equitable_partition: marked vertex out of range");

  std::vector<std::uint32_t> color(n, 1);
  color[w] = 0;
  std::uint32_t num_colors = n > 1 ? 2 : 1;

  std::vector<std::uint64_t> counts;
  while (true) {
    // Signature of v: its own color followed by its neighbor count in every color.
    counts.assign(std::size_t{n} * num_colors, 0);
    for (Vertex v = 0; v < n; ++v) {
      auto* row = counts.data() + std::size_t{v} * num_colors;
      g.for_each_neighbor(v, [&](Vertex u) { ++row[color[u]]; });
    }
    std::map<std::vector<std::uint64_t>, std::uint32_t> ids;
    std::vector<std::uint32_t> next(n);
    std::vector<std::uint64_t> key(num_colors + 1);
    for (Vertex v = 0; v < n; ++v) {
      key[0] = color[v];
      const auto* row = counts.data() + std::size_t{v} * num_colors;
      std::copy(row, row + num_colors, key.begin() + 1);
      auto [it, inserted] = ids.try_emplace(key, static_cast<std::uint32_t>(ids.size()));
      next[v] = it->second;
    }
    const auto refined = static_cast<std::uint32_t>(ids.size());
    color.swap(next);
    if (refined == num_colors) break;
    num_colors = refined;
  }
  return from_colors(color, num_colors, w);
}

std::optional<std::vector<std::vector<std::uint64_t>>> cell_neighbor_counts(const Graph& g,
                                                                             const Partition& p) {
  const std::size_t k = p.num_cells();
  std::vector<std::uint32_t> cell_of(g.num_vertices(), std::numeric_limits<std::uint32_t>::max());
  for (std::size_t c = 0; c < k; ++c) {
    for (Vertex v : p.cells[c]) {
      if (v >= g.num_vertices() || cell_of[v] != std::numeric_limits<std::uint32_t>::max()) {
        throw InvalidArgument("partition cells must be disjoint and within range");
      }
      cell_of[v] = static_cast<std::uint32_t>(c);
    }
  }
  if (std::any_of(cell_of.begin(), cell_of.end(),
                  [](auto c) { return c == std::numeric_limits<std::uint32_t>::max(); })) {
    throw InvalidArgument("partition does not cover every vertex");
  }

  std::vector<std::vector<std::uint64_t>> d(k, std::vector<std::uint64_t>(k, 0));
  std::vector<std::uint64_t> row(k);
  for (std::size_t a = 0; a < k; ++a) {
    if (p.cells[a].empty()) throw InvalidArgument("partition has an empty cell");
    for (std::size_t i = 0; i < p.cells[a].size(); ++i) {
      std::fill(row.begin(), row.end(), 0);
      g.for_each_neighbor(p.cells[a][i], [&](Vertex u) { ++row[cell_of[u]]; });
      if (i == 0) {
        d[a] = row;
      } else if (row != d[a]) {
        return std::nullopt;
      }
    }
  }
  return d;
}

bool is_equitable(const Graph& g, const Partition& p) {
  return cell_neighbor_counts(g, p).has_value();
}

ReducedHamiltonian quotient_from_counts(const std::vector<std::vector<std::uint64_t>>& counts,
                                        std::vector<std::uint64_t> cell_sizes, double gamma) {
  const std::size_t k = cell_sizes.size();
  if (counts.size() != k) throw InvalidArgument("quotient: count matrix does not match cells");
  ReducedHamiltonian h;
  h.gamma = gamma;
  h.adjacency = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      h.adjacency(a, b) = static_cast<double>(counts[a][b]) *
                          std::sqrt(static_cast<double>(cell_sizes[a]) /
                                    static_cast<double>(cell_sizes[b]));
    }
  }
  // Exact in rational arithmetic (|C_a| d(a,b) = |C_b| d(b,a)); symmetrize the rounding.
  h.adjacency = 0.5 * (h.adjacency + h.adjacency.transpose()).eval();
  h.matrix = -gamma * h.adjacency;
  h.matrix(0, 0) -= 1.0;
  h.cell_sizes = std::move(cell_sizes);
  return h;
}

ReducedHamiltonian reduce_hamiltonian(const Graph& g, const Partition& p, double gamma,
                                      Vertex w) {
  if (p.cells.empty() || p.cells[0].size() != 1 || p.cells[0][0] != w) {
    throw InvalidArgument("reduce_hamiltonian: the marked vertex must be alone in cell 0");
  }
  auto counts = cell_neighbor_counts(g, p);
  if (!counts) throw InvalidArgument("reduce_hamiltonian: partition is not equitable");
  for (std::size_t a = 0; a < p.num_cells(); ++a) {
    for (std::size_t b = 0; b < p.num_cells(); ++b) {
      if (p.cell_sizes[a] * (*counts)[a][b] != p.cell_sizes[b] * (*counts)[b][a]) {
        throw InvalidArgument("reduce_hamiltonian: edge counts between cells are inconsistent");
      }
    }
  }
  return quotient_from_counts(*counts, p.cell_sizes, gamma);
}

StateVector project_uniform(const std::vector<std::uint64_t>& cell_sizes) {
  const double n = static_cast<double>(
      std::accumulate(cell_sizes.begin(), cell_sizes.end(), std::uint64_t{0}));
  std::vector<Complex> amps;
  amps.reserve(cell_sizes.size());
  for (auto s : cell_sizes) amps.emplace_back(std::sqrt(static_cast<double>(s) / n));
  return StateVector(std::move(amps), ReducedBasis{cell_sizes});
}

StateVector project_uniform(const Partition& p, std::uint64_t num_vertices) {
  if (p.num_vertices() != num_vertices) {
    throw InvalidArgument("project_uniform: partition covers " + std::to_string(p.num_vertices()) +
                          " vertices, expected " + std::to_string(num_vertices));
  }
  return project_uniform(p.cell_sizes);
}

StateVector lift(const Partition& p, const StateVector& reduced) {
  if (reduced.size() != p.num_cells()) {
    throw InvalidArgument("lift: reduced state has " + std::to_string(reduced.size()) +
                          " components for " + std::to_string(p.num_cells()) + " cells");
  }
  if (const auto* basis = std::get_if<ReducedBasis>(&reduced.basis());
      !basis || basis->cell_sizes != p.cell_sizes) {
    throw InvalidArgument("lift: state is not expressed in this partition's basis");
  }
  const std::uint64_t n = p.num_vertices();
  std::vector<Complex> amps(n);
  for (std::size_t c = 0; c < p.num_cells(); ++c) {
    const Complex a = reduced[c] / std::sqrt(static_cast<double>(p.cells[c].size()));
    for (Vertex v : p.cells[c]) amps[v] = a;
  }
  return StateVector(std::move(amps), FullBasis{n});
}

std::vector<std::size_t> kronecker_class_order(const Partition& p, std::uint32_t m,
                                               std::uint32_t order, Vertex w) {
  const auto wc = decode(w, m, order);
  auto distance = [&](Vertex v) {
    const auto vc = decode(v, m, order);
    std::uint32_t h = 0;
    for (std::uint32_t i = 0; i < order; ++i) h += vc.positions[i] != wc.positions[i];
    return h;
  };
  std::vector<std::pair<std::uint32_t, std::size_t>> keyed;
  for (std::size_t c = 0; c < p.num_cells(); ++c) {
    const std::uint32_t h = distance(p.cells[c].front());
    for (Vertex v : p.cells[c]) {
      if (distance(v) != h) {
        throw InvalidArgument("kronecker_class_order: cell mixes vertices at different "
                              "coordinate distances from the marked vertex");
      }
    }
    // marked -> 0, adjacent -> 1, otherwise 1 + distance
    const std::uint32_t rank = h == 0 ? 0 : (h == order ? 1 : 1 + h);
    keyed.emplace_back(rank, c);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> out;
  for (const auto& [rank, c] : keyed) out.push_back(c);
  return out;
}

ReducedHamiltonian permute(const ReducedHamiltonian& h, const std::vector<std::size_t>& order) {
  const auto k = static_cast<Eigen::Index>(order.size());
  if (order.size() != h.dimension()) throw InvalidArgument("permute: size mismatch");
  ReducedHamiltonian out;
  out.gamma = h.gamma;
  out.matrix.resize(k, k);
  out.adjacency.resize(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    out.cell_sizes.push_back(h.cell_sizes[order[i]]);
    for (Eigen::Index j = 0; j < k; ++j) {
      out.matrix(i, j) = h.matrix(order[i], order[j]);
      out.adjacency(i, j) = h.adjacency(order[i], order[j]);
    }
  }
  return out;
}

Partition permute(const Partition& p, const std::vector<std::size_t>& order) {
  if (order.size() != p.num_cells()) throw InvalidArgument("permute: size mismatch");
  Partition out;
  for (auto c : order) {
    out.cells.push_back(p.cells[c]);
    out.cell_sizes.push_back(p.cell_sizes[c]);
  }
  return out;
}

ReducedHamiltonian closed_form_quotient(std::uint32_t m, std::uint32_t order, double gamma) {
  if (m < 2) throw InvalidArgument("closed_form_quotient: M must be at least 2");
  const double m1 = m - 1.0;
  const double m2 = m - 2.0;
  const double r3 = std::sqrt(3.0);
  Eigen::MatrixXd a;
  std::vector<std::uint64_t> sizes;
  const std::uint64_t k1 = m - 1;
  switch (order) {
    case 1:
      sizes = {1, k1};
      a.resize(2, 2);
      a << 0, std::sqrt(m1), std::sqrt(m1), m2;
      break;
    case 2: {
      // Strongly regular: (N, k, lambda, mu) = (M^2, (M-1)^2, (M-2)^2, (M-1)(M-2)).
      const double k = m1 * m1;
      const double lambda = m2 * m2;
      const double mu = m1 * m2;
      const double rest = static_cast<double>(m) * m - 1.0 - k;
      sizes = {1, k1 * k1, std::uint64_t{m} * m - 1 - k1 * k1};
      a.resize(3, 3);
      a << 0, std::sqrt(k), 0,                                        //
          std::sqrt(k), lambda, (k - 1 - lambda) * std::sqrt(k / rest),  //
          0, mu * std::sqrt(rest / k), k - mu;
      break;
    }
    case 3:
      sizes = {1, k1 * k1 * k1, 3 * k1, 3 * k1 * k1};
      a.resize(4, 4);
      a << 0, std::sqrt(m1 * m1 * m1), 0, 0,                                         //
          std::sqrt(m1 * m1 * m1), m2 * m2 * m2, r3 * m1 * m2, std::sqrt(3 * m1) * m2 * m2,  //
          0, r3 * m1 * m2, 0, std::sqrt(m1 * m1 * m1),                               //
          0, std::sqrt(3 * m1) * m2 * m2, std::sqrt(m1 * m1 * m1), 2 * m1 * m2;
      break;
    default:
      throw InvalidArgument("closed_form_quotient: closed forms exist for j = 1, 2, 3 only");
  }
  ReducedHamiltonian h;
  h.gamma = gamma;
  h.adjacency = 0.5 * (a + a.transpose());
  h.matrix = -gamma * h.adjacency;
  h.matrix(0, 0) -= 1.0;
  h.cell_sizes = std::move(sizes);
  return h;
}

std::uint64_t Census::total() const noexcept {
  std::uint64_t t = 1;
  for (const auto& r : rows) t += r.count;
  return t;
}

Census third_order_census(std::uint32_t m) {
  if (m < 3) throw InvalidArgument("third_order_census: M must be at least 3");
  const std::uint64_t a = m - 1;
  const std::uint64_t b = m - 2;
  const std::uint64_t near = a * a * b;  // one coordinate differs from w
  const std::uint64_t far = a * b * b;   // two coordinates differ from w
  Census c;
  c.m = m;
  c.rows = {
      {"same set, same subset, different position", a, near, 3},
      {"same set, different subset, same position", a, near, 3},
      {"same set, different subset, different position", a * a, far, 4},
      {"different set, same subset, same position", a, near, 3},
      {"different set, same subset, different position", a * a, far, 4},
      {"different set, different subset, same position", a * a, far, 4},
      {"adjacent", a * a * a, b * b * b, 2},
  };
  return c;
}

}  // namespace kronwalk

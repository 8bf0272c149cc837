#include "kronwalk/graph.hpp"

#include <algorithm>
#include <string>

namespace kronwalk {

namespace {

// Appends, in increasing index order, every vertex whose digit at level i is
// drawn from choices[i]. Digits are most significant first.
void expand_product(const std::vector<std::vector<std::uint32_t>>& choices,
                    std::uint32_t radix, std::vector<Vertex>& out) {
  const std::size_t levels = choices.size();
  for (const auto& c : choices) {
    if (c.empty()) return;
  }
  std::vector<std::size_t> cursor(levels, 0);
  while (true) {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < levels; ++i) index = index * radix + choices[i][cursor[i]];
    out.push_back(static_cast<Vertex>(index));
    std::size_t level = levels;
    while (level > 0) {
      --level;
      if (++cursor[level] < choices[level].size()) break;
      cursor[level] = 0;
      if (level == 0) return;
    }
  }
}

}  // namespace

std::uint64_t checked_power(std::uint64_t base, std::uint32_t exponent) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > kMaxVertices / base) {
      throw CapacityExceeded("M^j = " + std::to_string(base) + "^" + std::to_string(exponent) +
                             " exceeds the vertex index range");
    }
    result *= base;
  }
  return result;
}

Vertex encode(const VertexCode& code, std::uint32_t initiator_size) {
  if (initiator_size == 0) throw InvalidArgument("encode: initiator size must be positive");
  checked_power(initiator_size, static_cast<std::uint32_t>(code.positions.size()));
  std::uint64_t index = 0;
  for (std::uint32_t p : code.positions) {
    if (p >= initiator_size) {
      throw InvalidArgument("encode: coordinate " + std::to_string(p) + " outside [0, " +
                            std::to_string(initiator_size) + ")");
    }
    index = index * initiator_size + p;
  }
  return static_cast<Vertex>(index);
}

VertexCode decode(Vertex index, std::uint32_t initiator_size, std::uint32_t order) {
  if (initiator_size == 0) throw InvalidArgument("decode: initiator size must be positive");
  const std::uint64_t n = checked_power(initiator_size, order);
  if (index >= n) {
    throw InvalidArgument("decode: index " + std::to_string(index) + " outside [0, " +
                          std::to_string(n) + ")");
  }
  VertexCode code;
  code.positions.assign(order, 0);
  std::uint64_t rest = index;
  for (std::uint32_t i = order; i-- > 0;) {
    code.positions[i] = static_cast<std::uint32_t>(rest % initiator_size);
    rest /= initiator_size;
  }
  return code;
}

Graph Graph::from_edges(Vertex num_vertices, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> lists(num_vertices);
  for (const auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices) {
      throw InvalidArgument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                            ") references a vertex outside [0, " +
                            std::to_string(num_vertices) + ")");
    }
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  Graph g;
  g.num_vertices_ = num_vertices;
  g.offsets_.assign(std::size_t{num_vertices} + 1, 0);
  for (Vertex v = 0; v < num_vertices; ++v) {
    auto& l = lists[v];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    g.offsets_[v + 1] = g.offsets_[v] + l.size();
    g.max_degree_ = std::max<std::uint64_t>(g.max_degree_, l.size());
  }
  g.targets_.reserve(g.offsets_.back());
  for (auto& l : lists) g.targets_.insert(g.targets_.end(), l.begin(), l.end());
  g.num_edges_ = g.offsets_.back() / 2;
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= num_vertices_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " outside [0, " +
                          std::to_string(num_vertices_) + ")");
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  if (implicit_) {
    throw InvalidArgument("neighbors(): graph is implicit; use neighbor_list()");
  }
  return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
}

void Graph::enumerate_implicit(Vertex v, std::vector<Vertex>& out) const {
  const auto m = provenance_->initiator_size;
  const auto code = decode(v, m, provenance_->order);
  std::vector<std::vector<std::uint32_t>> choices(code.positions.size());
  for (std::size_t i = 0; i < choices.size(); ++i) {
    choices[i].reserve(m - 1);
    for (std::uint32_t d = 0; d < m; ++d) {
      if (d != code.positions[i]) choices[i].push_back(d);
    }
  }
  out.clear();
  expand_product(choices, m, out);
}

std::vector<Vertex> Graph::neighbor_list(Vertex v) const {
  check_vertex(v);
  if (!implicit_) {
    auto n = neighbors(v);
    return {n.begin(), n.end()};
  }
  std::vector<Vertex> out;
  enumerate_implicit(v, out);
  return out;
}

std::uint64_t Graph::degree(Vertex v) const {
  check_vertex(v);
  if (implicit_) return max_degree_;
  return offsets_[v + 1] - offsets_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (is_complete_kronecker()) {
    // Coordinate law: adjacent iff every level differs.
    const std::uint32_t m = provenance_->initiator_size;
    if (u == v) return false;
    for (std::uint32_t level = 0; level < provenance_->order; ++level) {
      if (u % m == v % m) return false;
      u /= m;
      v /= m;
    }
    return true;
  }
  auto n = neighbors(u);
  return std::binary_search(n.begin(), n.end(), v);
}

void Graph::apply_adjacency(std::span<const Complex> x, std::span<Complex> y) const {
  if (x.size() != num_vertices_ || y.size() != num_vertices_) {
    throw InvalidArgument("apply_adjacency: vector length does not match vertex count");
  }
  if (is_complete_kronecker()) {
    const std::size_t m = provenance_->initiator_size;
    std::copy(x.begin(), x.end(), y.begin());
    std::vector<Complex> sum;
    std::size_t stride = num_vertices_;
    for (std::uint32_t level = 0; level < provenance_->order; ++level) {
      stride /= m;
      const std::size_t block = stride * m;
      if (stride == 1) {
        for (std::size_t base = 0; base < num_vertices_; base += m) {
          Complex total = 0.0;
          for (std::size_t a = 0; a < m; ++a) total += y[base + a];
          for (std::size_t a = 0; a < m; ++a) y[base + a] = total - y[base + a];
        }
        continue;
      }
      // Rows of length `stride` inside each block: every row becomes the
      // sum of the others.
      sum.resize(stride);
      for (std::size_t base = 0; base < num_vertices_; base += block) {
        Complex* rows = y.data() + base;
        std::copy(rows, rows + stride, sum.begin());
        for (std::size_t a = 1; a < m; ++a) {
          const Complex* row = rows + a * stride;
          for (std::size_t r = 0; r < stride; ++r) sum[r] += row[r];
        }
        for (std::size_t a = 0; a < m; ++a) {
          Complex* row = rows + a * stride;
          for (std::size_t r = 0; r < stride; ++r) row[r] = sum[r] - row[r];
        }
      }
    }
    return;
  }
  for (Vertex v = 0; v < num_vertices_; ++v) {
    Complex acc = 0.0;
    for (std::uint64_t e = offsets_[v]; e < offsets_[v + 1]; ++e) acc += x[targets_[e]];
    y[v] = acc;
  }
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.num_vertices_ != b.num_vertices_ || a.num_edges_ != b.num_edges_) return false;
  if (a.implicit_ || b.implicit_) {
    return a.implicit_ == b.implicit_ && a.provenance_ == b.provenance_;
  }
  return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
}

Graph complete_graph(std::uint32_t m) {
  if (m == 0) throw InvalidArgument("complete_graph: M must be at least 1");
  Graph g;
  g.num_vertices_ = m;
  g.provenance_ = Provenance{m, 1, true};
  g.max_degree_ = m - 1;
  g.num_edges_ = std::uint64_t{m} * (m - 1) / 2;
  if (std::uint64_t{m} * (m - 1) > kMaxMaterializedEntries) {
    g.implicit_ = true;
    return g;
  }
  g.offsets_.resize(std::size_t{m} + 1);
  g.targets_.reserve(std::size_t{m} * (m - 1));
  for (Vertex v = 0; v < m; ++v) {
    for (Vertex u = 0; u < m; ++u) {
      if (u != v) g.targets_.push_back(u);
    }
    g.offsets_[v + 1] = g.targets_.size();
  }
  return g;
}

Graph kron_power(const Graph& initiator, std::uint32_t order) {
  if (order == 0) throw InvalidArgument("kron_power: order j must be at least 1");
  if (initiator.provenance() && initiator.provenance()->order != 1) {
    throw InvalidArgument("kron_power: initiator must be an order-1 graph");
  }
  const std::uint32_t m = initiator.num_vertices();
  const std::uint64_t n = checked_power(m, order);
  const bool complete = initiator.num_edges() == std::uint64_t{m} * (m - 1) / 2;

  std::uint64_t degree_sum = 2 * initiator.num_edges();
  // Saturates; N <= 2^32 keeps any exact count below 2^64 anyway.
  std::uint64_t entries = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    if (__builtin_mul_overflow(entries, degree_sum, &entries)) {
      entries = std::numeric_limits<std::uint64_t>::max();
      break;
    }
  }

  Graph g;
  g.num_vertices_ = static_cast<Vertex>(n);
  g.provenance_ = Provenance{m, order, complete};
  g.num_edges_ = entries / 2;

  if (complete) {
    g.max_degree_ = m == 0 ? 0 : checked_power(m - 1, order);
    if (entries > kMaxMaterializedEntries) {
      g.implicit_ = true;
      return g;
    }
  } else if (entries > kMaxMaterializedEntries) {
    throw CapacityExceeded("kron_power: " + std::to_string(entries) +
                           " neighbor entries exceed the materialization cap");
  }

  std::vector<std::vector<Vertex>> initiator_lists(m);
  for (Vertex v = 0; v < m; ++v) initiator_lists[v] = initiator.neighbor_list(v);

  g.offsets_.assign(n + 1, 0);
  g.targets_.reserve(static_cast<std::size_t>(entries));
  std::vector<std::vector<std::uint32_t>> choices(order);
  for (std::uint64_t v = 0; v < n; ++v) {
    const auto code = decode(static_cast<Vertex>(v), m, order);
    for (std::uint32_t i = 0; i < order; ++i) {
      const auto& l = initiator_lists[code.positions[i]];
      choices[i].assign(l.begin(), l.end());
    }
    expand_product(choices, m, g.targets_);
    g.offsets_[v + 1] = g.targets_.size();
    g.max_degree_ = std::max(g.max_degree_, g.offsets_[v + 1] - g.offsets_[v]);
  }
  return g;
}

}  // namespace kronwalk

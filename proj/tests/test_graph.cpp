#include <sstream>

#include "doctest.h"
#include "kronwalk/graph.hpp"
#include "kronwalk/graph_algorithms.hpp"
#include "kronwalk/graph_io.hpp"
#include "oracles.hpp"

using namespace kronwalk;

namespace {

// K_4 (x) K_4 written out by hand, rows of vertices 1..16.
const char* const kSecondPowerRows[16] = {
    "0000011101110111", "0000101110111011", "0000110111011101", "0000111011101110",
    "0111000001110111", "1011000010111011", "1101000011011101", "1110000011101110",
    "0111011100000111", "1011101100001011", "1101110100001101", "1110111000001110",
    "0111011101110000", "1011101110110000", "1101110111010000", "1110111011100000",
};

Eigen::MatrixXd dense_adjacency(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Vertex u : g.neighbor_list(v)) a(v, u) = 1.0;
  }
  return a;
}

}  // namespace

TEST_CASE("complete graph K_4 has zero diagonal and ones elsewhere") {
  const Graph g = complete_graph(4);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 6);
  CHECK(dense_adjacency(g) == oracle::complete_adjacency(4));
  REQUIRE(g.provenance());
  CHECK(g.provenance()->initiator_size == 4);
  CHECK(g.provenance()->order == 1);
}

TEST_CASE("small complete graphs") {
  CHECK(complete_graph(1).num_edges() == 0);
  const Graph k2 = complete_graph(2);
  CHECK(k2.num_edges() == 1);
  CHECK(k2.adjacent(0, 1));
  CHECK_THROWS_AS(complete_graph(0), InvalidArgument);
}

TEST_CASE("second Kronecker power of K_4 matches the hand-written 16x16 matrix") {
  const Graph g = kron_power(complete_graph(4), 2);
  REQUIRE(g.num_vertices() == 16);
  const Eigen::MatrixXd a = dense_adjacency(g);
  for (int r = 0; r < 16; ++r) {
    for (int c = 0; c < 16; ++c) {
      CHECK_MESSAGE(a(r, c) == (kSecondPowerRows[r][c] == '1' ? 1.0 : 0.0), "row ", r, " col ", c);
    }
  }
  for (Vertex v = 0; v < 16; ++v) CHECK(g.degree(v) == 9);
}

TEST_CASE("first power is the initiator itself") {
  for (std::uint32_t m : {2u, 3u, 5u}) CHECK(kron_power(complete_graph(m), 1) == complete_graph(m));
}

TEST_CASE("Kronecker powers match the dense Kronecker product") {
  for (auto [m, j] : {std::pair{2, 3}, {3, 2}, {3, 3}, {4, 3}, {5, 2}}) {
    CAPTURE(m);
    CAPTURE(j);
    const Graph g = kron_power(complete_graph(m), j);
    CHECK(dense_adjacency(g) == oracle::kron_power(m, j));
  }
}

TEST_CASE("degrees are (M-1)^j wherever M^j <= 4096") {
  for (std::uint32_t m = 2; m <= 8; ++m) {
    for (std::uint32_t j = 1; j <= 4; ++j) {
      if (checked_power(m, j) > 4096) continue;
      const Graph g = kron_power(complete_graph(m), j);
      const std::uint64_t k = checked_power(m - 1, j);
      bool ok = true;
      for (Vertex v = 0; v < g.num_vertices(); ++v) ok = ok && g.degree(v) == k;
      CHECK_MESSAGE(ok, "M=", m, " j=", j);
      CHECK(g.max_degree() == k);
    }
  }
}

TEST_CASE("adjacency follows the coordinate law") {
  for (auto [m, j] : {std::pair{3u, 3u}, {4u, 2u}, {2u, 4u}, {5u, 3u}}) {
    const Graph g = kron_power(complete_graph(m), j);
    bool ok = true;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      const auto cu = decode(u, m, j);
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        const auto cv = decode(v, m, j);
        bool all_differ = true;
        for (std::uint32_t i = 0; i < j; ++i) all_differ = all_differ && cu.positions[i] != cv.positions[i];
        ok = ok && g.adjacent(u, v) == all_differ;
      }
    }
    CHECK_MESSAGE(ok, "M=", m, " j=", j);
  }
}

TEST_CASE("implicit graphs agree with materialized ones") {
  const Graph small = kron_power(complete_graph(6), 4);
  REQUIRE(small.materialized());
  const Graph big = kron_power(complete_graph(64), 4);
  CHECK_FALSE(big.materialized());
  CHECK(big.num_vertices() == 16777216u);
  CHECK(big.degree(12345) == 63ull * 63 * 63 * 63);
  const auto nbrs = big.neighbor_list(0);
  CHECK(nbrs.size() == 63ull * 63 * 63 * 63);
  CHECK(nbrs.front() == encode({{1, 1, 1, 1}}, 64));
  CHECK(big.adjacent(0, encode({{1, 2, 3, 4}}, 64)));
  CHECK_FALSE(big.adjacent(0, encode({{1, 0, 3, 4}}, 64)));
}

TEST_CASE("factored adjacency product matches CSR") {
  const Graph g = kron_power(complete_graph(5), 3);
  std::vector<Complex> x(g.num_vertices());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = Complex(std::sin(1.0 + i), std::cos(0.3 * i));
  std::vector<Complex> y(x.size());
  g.apply_adjacency(x, y);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Complex sum = 0.0;
    for (Vertex u : g.neighbors(v)) sum += x[u];
    CHECK(std::abs(sum - y[v]) < 1e-12);
  }
}

TEST_CASE("vertex codec") {
  CHECK(encode({{0, 0, 0}}, 4) == 0);
  CHECK(encode({{3, 3, 3}}, 4) == 63);
  CHECK(encode({{1, 2}}, 4) == 6);
  CHECK(decode(6, 4, 2) == VertexCode{{1, 2}});
  for (Vertex v = 0; v < 125; ++v) CHECK(encode(decode(v, 5, 3), 5) == v);
  CHECK_THROWS_AS(encode({{4, 0}}, 4), InvalidArgument);
  CHECK_THROWS_AS(decode(16, 4, 2), InvalidArgument);
  CHECK_THROWS_AS(checked_power(2, 40), CapacityExceeded);
  CHECK_THROWS_AS(kron_power(complete_graph(2), 40), CapacityExceeded);
}

TEST_CASE("common neighbors") {
  const Graph g3 = kron_power(complete_graph(4), 3);
  // same set, same subset, different position
  CHECK(common_neighbor_count(g3, 0, encode({{0, 0, 1}}, 4)) == 18);
  CHECK(common_neighbor_count(complete_graph(2), 0, 1) == 0);
  // vertices 1 and 6 of K_4 (x) K_4, 0-based 0 and 5
  const Graph g2 = kron_power(complete_graph(4), 2);
  REQUIRE(g2.adjacent(0, 5));
  CHECK(common_neighbor_count(g2, 0, 5) == 4);
  CHECK_THROWS_AS(common_neighbor_count(g2, 3, 3), InvalidArgument);
}

TEST_CASE("diameter") {
  for (std::uint32_t m = 2; m <= 6; ++m) CHECK(diameter(complete_graph(m)) == 1u);
  for (std::uint32_t m = 3; m <= 6; ++m) {
    for (std::uint32_t j = 2; j <= 4; ++j) {
      if (checked_power(m, j) > 4096) continue;
      CHECK_MESSAGE(diameter(kron_power(complete_graph(m), j)) == 2u, "M=", m, " j=", j);
    }
  }
  const Graph matching = kron_power(complete_graph(2), 2);
  CHECK(matching.num_edges() == 2);
  CHECK_FALSE(diameter(matching).has_value());
  CHECK_FALSE(is_connected(matching));
  const auto d = bfs_distances(matching, 0);
  CHECK(d[3] == 1);
  CHECK(d[1] == -1);
}

TEST_CASE("strongly regular parameters by brute force") {
  const auto k4 = srg_params(kron_power(complete_graph(4), 2));
  REQUIRE(k4.status == SrgStatus::strongly_regular);
  CHECK(*k4.params == SrgParams{16, 9, 4, 6});
  const auto k5 = srg_params(kron_power(complete_graph(5), 2));
  CHECK(*k5.params == SrgParams{25, 16, 9, 12});
  const auto k3 = srg_params(kron_power(complete_graph(3), 2));
  CHECK(*k3.params == SrgParams{9, 4, 1, 2});
  for (std::uint32_t m = 3; m <= 8; ++m) {
    const auto c = srg_params(kron_power(complete_graph(m), 2));
    REQUIRE(c.params);
    CHECK(c.params->feasible());
  }
  CHECK(srg_params(complete_graph(5)).status == SrgStatus::degenerate);
  const auto disconnected = srg_params(kron_power(complete_graph(2), 2));
  CHECK(disconnected.status == SrgStatus::not_strongly_regular);
  CHECK_FALSE(disconnected.reason.empty());
  // K_3 (x) K_3 (x) K_3 is regular but not strongly regular.
  CHECK(srg_params(kron_power(complete_graph(3), 3)).status == SrgStatus::not_strongly_regular);
  CHECK_FALSE((SrgParams{16, 9, 4, 5}.feasible()));
}

TEST_CASE("edge list round trip") {
  const Graph g = kron_power(complete_graph(3), 2);
  std::stringstream buf;
  write_edge_list(buf, g);
  const std::string text = buf.str();
  CHECK(text.rfind("# vertices 9\n", 0) == 0);
  const Graph back = read_edge_list(buf);
  CHECK(back.num_vertices() == 9);
  CHECK(back.num_edges() == g.num_edges());
  for (Vertex v = 0; v < 9; ++v) {
    CHECK(back.neighbor_list(v) == g.neighbor_list(v));
  }
  std::stringstream again;
  write_edge_list(again, back);
  CHECK(again.str() == text);

  std::stringstream isolated("# vertices 5\n0 1\n");
  CHECK(read_edge_list(isolated).num_vertices() == 5);
  std::stringstream bad("0 1\n1 x\n");
  CHECK_THROWS_AS(read_edge_list(bad), InvalidArgument);
  std::stringstream loop("2 2\n");
  CHECK_THROWS_AS(read_edge_list(loop), InvalidArgument);
}

#include "kronwalk/graph_io.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace kronwalk {

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# vertices " << g.num_vertices() << '\n';
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v : g.neighbor_list(u)) {
      if (u < v) out << u << ' ' << v << '\n';
    }
  }
}

Graph read_edge_list(std::istream& in) {
  std::optional<std::uint64_t> declared;
  std::vector<Edge> edges;
  std::uint64_t largest = 0;
  bool any = false;
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw InvalidArgument("edge list line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream header(line.substr(first + 1));
      std::string key;
      std::uint64_t value = 0;
      if (header >> key && key == "vertices") {
        if (!(header >> value) || value > kMaxVertices) fail("bad vertex count");
        declared = value;
      }
      continue;
    }
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) fail("expected two vertex indices");
    if (u < 0 || v < 0 || static_cast<std::uint64_t>(u) >= kMaxVertices ||
        static_cast<std::uint64_t>(v) >= kMaxVertices) {
      fail("vertex index out of range");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    largest = std::max<std::uint64_t>(largest, std::max(u, v));
    any = true;
  }
  const std::uint64_t n = declared ? *declared : (any ? largest + 1 : 0);
  if (any && largest >= n) {
    throw InvalidArgument("edge list: endpoint " + std::to_string(largest) +
                          " exceeds declared vertex count " + std::to_string(n));
  }
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

}  // namespace kronwalk

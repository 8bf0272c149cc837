#include "kronwalk/report_io.hpp"

#include <fmt/format.h>

#include <ostream>

namespace kronwalk {

void write_series_csv(std::ostream& out, const SimulationResult& result) {
  out << "t,probability\n";
  for (std::size_t i = 0; i < result.times.size(); ++i) {
    out << fmt::format("{:.15g},{:.15g}\n", result.times[i], result.probabilities[i]);
  }
}

nlohmann::json summary_json(const SimulationResult& result, std::uint32_t m, std::uint32_t order,
                            std::string_view gamma_formula, std::string_view mode) {
  return {
      {"M", m},
      {"j", order},
      {"N", result.num_vertices},
      {"gamma", result.gamma},
      {"gamma_formula", gamma_formula},
      {"mode", mode},
      {"peak_time", result.peak_time},
      {"peak_probability", result.peak_probability},
      {"peak_interior", result.peak_interior},
      {"predicted_time", predicted_runtime(result.num_vertices)},
  };
}

nlohmann::json partition_json(const Partition& p) {
  return {{"cells", p.cells}, {"sizes", p.cell_sizes}};
}

nlohmann::json reduced_json(const ReducedHamiltonian& h) {
  auto rows = [](const Eigen::MatrixXd& m) {
    nlohmann::json out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      out.push_back(std::move(row));
    }
    return out;
  };
  return {{"gamma", h.gamma},
          {"sizes", h.cell_sizes},
          {"adjacency", rows(h.adjacency)},
          {"hamiltonian", rows(h.matrix)}};
}

void write_census_csv(std::ostream& out, const Census& census) {
  out << "class,count,mutual_neighbors\n";
  for (const auto& row : census.rows) {
    out << '"' << row.description << "\"," << row.count << ',' << row.mutual_neighbors << '\n';
  }
}

nlohmann::json perturbation_json(const PerturbationReport& r) {
  return {{"M", r.m},
          {"gamma", r.gamma},
          {"E0", r.e0},
          {"E1", r.e1},
          {"gap", r.gap},
          {"runtime_estimate", r.runtime_estimate},
          {"alpha_ground", {r.alpha_ground[0], r.alpha_ground[1]}},
          {"alpha_excited", {r.alpha_excited[0], r.alpha_excited[1]}},
          {"basis_note", r.basis_note}};
}

}  // namespace kronwalk

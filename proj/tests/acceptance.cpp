// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <fmt/format.h>

#include <Eigen/Eigenvalues>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "kronwalk/analysis.hpp"
#include "kronwalk/cli.hpp"
#include "kronwalk/walk.hpp"

using namespace kronwalk;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::shared_ptr<const Graph> kgraph(std::uint32_t m, std::uint32_t j) {
  return std::make_shared<const Graph>(kron_power(complete_graph(m), j));
}

bool within(double value, double target, double rel) { return std::abs(value - target) <= rel * target; }

Outcome peak_criterion(const Peak& p, double target, double rel, double min_prob) {
  return {p.interior && within(p.time, target, rel) && p.probability >= min_prob,
          fmt::format("peak t = {:.4f} (target {} +/- {}%), p = {:.6f} (>= {})", p.time, target,
                      rel * 100, p.probability, min_prob)};
}

Outcome suite_criterion(const char* suite) {
  const auto checks = cli::run_verification(suite);
  std::size_t ok = 0;
  std::string failures;
  for (const auto& c : checks) {
    if (c.passed) {
      ++ok;
    } else {
      failures += "; " + c.name + ": " + c.detail;
    }
  }
  return {ok == checks.size() && !checks.empty(),
          fmt::format("{} of {} checks passed{}", ok, checks.size(), failures)};
}

Outcome complete_peak() {
  const auto problem = make_search_problem(kgraph(256, 1), 0, 1.0 / 256);
  return peak_criterion(find_peak(problem, predicted_runtime(256)), 25.13, 0.005, 0.999);
}

Outcome second_power_peak() {
  const auto r = closed_form_quotient(256, 2, critical_gamma(256, 2).value);
  return peak_criterion(find_peak(r, predicted_runtime(65536)), 402.12, 0.02, 0.98);
}

Outcome third_power_peak() {
  const auto r = closed_form_quotient(256, 3, 1.0 / std::pow(255.0, 3));
  return peak_criterion(find_peak(r, predicted_runtime(16777216)), 6433.98, 0.02, 0.98);
}

Outcome sixth_power_peak() {
  const auto start = std::chrono::steady_clock::now();
  const auto problem = make_search_problem(kgraph(4, 6), 0, 1.0 / 729.0);
  const auto series = probability_series(problem, 120.0, 512, PropagatorKind::iterative);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto out = peak_criterion({series.peak_time, series.peak_probability, series.peak_interior}, 100.53,
                            0.05, 0.9);
  out.passed = out.passed && seconds < 60.0;
  out.detail += fmt::format(", {:.1f} s (< 60 s)", seconds);
  return out;
}

Outcome quotient_exactness() {
  const std::pair<std::uint32_t, std::uint32_t> cases[] = {{4, 2}, {4, 3}, {5, 3}};
  bool ok = true;
  std::string detail;
  for (auto [m, j] : cases) {
    const auto g = kgraph(m, j);
    const double gamma = cli::default_gamma(m, j).first;
    const auto p = equitable_partition(*g, 0);
    const auto reduced = reduce_hamiltonian(*g, p, gamma, 0);
    const double horizon = 2.0 * std::numbers::pi * std::sqrt(double(g->num_vertices()));
    const auto full = probability_series(make_search_problem(g, 0, gamma), horizon, 200);
    const auto red = probability_series(reduced, horizon, 200);
    double worst = 0.0;
    for (std::size_t i = 0; i < full.probabilities.size(); ++i) {
      worst = std::max(worst, std::abs(full.probabilities[i] - red.probabilities[i]));
    }
    ok = ok && worst <= 1e-8;
    detail += fmt::format("{}(M={}, j={}) max |dp| = {:.2e}", detail.empty() ? "" : "; ", m, j, worst);
  }
  return {ok, detail + " (<= 1e-8)"};
}

Outcome gap_crosscheck() {
  bool ok = true;
  std::string detail;
  for (std::uint32_t m : {16u, 64u, 256u, 1024u}) {
    const double gamma = 1.0 / (double(m) * m * (m - 3.0));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(closed_form_quotient(m, 3, gamma).matrix);
    const double numeric = es.eigenvalues()(1) - es.eigenvalues()(0);
    const double closed = 2.0 / (std::sqrt(double(m)) * (m - 3.0));
    const double rel = std::abs(numeric - closed) / closed;
    ok = ok && rel <= 20.0 / m;
    detail += fmt::format("{}M={}: rel {:.3e} <= {:.3e}", detail.empty() ? "" : "; ", m, rel, 20.0 / m);
  }
  return {ok, detail};
}

Outcome taylor_gap() {
  const double scaled = gamma_taylor_gap(256).scaled;
  return {std::abs(scaled + 3.0) <= 0.1, fmt::format("M^5 * difference = {:.6f} (|. + 3| <= 0.1)", scaled)};
}

Outcome property_suites() {
  double worst_norm = 0.0;
  double worst_energy = 0.0;
  double worst_symmetry = 0.0;
  bool in_range = true;

  const std::pair<std::uint32_t, std::uint32_t> sizes[] = {{16, 1}, {4, 2}, {3, 4}, {5, 3}, {4, 5}};
  for (auto [m, j] : sizes) {
    const auto problem = make_search_problem(kgraph(m, j), 1, 1.0 / std::pow(m - 1.0, j));
    const auto s = uniform_state(problem);
    const double e0 = energy(problem, s);
    for (auto kind : {PropagatorKind::exact, PropagatorKind::iterative}) {
      for (double t : {0.3, 7.0, 2.0 * predicted_runtime(problem.num_vertices())}) {
        const auto psi = evolve(problem, s, t, kind);
        worst_norm = std::max(worst_norm, std::abs(psi.norm() - 1.0));
        worst_energy = std::max(worst_energy, std::abs(energy(problem, psi) - e0) / std::abs(e0));
      }
      const auto series = probability_series(problem, 2.0 * predicted_runtime(problem.num_vertices()), 64, kind);
      for (double p : series.probabilities) in_range = in_range && p >= 0.0 && p <= 1.0;
    }
  }
  for (std::uint32_t m : {8u, 256u}) {
    const auto r = closed_form_quotient(m, 3, practical_gamma(m, 3).value);
    const auto s = uniform_state(r);
    const double e0 = energy(r, s);
    for (auto kind : {PropagatorKind::exact, PropagatorKind::iterative}) {
      const auto psi = evolve(r, s, predicted_runtime(checked_power(m, 3)), kind);
      worst_norm = std::max(worst_norm, std::abs(psi.norm() - 1.0));
      worst_energy = std::max(worst_energy, std::abs(energy(r, psi) - e0) / std::abs(e0));
    }
  }

  const auto g = kgraph(4, 2);
  const double gamma = critical_gamma(4, 2).value;
  const auto base = probability_series(make_search_problem(g, 0, gamma), 25.0, 128);
  for (Vertex w : {Vertex{6}, Vertex{9}, Vertex{15}}) {
    const auto other = probability_series(make_search_problem(g, w, gamma), 25.0, 128);
    for (std::size_t i = 0; i < base.probabilities.size(); ++i) {
      worst_symmetry = std::max(worst_symmetry, std::abs(base.probabilities[i] - other.probabilities[i]));
      in_range = in_range && other.probabilities[i] >= 0.0 && other.probabilities[i] <= 1.0;
    }
  }

  const bool ok = worst_norm <= 1e-9 && worst_energy <= 1e-8 && worst_symmetry <= 1e-10 && in_range;
  return {ok, fmt::format("norm drift {:.2e} (<= 1e-9), energy drift {:.2e} (<= 1e-8 rel), "
                          "marked-vertex spread {:.2e} (<= 1e-10), probabilities in [0,1]: {}",
                          worst_norm, worst_energy, worst_symmetry, in_range ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Complete graph K_256, full space", complete_peak},
      {"Second power of K_256, 3D quotient", second_power_peak},
      {"Third power of K_256, 4D quotient", third_power_peak},
      {"K_4^6, full space, iterative propagator", sixth_power_peak},
      {"Quotient exactness vs full space", quotient_exactness},
      {"SRG parameters by brute force, M in [3,8]", [] { return suite_criterion("srg"); }},
      {"Third-order census by brute force, M in [3,5]", [] { return suite_criterion("census"); }},
      {"Diameter 2 for M in [3,6], j in [2,4]", [] { return suite_criterion("diameter"); }},
      {"Perturbative gap vs 4x4 diagonalization", gap_crosscheck},
      {"Taylor gap of the third-order rates", taylor_gap},
      {"Property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failed;
    fmt::print("{} {:>2}. {}: {}\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail);
    std::fflush(stdout);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

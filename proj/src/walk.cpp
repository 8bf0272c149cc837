#include "kronwalk/walk.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "kronwalk/errors.hpp"
#include "kronwalk/propagator.hpp"

namespace kronwalk {

namespace {

constexpr double kProbabilitySlack = 1e-12;

// What the generic machinery needs to know about a Hamiltonian.
struct Dynamics {
  std::size_t dimension = 0;
  std::size_t target = 0;
  Basis basis;
  HamiltonianAction apply;
  double spectral_bound = 1.0;
  std::function<Eigen::MatrixXd()> dense;
};

void check_full_capacity(std::uint64_t n) {
  if (n > kMaxFullDimension) {
    throw CapacityExceeded("full-space simulation of " + std::to_string(n) +
                           " vertices exceeds the limit of " + std::to_string(kMaxFullDimension) +
                           "; use the reduced mode");
  }
}

Dynamics dynamics_of(const SearchProblem& problem) {
  check_full_capacity(problem.num_vertices());
  Dynamics d;
  d.dimension = problem.num_vertices();
  d.target = problem.marked;
  d.basis = FullBasis{problem.num_vertices()};
  d.apply = [problem](std::span<const Complex> x, std::span<Complex> y) {
    apply_hamiltonian(problem, x, y);
  };
  d.spectral_bound = problem.gamma * static_cast<double>(problem.graph->max_degree()) + 1.0;
  d.dense = [problem] { return dense_hamiltonian(problem); };
  return d;
}

Dynamics dynamics_of(const ReducedHamiltonian& reduced) {
  if (reduced.dimension() == 0 || reduced.matrix.rows() != static_cast<Eigen::Index>(reduced.dimension())) {
    throw InvalidArgument("reduced Hamiltonian is empty or inconsistent with its cell sizes");
  }
  Dynamics d;
  d.dimension = reduced.dimension();
  d.target = 0;
  d.basis = ReducedBasis{reduced.cell_sizes};
  Eigen::MatrixXd m = reduced.matrix;
  d.apply = [m](std::span<const Complex> x, std::span<Complex> y) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Complex acc = 0.0;
      for (Eigen::Index j = 0; j < m.cols(); ++j) acc += m(i, j) * x[j];
      y[i] = acc;
    }
  };
  d.spectral_bound = std::max(m.cwiseAbs().rowwise().sum().maxCoeff(), 1e-300);
  d.dense = [m] { return m; };
  return d;
}

bool use_exact(const Dynamics& d, PropagatorKind kind) {
  switch (kind) {
    case PropagatorKind::automatic:
      return d.dimension <= kMaxExactDimension;
    case PropagatorKind::exact:
      if (d.dimension > kMaxExactDimension) {
        throw CapacityExceeded("exact propagation is limited to dimension " +
                               std::to_string(kMaxExactDimension));
      }
      return true;
    case PropagatorKind::iterative:
      return false;
  }
  return false;
}

void check_basis(const Dynamics& d, const StateVector& psi) {
  if (psi.basis() != d.basis) {
    throw InvalidArgument("state basis is incompatible with the Hamiltonian");
  }
}

void check_norm(std::span<const Complex> psi) {
  const double n = norm_of(psi);
  if (!(std::abs(n - 1.0) <= kNormTolerance)) {
    throw NumericalFailure("norm drifted to " + std::to_string(n) + " during evolution");
  }
}

double checked_probability(double p) {
  if (!(p >= -kProbabilitySlack && p <= 1.0 + kProbabilitySlack)) {
    throw NumericalFailure("success probability " + std::to_string(p) + " outside [0, 1]");
  }
  return std::clamp(p, 0.0, 1.0);
}

// psi(t) = exp(-iHt) psi0 for arbitrary query times. The iterative backend
// steps forward from the latest state, or from an anchor set by anchor().
class Trajectory {
 public:
  Trajectory(const Dynamics& d, std::vector<Complex> psi0, PropagatorKind kind, double horizon)
      : target_(d.target), psi0_(std::move(psi0)) {
    if (use_exact(d, kind)) {
      spectral_ = std::make_unique<SpectralPropagator>(d.dense());
      coefficients_ = spectral_->to_eigenbasis(psi0_);
    } else {
      rk4_ = std::make_unique<Rk4Propagator>(d.apply, d.dimension, d.spectral_bound, horizon);
      current_ = anchored_ = psi0_;
    }
  }

  double probability(double t) {
    if (spectral_) return checked_probability(std::norm(spectral_->amplitude(target_, coefficients_, t)));
    const auto& psi = rk4_state(t);
    return checked_probability(std::norm(psi[target_]));
  }

  std::vector<Complex> state(double t) {
    if (spectral_) {
      auto psi = psi0_;
      spectral_->advance(psi, t);
      check_norm(psi);
      return psi;
    }
    return rk4_state(t);
  }

  void anchor(double t) {
    if (spectral_) return;
    anchored_ = rk4_state(t);
    t_anchor_ = t;
  }

 private:
  const std::vector<Complex>& rk4_state(double t) {
    if (t < t_current_) {
      if (t < t_anchor_) {
        anchored_ = psi0_;
        t_anchor_ = 0.0;
      }
      current_ = anchored_;
      t_current_ = t_anchor_;
    }
    rk4_->advance(current_, t - t_current_);
    t_current_ = t;
    check_norm(current_);
    return current_;
  }

  std::size_t target_;
  std::vector<Complex> psi0_;
  std::unique_ptr<SpectralPropagator> spectral_;
  std::vector<Complex> coefficients_;
  std::unique_ptr<Rk4Propagator> rk4_;
  std::vector<Complex> current_;
  std::vector<Complex> anchored_;
  double t_current_ = 0.0;
  double t_anchor_ = 0.0;
};

std::vector<double> uniform_grid(double t_max, int samples) {
  std::vector<double> t(samples);
  for (int i = 0; i < samples; ++i) t[i] = t_max * i / (samples - 1);
  return t;
}

std::vector<double> sample(Trajectory& traj, const std::vector<double>& times) {
  std::vector<double> p;
  p.reserve(times.size());
  for (double t : times) p.push_back(traj.probability(t));
  return p;
}

Peak locate_first_peak(Trajectory& traj, const std::vector<double>& times,
                       const std::vector<double>& probs) {
  const std::size_t n = probs.size();
  const double highest = *std::max_element(probs.begin(), probs.end());
  std::size_t bracket = 0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (probs[i] > probs[i - 1] && probs[i] >= probs[i + 1] &&
        probs[i] >= kPeakProminence * highest) {
      bracket = i;
      break;
    }
  }
  if (bracket == 0) {
    const std::size_t edge = probs.back() > probs.front() ? n - 1 : 0;
    return {times[edge], probs[edge], false};
  }

  traj.anchor(times[bracket - 1]);
  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = times[bracket - 1];
  double b = times[bracket + 1];
  double c = b - phi * (b - a);
  double d = a + phi * (b - a);
  double fc = traj.probability(c);
  double fd = traj.probability(d);
  while (b - a > kPeakRelativeTolerance * 0.5 * (a + b)) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - phi * (b - a);
      fc = traj.probability(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + phi * (b - a);
      fd = traj.probability(d);
    }
  }
  const double t = 0.5 * (a + b);
  const double p = traj.probability(t);
  if (p < probs[bracket]) return {times[bracket], probs[bracket], true};
  return {t, p, true};
}

StateVector evolve_impl(const Dynamics& d, const StateVector& psi0, double t, PropagatorKind kind) {
  check_basis(d, psi0);
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("evolve: t must be finite and >= 0");
  if (t == 0.0) return psi0;
  Trajectory traj(d, {psi0.amplitudes().begin(), psi0.amplitudes().end()}, kind, t);
  return StateVector(traj.state(t), d.basis);
}

SimulationResult series_impl(const Dynamics& d, std::vector<Complex> psi0, double gamma,
                             std::uint64_t n, double t_max, int samples, PropagatorKind kind) {
  if (!(t_max > 0.0) || !std::isfinite(t_max)) {
    throw InvalidArgument("probability_series: t_max must be positive");
  }
  if (samples < 2) throw InvalidArgument("probability_series: need at least 2 samples");
  Trajectory traj(d, std::move(psi0), kind, t_max);
  SimulationResult r;
  r.times = uniform_grid(t_max, samples);
  r.probabilities = sample(traj, r.times);
  const Peak peak = locate_first_peak(traj, r.times, r.probabilities);
  r.peak_time = peak.time;
  r.peak_probability = peak.probability;
  r.peak_interior = peak.interior;
  r.gamma = gamma;
  r.num_vertices = n;
  return r;
}

Peak peak_impl(const Dynamics& d, std::vector<Complex> psi0, double t_hint, PropagatorKind kind) {
  if (!(t_hint > 0.0) || !std::isfinite(t_hint)) {
    throw InvalidArgument("find_peak: t_hint must be positive");
  }
  const double t_max = 1.5 * t_hint;
  Trajectory traj(d, std::move(psi0), kind, t_max);
  const auto times = uniform_grid(t_max, kPeakScanSamples);
  const auto probs = sample(traj, times);
  return locate_first_peak(traj, times, probs);
}

std::vector<Complex> amplitudes_of(const StateVector& s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

}  // namespace

SearchProblem make_search_problem(std::shared_ptr<const Graph> graph, Vertex marked,
                                  double gamma) {
  if (!graph) throw InvalidArgument("search problem needs a graph");
  if (marked >= graph->num_vertices()) {
    throw InvalidArgument("marked vertex " + std::to_string(marked) + " outside [0, " +
                          std::to_string(graph->num_vertices()) + ")");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidArgument("jumping rate gamma must be positive and finite");
  }
  return SearchProblem{std::move(graph), marked, gamma};
}

StateVector uniform_state(const SearchProblem& problem) {
  const std::uint64_t n = problem.num_vertices();
  check_full_capacity(n);
  return StateVector(std::vector<Complex>(n, Complex(1.0 / std::sqrt(static_cast<double>(n)))),
                     FullBasis{n});
}

StateVector uniform_state(const ReducedHamiltonian& reduced) {
  return project_uniform(reduced.cell_sizes);
}

void apply_hamiltonian(const SearchProblem& problem, std::span<const Complex> x,
                       std::span<Complex> y) {
  problem.graph->apply_adjacency(x, y);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] *= -problem.gamma;
  y[problem.marked] -= x[problem.marked];
}

Eigen::MatrixXd dense_hamiltonian(const SearchProblem& problem) {
  const std::uint64_t n = problem.num_vertices();
  if (n > kMaxExactDimension) {
    throw CapacityExceeded("dense Hamiltonian is limited to dimension " +
                           std::to_string(kMaxExactDimension));
  }
  const auto dim = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (Vertex v = 0; v < n; ++v) {
    problem.graph->for_each_neighbor(v, [&](Vertex u) { h(v, u) = -problem.gamma; });
  }
  h(problem.marked, problem.marked) -= 1.0;
  return h;
}

double energy(const SearchProblem& problem, const StateVector& psi) {
  const auto d = dynamics_of(problem);
  check_basis(d, psi);
  std::vector<Complex> hpsi(psi.size());
  apply_hamiltonian(problem, psi.amplitudes(), hpsi);
  Complex e = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) e += std::conj(psi[i]) * hpsi[i];
  return e.real();
}

double energy(const ReducedHamiltonian& reduced, const StateVector& psi) {
  const auto d = dynamics_of(reduced);
  check_basis(d, psi);
  std::vector<Complex> hpsi(psi.size());
  d.apply(psi.amplitudes(), hpsi);
  Complex e = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) e += std::conj(psi[i]) * hpsi[i];
  return e.real();
}

StateVector evolve(const SearchProblem& problem, const StateVector& psi0, double t,
                   PropagatorKind kind) {
  return evolve_impl(dynamics_of(problem), psi0, t, kind);
}

StateVector evolve(const ReducedHamiltonian& reduced, const StateVector& psi0, double t,
                   PropagatorKind kind) {
  return evolve_impl(dynamics_of(reduced), psi0, t, kind);
}

SimulationResult probability_series(const SearchProblem& problem, double t_max, int samples,
                                    PropagatorKind kind) {
  return series_impl(dynamics_of(problem), amplitudes_of(uniform_state(problem)), problem.gamma,
                     problem.num_vertices(), t_max, samples, kind);
}

SimulationResult probability_series(const ReducedHamiltonian& reduced, double t_max, int samples,
                                    PropagatorKind kind) {
  return series_impl(dynamics_of(reduced), amplitudes_of(uniform_state(reduced)), reduced.gamma,
                     reduced.num_vertices(), t_max, samples, kind);
}

Peak find_peak(const SearchProblem& problem, double t_hint, PropagatorKind kind) {
  return peak_impl(dynamics_of(problem), amplitudes_of(uniform_state(problem)), t_hint, kind);
}

Peak find_peak(const ReducedHamiltonian& reduced, double t_hint, PropagatorKind kind) {
  return peak_impl(dynamics_of(reduced), amplitudes_of(uniform_state(reduced)), t_hint, kind);
}

}  // namespace kronwalk

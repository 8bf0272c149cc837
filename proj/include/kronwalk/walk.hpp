#pragma once

// Continuous-time quantum walk search: H = -gamma A - |w><w| evolved from the
// uniform superposition, either over all vertices or on a reduced quotient.

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "kronwalk/graph.hpp"
#include "kronwalk/reducer.hpp"
#include "kronwalk/state.hpp"

namespace kronwalk {

/// Dimensions up to this use the exact eigendecomposition propagator.
inline constexpr std::uint64_t kMaxExactDimension = 2048;
/// Full-space state vectors are refused above this many vertices.
inline constexpr std::uint64_t kMaxFullDimension = std::uint64_t{1} << 22;
/// Samples in the coarse scan of find_peak.
inline constexpr int kPeakScanSamples = 512;
/// Relative time tolerance of the golden-section peak refinement.
inline constexpr double kPeakRelativeTolerance = 1e-4;
/// A local maximum counts as the first peak only if it reaches this fraction
/// of the largest sampled probability; smaller ripples are skipped.
inline constexpr double kPeakProminence = 0.5;

struct SearchProblem {
  std::shared_ptr<const Graph> graph;
  Vertex marked = 0;
  double gamma = 0.0;

  std::uint64_t num_vertices() const noexcept { return graph->num_vertices(); }
};

/// Validates 0 <= w < N and gamma > 0 (finite).
SearchProblem make_search_problem(std::shared_ptr<const Graph> graph, Vertex marked, double gamma);

enum class PropagatorKind { automatic, exact, iterative };

struct SimulationResult {
  std::vector<double> times;
  std::vector<double> probabilities;
  double peak_time = 0.0;
  double peak_probability = 0.0;
  bool peak_interior = false;
  double gamma = 0.0;
  std::uint64_t num_vertices = 0;
};

struct Peak {
  double time = 0.0;
  double probability = 0.0;
  bool interior = false;  // false: no qualifying local maximum, boundary reported
};

StateVector uniform_state(const SearchProblem& problem);
StateVector uniform_state(const ReducedHamiltonian& reduced);

/// y = H x in the vertex basis without forming H.
void apply_hamiltonian(const SearchProblem& problem, std::span<const Complex> x,
                       std::span<Complex> y);

/// Dense H; refuses dimensions above kMaxExactDimension.
Eigen::MatrixXd dense_hamiltonian(const SearchProblem& problem);

/// <psi|H|psi>
double energy(const SearchProblem& problem, const StateVector& psi);
double energy(const ReducedHamiltonian& reduced, const StateVector& psi);

/// exp(-iHt) psi0. Throws InvalidArgument on a basis mismatch or t < 0, and
/// NumericalFailure if the norm drifts by more than kNormTolerance.
StateVector evolve(const SearchProblem& problem, const StateVector& psi0, double t,
                   PropagatorKind kind = PropagatorKind::automatic);
StateVector evolve(const ReducedHamiltonian& reduced, const StateVector& psi0, double t,
                   PropagatorKind kind = PropagatorKind::automatic);

/// Success probability |<w|psi(t)>|^2 from the uniform state on the grid
/// t_i = t_max * i / (samples - 1), with the first peak refined.
SimulationResult probability_series(const SearchProblem& problem, double t_max, int samples,
                                    PropagatorKind kind = PropagatorKind::automatic);
SimulationResult probability_series(const ReducedHamiltonian& reduced, double t_max, int samples,
                                    PropagatorKind kind = PropagatorKind::automatic);

/// First peak of the success probability: coarse scan of [0, 1.5 t_hint],
/// then golden-section refinement of the bracketing samples.
Peak find_peak(const SearchProblem& problem, double t_hint,
               PropagatorKind kind = PropagatorKind::automatic);
Peak find_peak(const ReducedHamiltonian& reduced, double t_hint,
               PropagatorKind kind = PropagatorKind::automatic);

}  // namespace kronwalk

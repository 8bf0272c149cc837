#pragma once

// Time-evolution operators exp(-iHt) for a real symmetric Hamiltonian.

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "kronwalk/state.hpp"

namespace kronwalk {

/// y = H x
using HamiltonianAction = std::function<void(std::span<const Complex>, std::span<Complex>)>;

class Propagator {
 public:
  virtual ~Propagator() = default;
  virtual std::size_t dimension() const = 0;
  /// psi <- exp(-iH dt) psi
  virtual void advance(std::vector<Complex>& psi, double dt) const = 0;
};

/// Exact propagation through the eigendecomposition H = V diag(E) V^T.
class SpectralPropagator final : public Propagator {
 public:
  explicit SpectralPropagator(const Eigen::MatrixXd& hamiltonian);

  std::size_t dimension() const override { return static_cast<std::size_t>(energies_.size()); }
  void advance(std::vector<Complex>& psi, double dt) const override;

  const Eigen::VectorXd& energies() const noexcept { return energies_; }
  const Eigen::MatrixXd& eigenvectors() const noexcept { return vectors_; }

  /// c = V^T psi
  std::vector<Complex> to_eigenbasis(std::span<const Complex> psi) const;
  /// Component `index` of exp(-iHt) psi, given c = V^T psi. O(dimension).
  Complex amplitude(std::size_t index, std::span<const Complex> coefficients, double t) const;

 private:
  Eigen::VectorXd energies_;
  Eigen::MatrixXd vectors_;
};

/// Largest step-count an Rk4Propagator accepts for one advance() call.
inline constexpr double kMaxRk4Steps = 1e9;

/// Classical fourth-order Runge-Kutta on i dpsi/dt = H psi with a fixed step.
///
/// The step is x / rho, where rho bounds the spectral radius of H and
///   x = min(0.1, (120 * tol / (rho * horizon))^(1/4)),
/// so the accumulated RK4 truncation error (rho*horizon * x^4 / 120 per
/// unit amplitude) stays under tol = kRk4AmplitudeBudget over the horizon.
class Rk4Propagator final : public Propagator {
 public:
  static constexpr double kRk4AmplitudeBudget = 1e-9;

  Rk4Propagator(HamiltonianAction apply, std::size_t dimension, double spectral_bound,
                double horizon);

  std::size_t dimension() const override { return dimension_; }
  void advance(std::vector<Complex>& psi, double dt) const override;

  double step() const noexcept { return step_; }

 private:
  HamiltonianAction apply_;
  std::size_t dimension_;
  double step_;
};

}  // namespace kronwalk

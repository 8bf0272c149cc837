#include "kronwalk/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kronwalk/errors.hpp"

namespace kronwalk {

SpectralPropagator::SpectralPropagator(const Eigen::MatrixXd& hamiltonian) {
  if (hamiltonian.rows() != hamiltonian.cols() || hamiltonian.rows() == 0) {
    throw InvalidArgument("SpectralPropagator: Hamiltonian must be square and non-empty");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian);
  if (solver.info() != Eigen::Success) {
    throw NumericalFailure("SpectralPropagator: eigendecomposition did not converge");
  }
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

std::vector<Complex> SpectralPropagator::to_eigenbasis(std::span<const Complex> psi) const {
  const auto n = energies_.size();
  if (static_cast<Eigen::Index>(psi.size()) != n) {
    throw InvalidArgument("SpectralPropagator: state dimension mismatch");
  }
  Eigen::VectorXd re(n);
  Eigen::VectorXd im(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    re(i) = psi[i].real();
    im(i) = psi[i].imag();
  }
  const Eigen::VectorXd cre = vectors_.transpose() * re;
  const Eigen::VectorXd cim = vectors_.transpose() * im;
  std::vector<Complex> c(n);
  for (Eigen::Index i = 0; i < n; ++i) c[i] = {cre(i), cim(i)};
  return c;
}

Complex SpectralPropagator::amplitude(std::size_t index, std::span<const Complex> coefficients,
                                      double t) const {
  Complex sum = 0.0;
  const auto row = static_cast<Eigen::Index>(index);
  for (Eigen::Index k = 0; k < energies_.size(); ++k) {
    sum += vectors_(row, k) * std::polar(1.0, -energies_(k) * t) * coefficients[k];
  }
  return sum;
}

void SpectralPropagator::advance(std::vector<Complex>& psi, double dt) const {
  auto c = to_eigenbasis(psi);
  const auto n = energies_.size();
  Eigen::VectorXd re(n);
  Eigen::VectorXd im(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex phased = std::polar(1.0, -energies_(k) * dt) * c[k];
    re(k) = phased.real();
    im(k) = phased.imag();
  }
  const Eigen::VectorXd out_re = vectors_ * re;
  const Eigen::VectorXd out_im = vectors_ * im;
  for (Eigen::Index i = 0; i < n; ++i) psi[i] = {out_re(i), out_im(i)};
}

Rk4Propagator::Rk4Propagator(HamiltonianAction apply, std::size_t dimension,
                             double spectral_bound, double horizon)
    : apply_(std::move(apply)), dimension_(dimension) {
  if (!(spectral_bound > 0.0) || !std::isfinite(spectral_bound)) {
    throw InvalidArgument("Rk4Propagator: spectral bound must be positive and finite");
  }
  const double extent = std::max(horizon, 0.0) * spectral_bound;
  double x = 0.1;
  if (extent > 0.0) x = std::min(x, std::pow(120.0 * kRk4AmplitudeBudget / extent, 0.25));
  step_ = x / spectral_bound;
  if (!(step_ > 0.0) || extent / x > kMaxRk4Steps) {
    throw NumericalFailure("Rk4Propagator: step size underflow (horizon " +
                           std::to_string(horizon) + ")");
  }
}

void Rk4Propagator::advance(std::vector<Complex>& psi, double dt) const {
  if (psi.size() != dimension_) throw InvalidArgument("Rk4Propagator: state dimension mismatch");
  if (dt == 0.0) return;
  const double count = std::ceil(std::abs(dt) / step_);
  if (count > kMaxRk4Steps) {
    throw NumericalFailure("Rk4Propagator: step size underflow over interval " +
                           std::to_string(dt));
  }
  const auto steps = static_cast<std::size_t>(count);
  const double h = dt / static_cast<double>(steps);
  // -i h z, written out so no general complex product is needed.
  const auto rot = [](double scale, const Complex& z) { return Complex(scale * z.imag(), -scale * z.real()); };

  std::vector<Complex> k1(dimension_), k2(dimension_), k3(dimension_), k4(dimension_);
  std::vector<Complex> tmp(dimension_);
  for (std::size_t s = 0; s < steps; ++s) {
    apply_(psi, k1);
    for (std::size_t i = 0; i < dimension_; ++i) tmp[i] = psi[i] + rot(0.5 * h, k1[i]);
    apply_(tmp, k2);
    for (std::size_t i = 0; i < dimension_; ++i) tmp[i] = psi[i] + rot(0.5 * h, k2[i]);
    apply_(tmp, k3);
    for (std::size_t i = 0; i < dimension_; ++i) tmp[i] = psi[i] + rot(h, k3[i]);
    apply_(tmp, k4);
    for (std::size_t i = 0; i < dimension_; ++i) {
      psi[i] += rot(h / 6.0, k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
  }
}

}  // namespace kronwalk

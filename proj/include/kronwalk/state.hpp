#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace kronwalk {

using Complex = std::complex<double>;

/// Amplitudes indexed by vertex.
struct FullBasis {
  std::uint64_t dimension = 0;
  friend bool operator==(const FullBasis&, const FullBasis&) = default;
};

/// Amplitudes indexed by partition cell; component c is the normalized
/// uniform superposition over cell c.
struct ReducedBasis {
  std::vector<std::uint64_t> cell_sizes;
  friend bool operator==(const ReducedBasis&, const ReducedBasis&) = default;
};

using Basis = std::variant<FullBasis, ReducedBasis>;

/// Tolerance on | ||psi|| - 1 | enforced at construction and after evolution.
inline constexpr double kNormTolerance = 1e-9;

class StateVector {
 public:
  /// Throws InvalidArgument when the amplitudes are not normalized or the
  /// length does not match the basis.
  StateVector(std::vector<Complex> amplitudes, Basis basis);

  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Basis& basis() const noexcept { return basis_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  bool is_reduced() const noexcept { return std::holds_alternative<ReducedBasis>(basis_); }

  double norm() const noexcept;
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  std::vector<Complex> amplitudes_;
  Basis basis_;
};

double norm_of(std::span<const Complex> v) noexcept;

}  // namespace kronwalk

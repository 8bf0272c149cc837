#include "kronwalk/state.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "kronwalk/errors.hpp"

namespace kronwalk {

double norm_of(std::span<const Complex> v) noexcept {
  double sum = 0.0;
  for (const auto& a : v) sum += std::norm(a);
  return std::sqrt(sum);
}

StateVector::StateVector(std::vector<Complex> amplitudes, Basis basis)
    : amplitudes_(std::move(amplitudes)), basis_(std::move(basis)) {
  const std::uint64_t expected = std::visit(
      [](const auto& b) -> std::uint64_t {
        using B = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<B, FullBasis>) {
          return b.dimension;
        } else {
          return b.cell_sizes.size();
        }
      },
      basis_);
  if (amplitudes_.size() != expected) {
    throw InvalidArgument("state has " + std::to_string(amplitudes_.size()) +
                          " amplitudes, basis expects " + std::to_string(expected));
  }
  const double n = norm();
  if (std::abs(n - 1.0) > kNormTolerance) {
    throw InvalidArgument("state is not normalized (norm " + std::to_string(n) + ")");
  }
}

double StateVector::norm() const noexcept { return norm_of(amplitudes_); }

}  // namespace kronwalk

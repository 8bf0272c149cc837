#pragma once

// Closed-form quantities for search on K_M^{(x) j}: critical jumping rates,
// strongly regular parameters of the second power, and the degenerate
// perturbation analysis of the third power.

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <string_view>

#include "kronwalk/graph_algorithms.hpp"

namespace kronwalk {

enum class GammaFormula {
  grover_1N,                // 1/N
  srg_k_mu,                 // 1/k + 1/((N-1) mu)
  third_order_exact,        // 1/(M^2 (M-3))
  practical_Mminus1_pow_j,  // 1/(M-1)^j
};

std::string_view to_string(GammaFormula f) noexcept;

struct GammaChoice {
  double value = 0.0;
  GammaFormula formula = GammaFormula::grover_1N;
};

/// Critical jumping rate. j = 1: 1/M. j = 2: 1/k + 1/((N-1) mu). j = 3:
/// 1/(M^2 (M-3)) for M >= 4, practical 1/(M-1)^3 for M = 2. j >= 4:
/// practical 1/(M-1)^j. Throws SingularFormula where a denominator vanishes
/// (j = 3 with M = 3; j = 2 with M = 2, where mu = 0) and InvalidArgument for
/// M < 2 or j < 1.
GammaChoice critical_gamma(std::uint32_t m, std::uint32_t order);

/// 1/(M-1)^j, the rate that works at finite M for j >= 3.
GammaChoice practical_gamma(std::uint32_t m, std::uint32_t order);

/// (M^2, (M-1)^2, (M-2)^2, (M-1)(M-2)); InvalidArgument for M < 3.
SrgParams srg_closed_form(std::uint32_t m);

struct SearchConditions {
  double k_over_n = 0.0;
  double k_over_mu_n_23 = 0.0;  // k / (mu N)^(2/3)
  double k_over_sqrt_n = 0.0;
  bool k_little_o_n = false;       // k/N shrinks when M doubles
  bool k_little_o_mu_n_23 = false;  // k/(mu N)^(2/3) shrinks when M doubles
  bool satisfied = false;           // both of the above
};

/// Evaluates k = o(N) and k = o((mu N)^(2/3)) for K_M (x) K_M at M and 2M.
/// Since k = (M-1)^2 and N = M^2, k/N = (1 - 1/M)^2 grows toward 1, so the
/// first condition never holds; the second does.
SearchConditions srg_search_conditions(std::uint32_t m);

struct PerturbationReport {
  std::uint32_t m = 0;
  double gamma = 0.0;  // 1/(M^2 (M-3))
  double e0 = 0.0;
  double e1 = 0.0;
  double gap = 0.0;
  double runtime_estimate = 0.0;  // pi / gap
  double alpha_ground[2] = {0.0, 0.0};   // (alpha_a, alpha_r) for E0
  double alpha_excited[2] = {0.0, 0.0};  // (alpha_a, alpha_r) for E1
  std::string basis_note;
};

/// Leading-order eigenpair splitting of the 4D quotient at the exact
/// critical rate. SingularFormula for M = 3, InvalidArgument for M < 3.
PerturbationReport perturbation_report(std::uint32_t m);

/// Orthogonal change of basis T = (|a>, |r>, |r'>, |r''>) expressed in the
/// (a, b, c, d) class basis of the 4D quotient. Columns are the new states.
Eigen::Matrix4d perturbation_basis(std::uint32_t m);

struct TaylorGap {
  double difference = 0.0;  // 1/(M-1)^3 - 1/(M^2 (M-3))
  double scaled = 0.0;      // difference * M^5, tends to -3
};

TaylorGap gamma_taylor_gap(std::uint32_t m);

/// pi sqrt(N) / 2
double predicted_runtime(std::uint64_t n);

}  // namespace kronwalk

#include "kronwalk/analysis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kronwalk/errors.hpp"

namespace kronwalk {

std::string_view to_string(GammaFormula f) noexcept {
  switch (f) {
    case GammaFormula::grover_1N:
      return "grover_1N";
    case GammaFormula::srg_k_mu:
      return "srg_k_mu";
    case GammaFormula::third_order_exact:
      return "third_order_exact";
    case GammaFormula::practical_Mminus1_pow_j:
      return "practical_Mminus1_pow_j";
  }
  return "unknown";
}

GammaChoice practical_gamma(std::uint32_t m, std::uint32_t order) {
  if (m < 2 || order < 1) throw InvalidArgument("practical_gamma: need M >= 2 and j >= 1");
  return {std::pow(m - 1.0, -static_cast<double>(order)), GammaFormula::practical_Mminus1_pow_j};
}

GammaChoice critical_gamma(std::uint32_t m, std::uint32_t order) {
  if (m < 2) throw InvalidArgument("critical_gamma: M must be at least 2");
  if (order < 1) throw InvalidArgument("critical_gamma: j must be at least 1");
  switch (order) {
    case 1:
      return {1.0 / m, GammaFormula::grover_1N};
    case 2: {
      if (m == 2) {
        throw SingularFormula("critical_gamma: mu = (M-1)(M-2) vanishes at M = 2",
                              "practical 1/(M-1)^2");
      }
      const double k = (m - 1.0) * (m - 1.0);
      const double mu = (m - 1.0) * (m - 2.0);
      const double n = static_cast<double>(m) * m;
      return {1.0 / k + 1.0 / ((n - 1.0) * mu), GammaFormula::srg_k_mu};
    }
    case 3:
      if (m == 3) {
        throw SingularFormula("critical_gamma: 1/(M^2 (M-3)) is singular at M = 3",
                              "practical 1/(M-1)^3");
      }
      if (m >= 4) {
        return {1.0 / (static_cast<double>(m) * m * (m - 3.0)), GammaFormula::third_order_exact};
      }
      return practical_gamma(m, order);
    default:
      return practical_gamma(m, order);
  }
}

SrgParams srg_closed_form(std::uint32_t m) {
  if (m < 3) throw InvalidArgument("srg_closed_form: M must be at least 3");
  const std::uint64_t mm = m;
  return {mm * mm, (mm - 1) * (mm - 1), (mm - 2) * (mm - 2), (mm - 1) * (mm - 2)};
}

namespace {

struct Ratios {
  double k_over_n;
  double k_over_mu_n_23;
};

Ratios ratios(std::uint64_t m) {
  const double mm = static_cast<double>(m);
  const double n = mm * mm;
  const double k = (mm - 1) * (mm - 1);
  const double mu = (mm - 1) * (mm - 2);
  return {k / n, k / std::pow(mu * n, 2.0 / 3.0)};
}

}  // namespace

SearchConditions srg_search_conditions(std::uint32_t m) {
  if (m < 3) throw InvalidArgument("srg_search_conditions: M must be at least 3");
  const auto here = ratios(m);
  const auto doubled = ratios(2 * std::uint64_t{m});
  SearchConditions s;
  s.k_over_n = here.k_over_n;
  s.k_over_mu_n_23 = here.k_over_mu_n_23;
  s.k_over_sqrt_n = (m - 1.0) * (m - 1.0) / m;
  s.k_little_o_n = doubled.k_over_n < here.k_over_n;
  s.k_little_o_mu_n_23 = doubled.k_over_mu_n_23 < here.k_over_mu_n_23;
  s.satisfied = s.k_little_o_n && s.k_little_o_mu_n_23;
  return s;
}

PerturbationReport perturbation_report(std::uint32_t m) {
  if (m < 3) throw InvalidArgument("perturbation_report: M must be at least 4");
  if (m == 3) {
    throw SingularFormula("perturbation_report: critical rate 1/(M^2 (M-3)) is singular at M = 3",
                          "practical 1/(M-1)^3");
  }
  const double mm = m;
  const double coupling = 1.0 / (std::sqrt(mm) * (mm - 3.0));
  PerturbationReport r;
  r.m = m;
  r.gamma = 1.0 / (mm * mm * (mm - 3.0));
  r.e0 = -1.0 - coupling;
  r.e1 = -1.0 + coupling;
  r.gap = r.e1 - r.e0;
  r.runtime_estimate = std::numbers::pi / r.gap;
  const double h = 1.0 / std::sqrt(2.0);
  r.alpha_ground[0] = h;
  r.alpha_ground[1] = h;
  r.alpha_excited[0] = -h;
  r.alpha_excited[1] = h;
  r.basis_note =
      "|a> = marked vertex; |r> = uniform superposition of unmarked vertices; "
      "|r'> = (sqrt(M-1)|c> - |d>)/sqrt(M); |r''> = |r> x |r'>. "
      "At the critical rate |a> and |r> are degenerate (energy -1) and the "
      "coupling -1/(sqrt(M)(M-3)) mixes them into (|a> + |r>)/sqrt(2) at E0 "
      "and (-|a> + |r>)/sqrt(2) at E1.";
  return r;
}

Eigen::Matrix4d perturbation_basis(std::uint32_t m) {
  if (m < 2) throw InvalidArgument("perturbation_basis: M must be at least 2");
  const double mm = m;
  const double m1 = mm - 1.0;
  const double rn = 1.0 / std::sqrt(mm * mm * mm - 1.0);
  const double rm = 1.0 / std::sqrt(mm);
  Eigen::Matrix4d t = Eigen::Matrix4d::Zero();
  t(0, 0) = 1.0;
  // |r>
  t(1, 1) = rn * std::sqrt(m1 * m1 * m1);
  t(2, 1) = rn * std::sqrt(3.0 * m1);
  t(3, 1) = rn * std::sqrt(3.0 * m1 * m1);
  // |r'>
  t(2, 2) = rm * std::sqrt(m1);
  t(3, 2) = -rm;
  // |r''> = |r> x |r'>
  t(1, 3) = rn * rm * (-mm * std::sqrt(3.0 * m1));
  t(2, 3) = rn * rm * std::sqrt(m1 * m1 * m1);
  t(3, 3) = rn * rm * m1 * m1;
  return t;
}

TaylorGap gamma_taylor_gap(std::uint32_t m) {
  if (m == 3) {
    throw SingularFormula("gamma_taylor_gap: 1/(M^2 (M-3)) is singular at M = 3",
                          "practical 1/(M-1)^3");
  }
  if (m < 4) throw InvalidArgument("gamma_taylor_gap: M must be at least 4");
  // M^2 (M-3) - (M-1)^3 = 1 - 3M, so the difference has no cancellation.
  const double mm = m;
  const double m1 = mm - 1.0;
  TaylorGap g;
  g.difference = (1.0 - 3.0 * mm) / (m1 * m1 * m1 * mm * mm * (mm - 3.0));
  g.scaled = mm * mm * mm * (1.0 - 3.0 * mm) / (m1 * m1 * m1 * (mm - 3.0));
  return g;
}

double predicted_runtime(std::uint64_t n) {
  return std::numbers::pi * std::sqrt(static_cast<double>(n)) / 2.0;
}

}  // namespace kronwalk

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "kronwalk/analysis.hpp"
#include "kronwalk/reducer.hpp"
#include "kronwalk/walk.hpp"

using namespace kronwalk;

namespace {

// Gap between the two lowest eigenvalues of the 4x4 quotient.
double numeric_gap(std::uint32_t m) {
  const auto r = closed_form_quotient(m, 3, 1.0 / (double(m) * m * (m - 3.0)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r.matrix);
  return es.eigenvalues()(1) - es.eigenvalues()(0);
}

}  // namespace

TEST_CASE("critical jumping rates") {
  const auto g1 = critical_gamma(256, 1);
  CHECK(g1.value == 1.0 / 256);
  CHECK(g1.formula == GammaFormula::grover_1N);
  const auto g2 = critical_gamma(256, 2);
  CHECK(g2.value == doctest::Approx(1.0 / (255.0 * 255.0) + 1.0 / (65535.0 * 255.0 * 254.0)).epsilon(1e-15));
  CHECK(g2.formula == GammaFormula::srg_k_mu);
  const auto g3 = critical_gamma(10, 3);
  CHECK(g3.value == doctest::Approx(1.0 / 700.0));
  CHECK(g3.formula == GammaFormula::third_order_exact);
  const auto g6 = critical_gamma(4, 6);
  CHECK(g6.value == doctest::Approx(1.0 / 729.0));
  CHECK(std::abs(g6.value - 0.001372) < 5e-7);
  CHECK(g6.formula == GammaFormula::practical_Mminus1_pow_j);
  CHECK(critical_gamma(2, 3).formula == GammaFormula::practical_Mminus1_pow_j);

  CHECK_THROWS_AS(critical_gamma(3, 3), SingularFormula);
  try {
    critical_gamma(3, 3);
  } catch (const SingularFormula& e) {
    CHECK(e.fallback().find("1/(M-1)^3") != std::string::npos);
  }
  CHECK_THROWS_AS(critical_gamma(2, 2), SingularFormula);
  CHECK_THROWS_AS(critical_gamma(1, 2), InvalidArgument);
  CHECK_THROWS_AS(critical_gamma(4, 0), InvalidArgument);
  CHECK(practical_gamma(256, 3).value == doctest::Approx(1.0 / std::pow(255.0, 3)));
  CHECK(to_string(GammaFormula::srg_k_mu) == "srg_k_mu");
}

TEST_CASE("SRG closed forms") {
  CHECK(srg_closed_form(4) == SrgParams{16, 9, 4, 6});
  CHECK(srg_closed_form(3) == SrgParams{9, 4, 1, 2});
  for (std::uint32_t m = 3; m <= 8; ++m) {
    CHECK(srg_closed_form(m) == srg_params(kron_power(complete_graph(m), 2)).params);
    CHECK(srg_closed_form(m).feasible());
  }
  CHECK_THROWS_AS(srg_closed_form(2), InvalidArgument);
}

TEST_CASE("SRG search conditions") {
  const auto c4 = srg_search_conditions(4);
  CHECK(c4.k_over_n == doctest::Approx(9.0 / 16.0));
  double prev_n = 0.0;
  double prev_mu = 1e9;
  for (std::uint32_t m : {4u, 8u, 16u, 32u}) {
    const auto c = srg_search_conditions(m);
    // k = (M-1)^2 grows like N, so k/N rises toward 1 instead of vanishing.
    CHECK_FALSE(c.k_little_o_n);
    CHECK(c.k_over_n > prev_n);
    CHECK(c.k_little_o_mu_n_23);
    CHECK(c.k_over_mu_n_23 < prev_mu);
    CHECK_FALSE(c.satisfied);
    prev_n = c.k_over_n;
    prev_mu = c.k_over_mu_n_23;
  }
  // k/sqrt(N) = (M-1)^2/M grows like sqrt(N) itself.
  const auto big = srg_search_conditions(1u << 20);
  CHECK(big.k_over_sqrt_n / double(1u << 20) == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("perturbation report") {
  const auto r = perturbation_report(256);
  CHECK(r.gamma == doctest::Approx(1.0 / (256.0 * 256.0 * 253.0)));
  CHECK(r.e0 < r.e1);
  CHECK(r.gap == r.e1 - r.e0);
  CHECK(r.gap == doctest::Approx(4.9407e-4).epsilon(1e-4));
  CHECK(r.runtime_estimate == doctest::Approx(std::numbers::pi / 2 * 16 * 253));
  CHECK(r.runtime_estimate == doctest::Approx(6358.4).epsilon(1e-4));
  CHECK(r.alpha_ground[0] == doctest::Approx(std::sqrt(0.5)));
  CHECK(r.alpha_excited[0] == doctest::Approx(-std::sqrt(0.5)));
  CHECK_FALSE(r.basis_note.empty());
  CHECK_THROWS_AS(perturbation_report(3), SingularFormula);
  CHECK_THROWS_AS(perturbation_report(2), InvalidArgument);
  for (std::uint32_t m = 4; m <= 40; ++m) {
    const auto p = perturbation_report(m);
    CHECK(p.gap == p.e1 - p.e0);
    CHECK(p.runtime_estimate == doctest::Approx(std::numbers::pi / p.gap));
  }
}

TEST_CASE("numerical gap of the 4x4 quotient") {
  CHECK(std::abs(numeric_gap(256) - perturbation_report(256).gap) / perturbation_report(256).gap <= 0.05);
  for (std::uint32_t m = 4; m <= 1024; m *= 2) {
    const double closed = 2.0 / (std::sqrt(double(m)) * (m - 3.0));
    CHECK_MESSAGE(std::abs(numeric_gap(m) - closed) / closed <= 20.0 / m, "M=", m);
  }
}

TEST_CASE("perturbation basis is orthogonal and contains the uniform state") {
  for (std::uint32_t m : {4u, 7u, 50u}) {
    const Eigen::Matrix4d t = perturbation_basis(m);
    CHECK((t.transpose() * t - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    // |s> lies in span{|a>, |r>}.
    const auto s = project_uniform(closed_form_quotient(m, 3, 0.1).cell_sizes);
    Eigen::Vector4d sv;
    for (int i = 0; i < 4; ++i) sv(i) = s[i].real();
    const Eigen::Vector4d coeff = t.transpose() * sv;
    CHECK(std::abs(coeff(2)) < 1e-12);
    CHECK(std::abs(coeff(3)) < 1e-12);
  }
  // The coupling between |a> and |r> at the critical rate.
  const std::uint32_t m = 400;
  const double gamma = 1.0 / (double(m) * m * (m - 3.0));
  const Eigen::Matrix4d t = perturbation_basis(m);
  const Eigen::Matrix4d h = t.transpose() * closed_form_quotient(m, 3, gamma).matrix * t;
  CHECK(h(0, 1) == doctest::Approx(-1.0 / (std::sqrt(double(m)) * (m - 3.0))).epsilon(0.02));
  CHECK(h(0, 0) == doctest::Approx(-1.0));
  CHECK(h(1, 1) == doctest::Approx(-1.0).epsilon(0.02));
}

TEST_CASE("Taylor gap between the two third-order rates") {
  const auto g256 = gamma_taylor_gap(256);
  const double direct = 1.0 / std::pow(255.0, 3) - 1.0 / (256.0 * 256.0 * 253.0);
  CHECK(g256.difference == doctest::Approx(direct).epsilon(1e-9));
  CHECK(std::abs(g256.scaled + 3.0) <= 0.1);
  CHECK(std::abs(gamma_taylor_gap(10000).scaled + 3.0) <= 0.003);
  double prev = 1e9;
  for (std::uint32_t m = 8; m <= 8192; m *= 2) {
    const double err = std::abs(gamma_taylor_gap(m).scaled + 3.0);
    CHECK(err < prev);
    prev = err;
  }
  CHECK_THROWS_AS(gamma_taylor_gap(3), SingularFormula);
  CHECK_THROWS_AS(gamma_taylor_gap(2), InvalidArgument);
}

TEST_CASE("predicted runtime") {
  CHECK(predicted_runtime(256) == doctest::Approx(25.13).epsilon(1e-3));
  CHECK(predicted_runtime(65536) == doctest::Approx(402.12).epsilon(1e-4));
  CHECK(predicted_runtime(1) == doctest::Approx(std::numbers::pi / 2));
  for (std::uint32_t m : {3u, 4u, 16u}) {
    for (std::uint32_t j : {1u, 2u, 3u, 4u}) {
      CHECK(predicted_runtime(checked_power(m, j)) ==
            doctest::Approx(std::numbers::pi / 2 * std::pow(double(m), j / 2.0)).epsilon(1e-14));
    }
  }
}

TEST_CASE("second-order peak probability rises toward 1 as M doubles") {
  double prev = 0.0;
  for (std::uint32_t m : {8u, 16u, 32u, 64u}) {
    const auto r = closed_form_quotient(m, 2, critical_gamma(m, 2).value);
    const auto peak = find_peak(r, predicted_runtime(std::uint64_t{m} * m));
    CHECK_MESSAGE(peak.probability > prev, "M=", m);
    CHECK(peak.probability <= 1.0);
    prev = peak.probability;
  }
  CHECK(prev > 0.99);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ncphase/covariance_wigner.hpp"
#include "ncphase/separability.hpp"
#include "ncphase/td_isotropic.hpp"

using namespace ncphase;

namespace {

IsotropicTDParams constant_params(double mu0 = 1.0, double alpha = 1.3, double nu = 0.1,
                                  double kappa = 1.0) {
    IsotropicTDParams p;
    p.mu0 = [mu0](double) { return mu0; };
    p.alpha = [alpha](double) { return alpha; };
    p.nu = [nu](double) { return nu; };
    p.kappa = kappa;
    p.hbar = 1.0;
    return p;
}

// Closed-form Pinney solution for constant coefficients:
// sigma^2 = A u^2 + 2 B u v + C v^2 with u = cos(w t), v = sin(w t).
double pinney_sigma(const IsotropicTDParams& p, double s0, double sd0, double t) {
    const double mu = p.mu0(0.0), al = p.alpha(0.0);
    const double w = std::sqrt(al / mu);
    const double a = s0 * s0;
    const double b = s0 * sd0 / w;
    const double c = (p.kappa * p.kappa / (mu * mu * w * w) + b * b) / a;
    const double u = std::cos(w * t), v = std::sin(w * t);
    return std::sqrt(a * u * u + 2.0 * b * u * v + c * v * v);
}

}  // namespace

TEST_CASE("equilibrium point is a fixed point of the flow") {
    const IsotropicTDParams p = constant_params();
    const double s0 = equilibrium_sigma(p);
    CHECK(s0 == doctest::Approx(std::pow(1.0 / 1.3, 0.25)).epsilon(1e-14));
    const EPTrajectory traj = integrate_ep(p, s0, 0.0, 5.0, 1e-3);
    double worst = 0.0;
    for (const auto& n : traj.nodes) {
        worst = std::max(worst, std::abs(n.sigma - s0));
        worst = std::max(worst, std::abs(n.sigmadot));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("trajectory matches the closed-form Pinney superposition") {
    const IsotropicTDParams p = constant_params();
    const double s0 = 1.1, sd0 = 0.2;
    const EPTrajectory traj = integrate_ep(p, s0, sd0, 8.0, 1e-3);
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.nodes.size(); i += 100) {
        const auto& n = traj.nodes[i];
        worst = std::max(worst, std::abs(n.sigma - pinney_sigma(p, s0, sd0, n.t)));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("invariant drift is fourth order in dt") {
    IsotropicTDParams p = constant_params();
    p.alpha = [](double t) { return 1.3 * (1.0 + 0.15 * std::sin(1.3 * t)); };
    const double s0 = equilibrium_sigma(p);
    // coarse steps keep the drift well above the roundoff floor
    const double d1 = integrate_ep(p, s0, 0.0, 4.0, 1.6e-2).max_drift();
    const double d2 = integrate_ep(p, s0, 0.0, 4.0, 8e-3).max_drift();
    CHECK(d1 < 1e-8);
    const double ratio = d1 / d2;
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
}

TEST_CASE("closed b11 satisfies the exact constraint") {
    IsotropicTDParams p = constant_params();
    p.alpha = [](double t) { return 1.3 * (1.0 + 0.15 * std::sin(1.3 * t)); };
    const EPTrajectory traj = integrate_ep(p, equilibrium_sigma(p), 0.1, 4.0, 1e-3);
    for (std::size_t i = 0; i < traj.nodes.size(); i += 500) {
        const auto& n = traj.nodes[i];
        CHECK(std::abs(n.c11 * n.c11 - n.a11 * n.b11 + p.kappa * p.kappa) < 1e-13);
    }
}

TEST_CASE("consistency ODE residuals shrink with the grid") {
    IsotropicTDParams p = constant_params();
    p.alpha = [](double t) { return 1.3 * (1.0 + 0.15 * std::sin(1.3 * t)); };
    const double s0 = equilibrium_sigma(p);
    const auto r1 = consistency_residuals(integrate_ep(p, s0, 0.0, 4.0, 2e-3), p);
    const auto r2 = consistency_residuals(integrate_ep(p, s0, 0.0, 4.0, 1e-3), p);
    CHECK(r1.adot < 1e-5);
    CHECK(r1.bdot < 1e-5);
    CHECK(r1.cdot < 1e-5);
    // centered differences: second-order decrease
    CHECK(r1.adot / r2.adot == doctest::Approx(4.0).epsilon(0.2));
    CHECK(r1.cdot / r2.cdot == doctest::Approx(4.0).epsilon(0.2));
}

TEST_CASE("TD Gaussian state structure and separability") {
    IsotropicTDParams p = constant_params();
    const EPTrajectory traj = integrate_ep(p, 1.2, -0.1, 6.0, 1e-3);
    for (std::size_t i = 0; i < traj.nodes.size(); i += 701) {
        const auto& n = traj.nodes[i];
        const GaussianGroundState st = td_ground_state(n, p);
        CHECK(st.Lambda(0, 0) == st.Lambda(1, 1));
        CHECK(std::abs(st.Lambda(0, 1)) == 0.0);
        CHECK(st.Lambda(0, 0).real() ==
              doctest::Approx(p.kappa / (n.sigma * n.sigma)).epsilon(1e-12));
        CHECK(std::abs(simon_ps(covariance(st))) < 1e-10);
        CHECK(factorization_check(st) < 1e-12);
    }
}

TEST_CASE("factorization check flags correlated states") {
    Eigen::Matrix2cd lam;
    lam << 1.0, std::complex<double>(0.0, 0.1), std::complex<double>(0.0, 0.1), 1.0;
    CHECK(factorization_check(make_state(lam, 1.0)) > 1e-3);
}

TEST_CASE("invariant spectrum") {
    const auto [lo, hi] = invariant_spectrum(1.0, 0.3);
    CHECK(lo == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(hi == doctest::Approx(1.3).epsilon(1e-15));
    CHECK_THROWS_AS(invariant_spectrum(0.2, 0.5), InvalidParameter);
}

TEST_CASE("rejects bad inputs and oversized steps") {
    const IsotropicTDParams p = constant_params();
    CHECK_THROWS_AS(integrate_ep(p, -1.0, 0.0, 1.0, 1e-3), InvalidParameter);
    CHECK_THROWS_AS(integrate_ep(p, 1.0, 0.0, -1.0, 1e-3), InvalidParameter);
    CHECK_THROWS_AS(integrate_ep(p, 1.0, 5.0, 10.0, 0.8), StepRejection);
    IsotropicTDParams bad = p;
    bad.kappa = -1.0;
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
}

TEST_CASE("tabulated parameters reproduce the constant-coefficient run") {
    const char* path = "td_table_test.txt";
    {
        std::ofstream out(path);
        out << "t mu0 alpha nu\n";
        for (int i = 0; i <= 400; ++i) {
            const double t = 0.025 * i;
            out << t << " " << 1.0 << " " << 1.3 << " " << 0.1 << "\n";
        }
    }
    const IsotropicTDParams p = params_from_table(path, 1.0, 0.0, 1.0);
    CHECK(p.mu0(3.3) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.alpha(7.7) == doctest::Approx(1.3).epsilon(1e-12));
    const EPTrajectory traj = integrate_ep(p, 1.1, 0.2, 8.0, 1e-3);
    const IsotropicTDParams ref = constant_params();
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.nodes.size(); i += 200)
        worst = std::max(worst,
                         std::abs(traj.nodes[i].sigma - pinney_sigma(ref, 1.1, 0.2, traj.nodes[i].t)));
    CHECK(worst < 1e-8);
    std::remove(path);
}

TEST_CASE("table loader rejects malformed input") {
    const char* path = "td_table_bad.txt";
    {
        std::ofstream out(path);
        out << "t mu0 alpha nu\n0 1 1 0.1\n0.5 1 1 0.1\n0.7 1 1 0.1\n";
    }
    CHECK_THROWS_AS(params_from_table(path, 1.0, 0.0, 1.0), InvalidParameter);
    std::remove(path);
    CHECK_THROWS_AS(params_from_table("does_not_exist.txt", 1.0, 0.0, 1.0), InvalidParameter);
}

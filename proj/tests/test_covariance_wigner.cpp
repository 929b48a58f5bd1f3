#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncphase/oracles.hpp"
#include "ncphase/sampling.hpp"

using namespace ncphase;

namespace {
GaussianGroundState reference_state() {
    NCOscillatorSpec s;
    s.m1 = 1.0;
    s.m2 = 1.0;
    s.w1t = 1.0;
    s.w2t = 2.0;
    s.nc = {0.1, 0.1, 1.0};
    const CommHamiltonian h = to_commutative(s);
    return ground_state(mode_basis(h, symplectic_eigenvalues(h)), h.hbar);
}
}  // namespace

TEST_CASE("reorder permutation") {
    const Eigen::Matrix4d s = reorder_xxpp_to_xpxp();
    CHECK((s * s.transpose() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() == 0.0);
    Eigen::Vector4d xt{1.0, 2.0, 3.0, 4.0};  // (x1, x2, p1, p2)
    const Eigen::Vector4d xc = s * xt;
    CHECK(xc(0) == 1.0);  // x1
    CHECK(xc(1) == 3.0);  // p1
    CHECK(xc(2) == 2.0);  // x2
    CHECK(xc(3) == 4.0);  // p2
}

TEST_CASE("Wigner determinant is hbar^-4") {
    std::mt19937 rng(5);
    for (int i = 0; i < 25; ++i) {
        const CommHamiltonian h = to_commutative(random_valid_spec(rng));
        const GaussianGroundState st =
            ground_state(mode_basis(h, symplectic_eigenvalues(h)), h.hbar);
        const WignerGaussian w = wigner_from_state(st);
        CHECK(w.LambdaM.determinant() * std::pow(h.hbar, 4) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK((w.LambdaM - w.LambdaM.transpose()).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("covariance closed form vs block-inverse path") {
    std::mt19937 rng(9);
    for (int i = 0; i < 25; ++i) {
        const CommHamiltonian h = to_commutative(random_valid_spec(rng));
        const GaussianGroundState st =
            ground_state(mode_basis(h, symplectic_eigenvalues(h)), h.hbar);
        const CovarianceMatrix v = covariance(st);
        const CovarianceMatrix vo = oracle::covariance_via_inverse(wigner_from_state(st));
        CHECK((v.V - vo.V).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("decoupled diagonal covariance") {
    Eigen::Matrix2cd lam = Eigen::Matrix2cd::Zero();
    lam(0, 0) = 1.0;
    lam(1, 1) = 2.0;
    const CovarianceMatrix v = covariance(make_state(lam, 1.0));
    const Eigen::Vector4d expect{0.5, 0.5, 0.25, 1.0};  // (x1, p1, x2, p2) variances
    CHECK((v.V - Eigen::Matrix4d(expect.asDiagonal())).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("complex-diagonal Lambda takes the general path consistently") {
    // TD-like state: Lambda diagonal with an imaginary part.
    Eigen::Matrix2cd lam = Eigen::Matrix2cd::Zero();
    lam(0, 0) = {1.3, -0.4};
    lam(1, 1) = {1.3, -0.4};
    const GaussianGroundState st = make_state(lam, 1.0);
    const CovarianceMatrix v = covariance(st);
    const CovarianceMatrix vo = oracle::covariance_via_inverse(wigner_from_state(st));
    CHECK((v.V - vo.V).cwiseAbs().maxCoeff() < 1e-13);
    // x-p correlation appears with complex Lambda
    CHECK(std::abs(v.V(0, 1)) > 1e-3);
    CHECK((v.V - v.V.transpose()).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("pure-state covariance saturates the determinant bound") {
    const CovarianceMatrix v = covariance(reference_state());
    CHECK(v.V.determinant() == doctest::Approx(std::pow(v.hbar / 2.0, 4)).epsilon(1e-10));
}

TEST_CASE("uncertainty relation in both spaces") {
    std::mt19937 rng(13);
    for (int i = 0; i < 10; ++i) {
        const NCOscillatorSpec spec = random_valid_spec(rng);
        const CommHamiltonian h = to_commutative(spec);
        const GaussianGroundState st =
            ground_state(mode_basis(h, symplectic_eigenvalues(h)), h.hbar);
        const CovarianceMatrix v = covariance(st);
        CHECK(rsup_check(v.V, v.hbar, symplectic_j()) > -1e-10);
        const Eigen::Matrix4d vnc = nc_covariance(v, spec.nc);
        CHECK(rsup_check(vnc, effective_planck(spec.nc), deformed_j(spec.nc)) > -1e-10);
    }
}

TEST_CASE("rsup detects unphysical matrices") {
    // classical-looking noise far below the quantum limit
    const Eigen::Matrix4d v = 0.01 * Eigen::Matrix4d::Identity();
    CHECK(rsup_check(v, 1.0, symplectic_j()) < -0.1);
}

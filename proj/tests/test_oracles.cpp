#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ncphase/oracles.hpp"
#include "ncphase/sampling.hpp"

using namespace ncphase;

namespace {
GaussianGroundState reference_state(ModeBasis* basis_out = nullptr) {
    NCOscillatorSpec s;
    s.m1 = 1.0;
    s.m2 = 1.0;
    s.w1t = 1.0;
    s.w2t = 2.0;
    s.nc = {0.1, 0.1, 1.0};
    const CommHamiltonian h = to_commutative(s);
    const ModeBasis b = mode_basis(h, symplectic_eigenvalues(h));
    if (basis_out) *basis_out = b;
    return ground_state(b, h.hbar);
}
}  // namespace

TEST_CASE("quartic roots, pure imaginary pairs") {
    // z^4 + 5 z^2 + 4 = (z^2 + 1)(z^2 + 4)
    auto roots = oracle::quartic_roots({4.0, 0.0, 5.0, 0.0, 1.0});
    std::vector<double> im;
    for (auto r : roots) {
        CHECK(std::abs(r.real()) < 1e-12);
        im.push_back(r.imag());
    }
    std::sort(im.begin(), im.end());
    CHECK(im[0] == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(im[1] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(im[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(im[3] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("quartic roots, mixed real and imaginary") {
    // z^4 - 1 = (z - 1)(z + 1)(z - i)(z + i)
    auto roots = oracle::quartic_roots({-1.0, 0.0, 0.0, 0.0, 1.0});
    int real_hits = 0, imag_hits = 0;
    for (auto r : roots) {
        if (std::abs(r.imag()) < 1e-12) {
            CHECK(std::abs(std::abs(r.real()) - 1.0) < 1e-12);
            ++real_hits;
        } else {
            CHECK(std::abs(r.real()) < 1e-12);
            CHECK(std::abs(std::abs(r.imag()) - 1.0) < 1e-12);
            ++imag_hits;
        }
    }
    CHECK(real_hits == 2);
    CHECK(imag_hits == 2);
    CHECK_THROWS_AS(oracle::quartic_roots({1.0, 1.0, 0.0, 0.0, 0.0}), InvalidParameter);
}

TEST_CASE("Gauss-Hermite rule integrates monomials") {
    std::vector<double> x, w;
    oracle::gauss_hermite_rule(12, x, w);
    double m0 = 0.0, m2 = 0.0, m4 = 0.0, m1 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        m0 += w[i];
        m1 += w[i] * x[i];
        m2 += w[i] * x[i] * x[i];
        m4 += w[i] * std::pow(x[i], 4);
    }
    const double sp = std::sqrt(M_PI);
    CHECK(m0 == doctest::Approx(sp).epsilon(1e-13));
    CHECK(std::abs(m1) < 1e-13);
    CHECK(m2 == doctest::Approx(sp / 2.0).epsilon(1e-13));
    CHECK(m4 == doctest::Approx(3.0 * sp / 4.0).epsilon(1e-13));
}

TEST_CASE("quadrature second moments match the closed-form covariance") {
    const GaussianGroundState st = reference_state();
    const WignerGaussian w = wigner_from_state(st);
    double mass = 0.0;
    const Eigen::Matrix4d moments = oracle::gauss_hermite_moments(w, 32, &mass);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
    const CovarianceMatrix v = covariance(st);
    CHECK((moments - v.V).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("grid annihilation residual is small for the true ground state") {
    ModeBasis b;
    const GaussianGroundState st = reference_state(&b);
    CHECK(oracle::grid_annihilation_residual(st, b, 128, 5.0, 6) < 1e-6);
}

TEST_CASE("low-order stencil converges at second order") {
    ModeBasis b;
    const GaussianGroundState st = reference_state(&b);
    const double r128 = oracle::grid_annihilation_residual(st, b, 128, 5.0, 2);
    const double r256 = oracle::grid_annihilation_residual(st, b, 256, 5.0, 2);
    CHECK(r128 / r256 == doctest::Approx(4.0).epsilon(0.15));
    CHECK_THROWS_AS(oracle::grid_annihilation_residual(st, b, 64, 5.0, 3), InvalidParameter);
}

TEST_CASE("corrupted state is rejected by the annihilation residual") {
    ModeBasis b;
    GaussianGroundState st = reference_state(&b);
    st.Lambda(0, 0) *= 1.01;  // 1 percent corruption
    CHECK(oracle::grid_annihilation_residual(st, b, 96, 4.0, 6) > 1e-3);
}

TEST_CASE("PPT mirror check on canonical states") {
    // vacuum: separable
    CovarianceMatrix vac;
    vac.hbar = 1.0;
    vac.V = 0.5 * Eigen::Matrix4d::Identity();
    CHECK(oracle::ppt_symplectic_check(vac).separable);

    // two-mode squeezed vacuum: entangled for r > 0
    const double r = 0.6, c = std::cosh(2.0 * r), s = std::sinh(2.0 * r);
    CovarianceMatrix tms;
    tms.hbar = 1.0;
    tms.V << c, 0, s, 0,
             0, c, 0, -s,
             s, 0, c, 0,
             0, -s, 0, c;
    tms.V *= 0.5;
    const auto res = oracle::ppt_symplectic_check(tms);
    CHECK_FALSE(res.separable);
    CHECK(res.min_sympl < 0.5);
}

TEST_CASE("block-inverse covariance agrees on random states") {
    std::mt19937 rng(31);
    for (int i = 0; i < 15; ++i) {
        const CommHamiltonian h = to_commutative(random_valid_spec(rng));
        const GaussianGroundState st =
            ground_state(mode_basis(h, symplectic_eigenvalues(h)), h.hbar);
        const CovarianceMatrix v = covariance(st);
        const CovarianceMatrix vo = oracle::covariance_via_inverse(wigner_from_state(st));
        CHECK((v.V - vo.V).cwiseAbs().maxCoeff() < 1e-12);
    }
}

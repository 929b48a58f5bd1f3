#pragma once

#include <complex>

#include <Eigen/Dense>

#include "ncphase/symplectic_modes.hpp"

namespace ncphase {

// Bipartite Gaussian ground state psi(x) = N0 exp(-x^T Lambda x / 2),
// Lambda the symmetrized 2x2 complex matrix. Re(Lambda) positive definite
// is required for normalizability.
struct GaussianGroundState {
    Eigen::Matrix2cd Lambda;
    double hbar = 1.0;
    double norm = 0.0;  // N0 = Det(Lambda_r)^{1/4} / sqrt(pi)

    Eigen::Matrix2d lambda_r() const { return Lambda.real(); }
    Eigen::Matrix2d lambda_c() const { return Lambda.imag(); }
    double lambda11r() const { return Lambda(0, 0).real(); }
    double lambda22r() const { return Lambda(1, 1).real(); }
    double lambda12c() const { return Lambda(0, 1).imag(); }
};

// Solves the annihilation conditions: Lambda_s = (i/hbar) Up^{-1} Ux.
GaussianGroundState ground_state(const ModeBasis& basis, double hbar);

// N0 for a given real part of Lambda; throws NotNormalizable unless SPD.
double normalization(const Eigen::Matrix2d& lambda_r);

std::complex<double> evaluate_psi(const GaussianGroundState& state, double x1, double x2);

// The printed closed forms for Lambda in terms of kappa_{ij}; valid in the
// coupled regime only. l12c_alt is the second printed route to the same
// off-diagonal; the two must agree.
struct LambdaClosedForm {
    double l11, l22, l12c, l12c_alt;
};

LambdaClosedForm lambda_closed_form(const ModeBasis& basis, double hbar);

// Convenience constructor used by the TD module and tests.
GaussianGroundState make_state(const Eigen::Matrix2cd& lambda_sym, double hbar);

}  // namespace ncphase

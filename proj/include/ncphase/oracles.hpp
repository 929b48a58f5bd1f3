#pragma once

#include <array>
#include <complex>

#include "ncphase/covariance_wigner.hpp"

// Independent brute-force verification paths. Nothing here shares code with
// the closed-form routes it checks.

namespace ncphase::oracle {

// Coefficients c[0] + c[1] z + ... + c[4] z^4, c[4] != 0.
using QuarticPoly = std::array<double, 5>;

// Durand-Kerner simultaneous iteration.
std::array<std::complex<double>, 4> quartic_roots(const QuarticPoly& p);

// Gauss-Hermite nodes/weights for weight exp(-x^2) (Golub-Welsch).
void gauss_hermite_rule(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Second moments of the Wigner Gaussian by tensorized quadrature after
// principal-axis rotation; returned in the (x1, p1, x2, p2) ordering.
// norm_out, when given, receives the quadrature value of the integral of W.
Eigen::Matrix4d gauss_hermite_moments(const WignerGaussian& w, int nodes_per_axis = 32,
                                      double* norm_out = nullptr);

// Max-norm of the two annihilation residuals (Ux x - i hbar Up d_x) psi on a
// uniform n x n grid covering +-width standard deviations per axis, with a
// centered finite-difference stencil of the given order (2, 4 or 6).
double grid_annihilation_residual(const GaussianGroundState& state, const ModeBasis& basis,
                                  int n = 128, double width = 5.0, int order = 6);

struct PPTResult {
    double min_sympl;  // smallest symplectic eigenvalue of the mirrored V
    bool separable;    // min_sympl >= hbar/2 - 1e-10
};

// Mirror reflection p2 -> -p2, then symplectic eigenvalues of J * (P V P).
PPTResult ppt_symplectic_check(const CovarianceMatrix& v);

// Covariance through the partitioned block inverse of LambdaM (numeric),
// sigma = Lambda_m^{-1} / (2 hbar^2 sqrt(Det Lambda_m)), reordered.
CovarianceMatrix covariance_via_inverse(const WignerGaussian& w);

}  // namespace ncphase::oracle

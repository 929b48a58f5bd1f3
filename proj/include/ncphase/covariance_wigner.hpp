#pragma once

#include <Eigen/Dense>

#include "ncphase/gaussian_state.hpp"

namespace ncphase {

// Gaussian Wigner distribution W = (1/pi^2 hbar^2) exp(-Xt^T LambdaM Xt)
// in the (x1, x2, p1, p2) ordering.
struct WignerGaussian {
    Eigen::Matrix4d LambdaM;
    double hbar = 1.0;

    Eigen::Matrix2d block1() const { return LambdaM.block<2, 2>(0, 0); }
    Eigen::Matrix2d block2() const { return LambdaM.block<2, 2>(2, 2); }
    Eigen::Matrix2d block12() const { return LambdaM.block<2, 2>(0, 2); }
};

// Noise matrix in the (x1, p1, x2, p2) ordering.
struct CovarianceMatrix {
    Eigen::Matrix4d V;
    double hbar = 1.0;

    Eigen::Matrix2d v11() const { return V.block<2, 2>(0, 0); }
    Eigen::Matrix2d v22() const { return V.block<2, 2>(2, 2); }
    Eigen::Matrix2d v12() const { return V.block<2, 2>(0, 2); }
};

// Permutation with X_c = S Xt: maps (x1,x2,p1,p2) to (x1,p1,x2,p2).
Eigen::Matrix4d reorder_xxpp_to_xpxp();

WignerGaussian wigner_from_state(const GaussianGroundState& state);

// Closed-form covariance. Uses the printed sigma_ij expressions when the
// diagonal of Lambda is real (time-independent anisotropic family) and the
// general Lambda_r/Lambda_c block expression otherwise.
CovarianceMatrix covariance(const GaussianGroundState& state);

// V_nc = Upsilon_D V Upsilon_D^T.
Eigen::Matrix4d nc_covariance(const CovarianceMatrix& v, const NCParams& nc);

// Smallest eigenvalue of the Hermitian matrix V + (i hbar/2) J; >= ~0 for
// physical states.
double rsup_check(const Eigen::Matrix4d& v, double hbar, const Eigen::Matrix4d& j);

}  // namespace ncphase

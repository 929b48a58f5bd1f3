#include "ncphase/covariance_wigner.hpp"

namespace ncphase {

Eigen::Matrix4d reorder_xxpp_to_xpxp() {
    Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
    s(0, 0) = 1.0;  // x1
    s(1, 2) = 1.0;  // p1
    s(2, 1) = 1.0;  // x2
    s(3, 3) = 1.0;  // p2
    return s;
}

WignerGaussian wigner_from_state(const GaussianGroundState& state) {
    const Eigen::Matrix2d lr = state.lambda_r();
    const Eigen::Matrix2d lc = state.lambda_c();
    if (!(lr(0, 0) > 0.0) || !(lr.determinant() > 0.0))
        throw NotNormalizable("wigner_from_state: Re(Lambda) is not positive definite");
    const Eigen::Matrix2d lri = lr.inverse();
    const double h2 = state.hbar * state.hbar;
    WignerGaussian w;
    w.hbar = state.hbar;
    w.LambdaM.block<2, 2>(0, 0) = lr + lc * lri * lc.transpose();
    w.LambdaM.block<2, 2>(2, 2) = lri / h2;
    const Eigen::Matrix2d l12 = lc * lri / state.hbar;
    w.LambdaM.block<2, 2>(0, 2) = l12;
    w.LambdaM.block<2, 2>(2, 0) = l12.transpose();
    return w;
}

CovarianceMatrix covariance(const GaussianGroundState& state) {
    const double hb = state.hbar;
    const double l11r = state.lambda11r();
    const double l22r = state.lambda22r();
    if (!(l11r > 0.0) || !(l22r > 0.0))
        throw NotNormalizable("covariance: Re(Lambda) diagonal must be positive");

    const double scale = std::abs(state.Lambda(0, 0)) + std::abs(state.Lambda(1, 1));
    const double im_diag = std::abs(state.Lambda(0, 0).imag()) + std::abs(state.Lambda(1, 1).imag());
    CovarianceMatrix v;
    v.hbar = hb;

    if (im_diag <= 1e-12 * scale) {
        // Printed sigma_ij closed forms (Lambda diagonal real, off-diagonal
        // purely imaginary).
        const double l12c = state.lambda12c();
        const double dl = l11r * l22r + l12c * l12c;
        Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
        s(0, 0) = 1.0 / (hb * l11r);
        s(1, 1) = hb * dl / l22r;
        s(2, 2) = 1.0 / (hb * l22r);
        s(3, 3) = hb * dl / l11r;
        s(0, 3) = s(3, 0) = -l12c / l11r;
        s(1, 2) = s(2, 1) = -l12c / l22r;
        v.V = (hb / 2.0) * s;
        return v;
    }

    // General complex Lambda (TD states): simplified inverse of LambdaM,
    // sigma_cov = (hbar^2/2) [[L2, -L12^T], [-L12, L1]] in (x1,x2,p1,p2).
    const WignerGaussian w = wigner_from_state(state);
    const double h2 = hb * hb;
    Eigen::Matrix4d sig;
    sig.block<2, 2>(0, 0) = w.block2();
    sig.block<2, 2>(2, 2) = w.block1();
    sig.block<2, 2>(0, 2) = -w.block12().transpose();
    sig.block<2, 2>(2, 0) = -w.block12();
    sig *= h2 / 2.0;
    const Eigen::Matrix4d s = reorder_xxpp_to_xpxp();
    v.V = s * sig * s.transpose();
    return v;
}

Eigen::Matrix4d nc_covariance(const CovarianceMatrix& v, const NCParams& nc) {
    const Eigen::Matrix4d u = darboux_map(nc);
    return u * v.V * u.transpose();
}

double rsup_check(const Eigen::Matrix4d& v, double hbar, const Eigen::Matrix4d& j) {
    Eigen::Matrix4cd m = v.cast<std::complex<double>>() +
                         std::complex<double>(0.0, hbar / 2.0) * j.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m);
    return es.eigenvalues().minCoeff();
}

}  // namespace ncphase

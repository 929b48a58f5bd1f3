#include "ncphase/gaussian_state.hpp"

#include <cmath>
#include <numbers>

namespace ncphase {

using cd = std::complex<double>;

double normalization(const Eigen::Matrix2d& lambda_r) {
    const double det = lambda_r.determinant();
    if (!(lambda_r(0, 0) > 0.0) || !(det > 0.0))
        throw NotNormalizable("normalization: Re(Lambda) is not positive definite");
    return std::pow(det, 0.25) / std::sqrt(std::numbers::pi);
}

GaussianGroundState make_state(const Eigen::Matrix2cd& lambda_sym, double hbar) {
    GaussianGroundState st;
    st.Lambda = lambda_sym;
    st.hbar = hbar;
    st.norm = normalization(lambda_sym.real());
    return st;
}

GaussianGroundState ground_state(const ModeBasis& basis, double hbar) {
    const cd det_up = basis.Up.determinant();
    // Scale reference: Up rows are normalized, entries O(1).
    if (std::abs(det_up) < 1e-12 * basis.Up.cwiseAbs().maxCoeff())
        throw SingularUp("ground_state: Det(Up) ~ 0");
    const cd i_over_h{0.0, 1.0 / hbar};
    Eigen::Matrix2cd lam = i_over_h * basis.Up.inverse() * basis.Ux;
    const cd off = (lam(0, 1) + lam(1, 0)) / 2.0;
    lam(0, 1) = off;
    lam(1, 0) = off;
    return make_state(lam, hbar);
}

std::complex<double> evaluate_psi(const GaussianGroundState& state, double x1, double x2) {
    const Eigen::Vector2cd x{cd(x1), cd(x2)};
    const cd q = (x.transpose() * state.Lambda * x)(0);
    return state.norm * std::exp(-0.5 * q);
}

LambdaClosedForm lambda_closed_form(const ModeBasis& basis, double hbar) {
    if (basis.decoupled)
        throw InvalidParameter("lambda_closed_form: decoupled basis has no kappa entries");
    const auto& kp = basis.kappa;
    // kp(j, i-1) = kappa_{i,j+1}
    const double k11 = kp(0, 0), k21 = kp(0, 1), k31 = kp(0, 2), k41 = kp(0, 3);
    const double k12 = kp(1, 0), k22 = kp(1, 1), k32 = kp(1, 2), k42 = kp(1, 3);
    const double den = hbar * (k21 * k42 - k22 * k41);
    LambdaClosedForm f;
    f.l11 = (k41 * k12 - k42 * k11) / den;
    f.l22 = (k21 * k32 - k22 * k31) / den;
    f.l12c = (k42 * k31 - k41 * k32) / den;
    f.l12c_alt = (k12 * k21 - k22 * k11) / den;
    return f;
}

}  // namespace ncphase

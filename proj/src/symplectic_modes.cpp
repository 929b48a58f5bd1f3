#include "ncphase/symplectic_modes.hpp"

#include <cmath>

namespace ncphase {

using cd = std::complex<double>;
static constexpr cd kI{0.0, 1.0};

Eigen::Matrix4d quadratic_form(const CommHamiltonian& h) {
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 0) = h.alpha1;        // mu1 w1^2
    m(1, 1) = 1.0 / h.mu1;
    m(2, 2) = h.alpha2;
    m(3, 3) = 1.0 / h.mu2;
    Eigen::Matrix2d c;
    c << 0.0, -2.0 * h.nu2, 2.0 * h.nu1, 0.0;
    m.block<2, 2>(0, 2) = c;
    m.block<2, 2>(2, 0) = c.transpose();
    return m;
}

Eigen::Matrix4d build_omega(const CommHamiltonian& h) {
    return symplectic_j() * quadratic_form(h);
}

ModeSpectrum symplectic_eigenvalues(const CommHamiltonian& h) {
    const double w1s = h.alpha1 / h.mu1;
    const double w2s = h.alpha2 / h.mu2;
    ModeSpectrum s;
    s.Delta = w1s + w2s + 8.0 * h.nu1 * h.nu2;
    s.DeltaOmega = build_omega(h).determinant();
    const double disc = s.Delta * s.Delta - 4.0 * s.DeltaOmega;
    if (disc <= 0.0)
        throw DegenerateSpectrum("symplectic_eigenvalues: Delta^2 - 4 DeltaOmega <= 0");
    s.D = std::sqrt(disc);
    if (s.D < 1e-9 * s.Delta)
        throw DegenerateSpectrum("symplectic_eigenvalues: near-degenerate spectrum (D ~ 0)");
    const double l1s = (s.Delta - s.D) / 2.0;
    const double l2s = (s.Delta + s.D) / 2.0;
    if (l1s <= 0.0)
        throw DegenerateSpectrum("symplectic_eigenvalues: lambda1^2 <= 0 (unstable quadratic form)");
    s.lambda1 = std::sqrt(l1s);
    s.lambda2 = std::sqrt(l2s);
    return s;
}

namespace {

// Left eigenvector row for eigenvalue -i lambda_j, coupled regime.
Eigen::Vector4d kappa_entries(const CommHamiltonian& h, double lj) {
    const double w1s = h.alpha1 / h.mu1;
    const double w2s = h.alpha2 / h.mu2;
    const double ljs = lj * lj;
    Eigen::Vector4d kp;
    kp(0) = -2.0 * h.mu1 * lj * (h.mu1 * h.nu1 * w1s + h.mu2 * h.nu2 * w2s);
    kp(1) = 2.0 * (h.mu2 * h.nu2 * w2s - 4.0 * h.mu1 * h.nu1 * h.nu1 * h.nu2 + h.mu1 * h.nu1 * ljs);
    kp(2) = h.mu1 * (4.0 * h.mu1 * h.nu1 * h.nu1 * w1s - h.mu2 * w1s * w2s + h.mu2 * w2s * ljs);
    kp(3) = -h.mu1 * lj * (w1s + 4.0 * h.nu1 * h.nu2 - ljs);
    return kp;
}

Eigen::Vector4cd left_row(const Eigen::Vector4d& kp, double k) {
    Eigen::Vector4cd chi;
    chi << kI * kp(0), cd(kp(1)), cd(kp(2)), kI * kp(3);
    return k * chi;
}

// chi_r = -Sigma_y chi_l^dagger with Sigma_y = diag(sigma_y, sigma_y).
Eigen::Vector4cd right_col(const Eigen::Vector4cd& chi_l) {
    Eigen::Vector4cd c = chi_l.conjugate();
    Eigen::Vector4cd r;
    r(0) = kI * c(1);
    r(1) = -kI * c(0);
    r(2) = kI * c(3);
    r(3) = -kI * c(2);
    return r;
}

void assemble(ModeBasis& b, const Eigen::Vector4cd& chi1, const Eigen::Vector4cd& chi2) {
    b.Qinv.row(0) = chi1;
    b.Qinv.row(1) = chi1.conjugate();
    b.Qinv.row(2) = chi2;
    b.Qinv.row(3) = chi2.conjugate();
    const Eigen::Vector4cd r1 = right_col(chi1);
    const Eigen::Vector4cd r2 = right_col(chi2);
    b.Q.col(0) = r1;
    b.Q.col(1) = r1.conjugate();
    b.Q.col(2) = r2;
    b.Q.col(3) = r2.conjugate();
    b.Ux << chi1(0), chi1(2), chi2(0), chi2(2);
    b.Up << chi1(1), chi1(3), chi2(1), chi2(3);
}

}  // namespace

ModeBasis mode_basis(const CommHamiltonian& h, const ModeSpectrum& s) {
    ModeBasis b;
    if (std::abs(h.nu1) < kDecoupledTol && std::abs(h.nu2) < kDecoupledTol) {
        // Per-mode ladder coefficients a_j ~ sqrt(mu_j w_j / 2) x_j + i p_j / sqrt(2 mu_j w_j).
        b.decoupled = true;
        b.kappa.setZero();
        b.k.setZero();
        const double w1 = h.omega1(), w2 = h.omega2();
        Eigen::Vector4cd chi1 = Eigen::Vector4cd::Zero();
        Eigen::Vector4cd chi2 = Eigen::Vector4cd::Zero();
        chi1(0) = std::sqrt(h.mu1 * w1 / 2.0);
        chi1(1) = kI / std::sqrt(2.0 * h.mu1 * w1);
        chi2(2) = std::sqrt(h.mu2 * w2 / 2.0);
        chi2(3) = kI / std::sqrt(2.0 * h.mu2 * w2);
        assemble(b, chi1, chi2);
        return b;
    }

    const double lams[2] = {s.lambda1, s.lambda2};
    Eigen::Vector4cd rows[2];
    for (int j = 0; j < 2; ++j) {
        const Eigen::Vector4d kp = kappa_entries(h, lams[j]);
        const double rad = 2.0 * (kp(2) * kp(3) - kp(0) * kp(1));
        if (!(rad > 0.0))
            throw NormalizationFailure("mode_basis: kappa3 kappa4 - kappa1 kappa2 <= 0");
        b.kappa.row(j) = kp;
        b.k(j) = 1.0 / std::sqrt(rad);
        rows[j] = left_row(kp, b.k(j));
    }
    assemble(b, rows[0], rows[1]);
    return b;
}

}  // namespace ncphase

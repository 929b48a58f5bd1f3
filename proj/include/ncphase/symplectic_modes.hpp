#pragma once

#include <complex>

#include <Eigen/Dense>

#include "ncphase/hamiltonian_map.hpp"

namespace ncphase {

// Quadratic form Hhat with H = (1/2) X^T Hhat X (no 1/2 folded in):
// blocks diag(mu1 w1^2, 1/mu1), diag(mu2 w2^2, 1/mu2) and off-diagonal
// coupling 2 [[0, -nu2], [nu1, 0]].
Eigen::Matrix4d quadratic_form(const CommHamiltonian& h);

// Omega = J * Hhat; its eigenvalues are +-i lambda_j.
Eigen::Matrix4d build_omega(const CommHamiltonian& h);

struct ModeSpectrum {
    double lambda1, lambda2;  // lambda1 <= lambda2, both > 0
    double Delta;             // trace invariant, Det A + Det B + 2 Det C
    double DeltaOmega;        // Det(Omega)
    double D;                 // sqrt(Delta^2 - 4 DeltaOmega)
};

// Closed-form modal frequencies lambda_{1,2} = sqrt((Delta -+ D)/2).
// Throws DegenerateSpectrum when D < 1e-9 * Delta (commutative isotropic
// locus; closed-form eigenvectors degenerate there).
ModeSpectrum symplectic_eigenvalues(const CommHamiltonian& h);

// Diagonalizing basis: Qinv rows are the left eigenvectors
// (chi_1, chi_1^*, chi_2, chi_2^*), Q columns the matching right
// eigenvectors, so Qinv Omega Q = diag(-i l1, i l1, -i l2, i l2).
// Ux/Up are the 2x2 blocks of the annihilation conditions
// (Ux x - i hbar Up d_x) psi = 0.
struct ModeBasis {
    Eigen::Matrix<double, 2, 4> kappa;  // kappa_{ij}, row j = mode, col i-1
    Eigen::Vector2d k;                  // normalizers, real positive
    Eigen::Matrix4cd Q, Qinv;
    Eigen::Matrix2cd Ux, Up;
    bool decoupled = false;             // analytic fallback basis (nu1 = nu2 = 0)
};

// Tolerance below which nu1 = nu2 = 0 triggers the decoupled fallback
// (closed-form kappas vanish identically for mode 1 at nu = 0).
inline constexpr double kDecoupledTol = 1e-14;

ModeBasis mode_basis(const CommHamiltonian& h, const ModeSpectrum& s);

}  // namespace ncphase

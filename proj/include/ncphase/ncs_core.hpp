#pragma once

#include <Eigen/Dense>

#include "ncphase/errors.hpp"

// Phase-space conventions. Coordinate ordering is (x1, p1, x2, p2)
// everywhere; the (x1, x2, p1, p2) ordering appears only inside the Wigner
// block algebra, with an explicit permutation.

namespace ncphase {

struct NCParams {
    double theta = 0.0;  // position-position scale
    double eta = 0.0;    // momentum-momentum scale
    double hbar = 1.0;

    void validate() const {
        if (!(hbar > 0.0)) throw InvalidParameter("NCParams: hbar must be > 0");
        if (theta < 0.0 || eta < 0.0)
            throw InvalidParameter("NCParams: theta, eta must be >= 0");
        if (theta >= hbar || eta >= hbar)
            throw InvalidParameter("NCParams: physical regime requires theta < hbar and eta < hbar");
    }
};

// hbar (1 + theta*eta / 4 hbar^2)
double effective_planck(const NCParams& nc);

// J = diag(J2, J2), J2 = [[0,1],[-1,0]]
Eigen::Matrix4d symplectic_j();

// Deformed symplectic matrix: diagonal blocks J2, off-diagonal +-Pi/hbar_e
// with Pi = diag(theta, eta).
Eigen::Matrix4d deformed_j(const NCParams& nc);

// Bopp-shift map Upsilon_D with X_nc = Upsilon_D X, in (x1,p1,x2,p2) ordering.
Eigen::Matrix4d darboux_map(const NCParams& nc);

// Max-entry norm of hbar_e * Jtilde - hbar * Upsilon J Upsilon^T.
double verify_symplectic_relation(const NCParams& nc);

}  // namespace ncphase

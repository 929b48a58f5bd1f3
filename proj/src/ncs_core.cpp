#include "ncphase/ncs_core.hpp"

namespace ncphase {

double effective_planck(const NCParams& nc) {
    nc.validate();
    return nc.hbar * (1.0 + nc.theta * nc.eta / (4.0 * nc.hbar * nc.hbar));
}

Eigen::Matrix4d symplectic_j() {
    Eigen::Matrix4d j = Eigen::Matrix4d::Zero();
    j(0, 1) = 1.0; j(1, 0) = -1.0;
    j(2, 3) = 1.0; j(3, 2) = -1.0;
    return j;
}

Eigen::Matrix4d deformed_j(const NCParams& nc) {
    nc.validate();
    const double he = effective_planck(nc);
    Eigen::Matrix4d jt = symplectic_j();
    jt(0, 2) = nc.theta / he;
    jt(1, 3) = nc.eta / he;
    jt(2, 0) = -nc.theta / he;
    jt(3, 1) = -nc.eta / he;
    return jt;
}

Eigen::Matrix4d darboux_map(const NCParams& nc) {
    nc.validate();
    const double s = 1.0 / (2.0 * nc.hbar);
    // Pi J2 = [[0, theta], [-eta, 0]]
    Eigen::Matrix2d pij2;
    pij2 << 0.0, nc.theta, -nc.eta, 0.0;
    Eigen::Matrix4d u = Eigen::Matrix4d::Identity();
    u.block<2, 2>(0, 2) = -s * pij2;
    u.block<2, 2>(2, 0) = s * pij2;
    return u;
}

double verify_symplectic_relation(const NCParams& nc) {
    const Eigen::Matrix4d u = darboux_map(nc);
    const Eigen::Matrix4d lhs = effective_planck(nc) * deformed_j(nc);
    const Eigen::Matrix4d rhs = nc.hbar * u * symplectic_j() * u.transpose();
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace ncphase

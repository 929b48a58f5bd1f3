#include "ncphase/hamiltonian_map.hpp"

namespace ncphase {

CommHamiltonian to_commutative(const NCOscillatorSpec& spec) {
    spec.validate();
    const double th = spec.nc.theta, et = spec.nc.eta, hb = spec.nc.hbar;
    const double hb2 = hb * hb;
    const double m1 = spec.m1, m2 = spec.m2;
    const double w1s = spec.w1t * spec.w1t, w2s = spec.w2t * spec.w2t;

    CommHamiltonian h;
    h.mu1 = 1.0 / (1.0 / m1 + m2 * w2s * th * th / (4.0 * hb2));
    h.mu2 = 1.0 / (1.0 / m2 + m1 * w1s * th * th / (4.0 * hb2));
    h.alpha1 = m1 * w1s + et * et / (4.0 * hb2 * m2);
    h.alpha2 = m2 * w2s + et * et / (4.0 * hb2 * m1);
    h.nu1 = (et + m1 * m2 * w2s * th) / (4.0 * m1 * hb);
    h.nu2 = (et + m1 * m2 * w1s * th) / (4.0 * m2 * hb);
    h.hbar = hb;
    return h;
}

IsotropicComm isotropic_commutative(double m, double k, const NCParams& nc) {
    nc.validate();
    if (!(m > 0.0)) throw InvalidParameter("isotropic_commutative: m must be > 0");
    if (k < 0.0) throw InvalidParameter("isotropic_commutative: k must be >= 0");
    const double hb = nc.hbar, hb2 = hb * hb;
    IsotropicComm c;
    c.mu0 = 1.0 / (1.0 / m + k * nc.theta * nc.theta / (4.0 * hb2));
    c.alpha = k + nc.eta * nc.eta / (4.0 * m * hb2);
    c.nu = nc.eta / (4.0 * m * hb) + k * nc.theta / (4.0 * hb);
    return c;
}

}  // namespace ncphase

#include "ncphase/separability.hpp"

#include <cmath>

namespace ncphase {

namespace {
const Eigen::Matrix2d kJ2 = (Eigen::Matrix2d() << 0.0, 1.0, -1.0, 0.0).finished();
}

LocalInvariants local_invariants(const CovarianceMatrix& v) {
    LocalInvariants inv;
    inv.Delta1 = v.v11().determinant();
    inv.Delta2 = v.v22().determinant();
    inv.Delta12 = v.v12().determinant();
    inv.tau_v = (v.v11() * kJ2 * v.v12() * kJ2 * v.v22() * kJ2 * v.v12().transpose() * kJ2).trace();
    return inv;
}

double simon_ps(const CovarianceMatrix& v) {
    const LocalInvariants i = local_invariants(v);
    const double q = v.hbar * v.hbar / 4.0;
    return i.Delta1 * i.Delta2 + (q - std::abs(i.Delta12)) * (q - std::abs(i.Delta12)) -
           i.tau_v - q * (i.Delta1 + i.Delta2);
}

double sep1_residual(const NCOscillatorSpec& spec) {
    spec.validate();
    const double m12 = spec.m1 * spec.m2;
    const double th = spec.nc.theta, et = spec.nc.eta;
    const double hb2 = spec.nc.hbar * spec.nc.hbar;
    const double w1s = spec.w1t * spec.w1t, w2s = spec.w2t * spec.w2t;
    auto side = [&](double wa, double wb) {
        const double f1 = 4.0 * hb2 / m12 + wa * th * th;
        const double f2 = et / m12 + wb * th;
        const double f3 = et * et / m12 + 4.0 * hb2 * wa;
        return f1 * f2 * f2 * f3;
    };
    return side(w1s, w2s) - side(w2s, w1s);
}

SeparabilityReport classify(const CovarianceMatrix& v, const GaussianGroundState& state,
                            const ModeSpectrum& s) {
    SeparabilityReport r;
    r.lambda1 = s.lambda1;
    r.lambda2 = s.lambda2;
    r.inv = local_invariants(v);
    r.Ps = simon_ps(v);
    r.lambda12c = state.lambda12c();
    r.sep1 = 0.0;
    r.tolerance = 1e-10 * std::max(1.0, r.inv.Delta1 * r.inv.Delta2);
    r.verdict = r.Ps >= -r.tolerance ? Verdict::separable : Verdict::entangled;
    return r;
}

SeparabilityReport classify(const NCOscillatorSpec& spec) {
    const CommHamiltonian h = to_commutative(spec);
    const ModeSpectrum s = symplectic_eigenvalues(h);
    const ModeBasis b = mode_basis(h, s);
    const GaussianGroundState st = ground_state(b, h.hbar);
    const CovarianceMatrix v = covariance(st);
    SeparabilityReport r = classify(v, st, s);
    r.sep1 = sep1_residual(spec);
    return r;
}

}  // namespace ncphase

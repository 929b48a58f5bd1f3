#include "ncphase/selftest.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "ncphase/oracles.hpp"
#include "ncphase/sampling.hpp"
#include "ncphase/td_isotropic.hpp"

namespace ncphase {

namespace {

struct Battery {
    std::ostream& out;
    int failures = 0;

    void check(const char* name, bool ok, double metric) {
        out << (ok ? "PASS" : "FAIL") << "  " << std::left << std::setw(40) << name
            << std::scientific << std::setprecision(3) << metric << "\n";
        if (!ok) ++failures;
    }
};

}  // namespace

int run_selftest(std::ostream& out, unsigned seed, bool mutate) {
    Battery b{out};
    std::mt19937 rng(seed);
    out << "selftest seed=" << seed << (mutate ? " (mutation mode)" : "") << "\n";

    {
        std::uniform_real_distribution<double> u(1e-3, 0.89);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i)
            worst = std::max(worst, verify_symplectic_relation({u(rng), u(rng), 1.0}));
        b.check("symplectic relation (Eq.5 grid)", worst < 1e-12, worst);
    }

    {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const CommHamiltonian h = to_commutative(random_valid_spec(rng));
            const ModeSpectrum s = symplectic_eigenvalues(h);
            const auto roots = oracle::quartic_roots({s.DeltaOmega, 0.0, s.Delta, 0.0, 1.0});
            for (const auto& r : roots) {
                const double lam = std::abs(r.imag());
                worst = std::max(worst, std::abs(r.real()));
                const double rel = std::min(std::abs(lam - s.lambda1) / s.lambda1,
                                            std::abs(lam - s.lambda2) / s.lambda2);
                worst = std::max(worst, rel);
            }
        }
        b.check("closed-form lambdas vs quartic roots", worst < 1e-10, worst);
    }

    {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const CommHamiltonian h = to_commutative(random_valid_spec(rng));
            const ModeSpectrum s = symplectic_eigenvalues(h);
            const ModeBasis mb = mode_basis(h, s);
            const Eigen::Matrix4cd om = build_omega(h).cast<std::complex<double>>();
            Eigen::Matrix4cd d = mb.Qinv * om * mb.Q;
            Eigen::Vector4cd expect;
            expect << std::complex<double>(0.0, -s.lambda1), std::complex<double>(0.0, s.lambda1),
                std::complex<double>(0.0, -s.lambda2), std::complex<double>(0.0, s.lambda2);
            d -= Eigen::Matrix4cd(expect.asDiagonal());
            worst = std::max(worst, d.cwiseAbs().maxCoeff());
            worst = std::max(worst, (mb.Qinv * mb.Q - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff());
        }
        b.check("mode basis diagonalizes Omega", worst < 1e-10, worst);
    }

    {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            const CommHamiltonian h = to_commutative(random_valid_spec(rng));
            const ModeSpectrum s = symplectic_eigenvalues(h);
            const ModeBasis mb = mode_basis(h, s);
            const GaussianGroundState st = ground_state(mb, h.hbar);
            const auto cf = lambda_closed_form(mb, h.hbar);
            worst = std::max({worst, std::abs(st.Lambda(0, 0).imag()),
                              std::abs(st.Lambda(1, 1).imag()),
                              std::abs(st.Lambda(0, 1).real()),
                              std::abs(cf.l12c - cf.l12c_alt),
                              std::abs(st.lambda11r() - cf.l11),
                              std::abs(st.lambda12c() - cf.l12c)});
        }
        b.check("Lambda structure and closed forms", worst < 1e-9, worst);
    }

    {
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const CommHamiltonian h = to_commutative(random_valid_spec(rng));
            const ModeSpectrum s = symplectic_eigenvalues(h);
            const GaussianGroundState st = ground_state(mode_basis(h, s), h.hbar);
            const WignerGaussian w = wigner_from_state(st);
            const double det = w.LambdaM.determinant();
            worst = std::max(worst, std::abs(det * std::pow(st.hbar, 4) - 1.0));

            CovarianceMatrix v = covariance(st);
            if (mutate) {
                // Negative control: flip the sign of the sigma12 block.
                v.V.block<2, 2>(0, 2) *= -1.0;
                v.V.block<2, 2>(2, 0) *= -1.0;
            }
            const CovarianceMatrix vo = oracle::covariance_via_inverse(w);
            worst = std::max(worst, (v.V - vo.V).cwiseAbs().maxCoeff());
        }
        b.check("Wigner det and covariance dual path", worst < 1e-10, worst);
    }

    {
        double worst_rsup = 0.0;
        bool agree = true;
        for (int i = 0; i < 50; ++i) {
            const NCOscillatorSpec spec = random_valid_spec(rng);
            const CommHamiltonian h = to_commutative(spec);
            const ModeSpectrum s = symplectic_eigenvalues(h);
            const GaussianGroundState st = ground_state(mode_basis(h, s), h.hbar);
            const CovarianceMatrix v = covariance(st);
            worst_rsup = std::min(worst_rsup, rsup_check(v.V, v.hbar, symplectic_j()));
            const Eigen::Matrix4d vnc = nc_covariance(v, spec.nc);
            worst_rsup = std::min(worst_rsup,
                                  rsup_check(vnc, effective_planck(spec.nc), deformed_j(spec.nc)));
            const double ps = simon_ps(v);
            const auto ppt = oracle::ppt_symplectic_check(v);
            const bool sep = ps >= -1e-10;
            if (std::abs(ps) > 1e-10 && sep != ppt.separable) agree = false;
        }
        b.check("RSUP (commutative and NC)", worst_rsup > -1e-10, worst_rsup);
        b.check("Simon verdict vs PPT oracle", agree, agree ? 0.0 : 1.0);
    }

    {
        IsotropicTDParams p;
        p.mu0 = [](double) { return 1.0; };
        p.alpha = [](double t) { return 1.2 * (1.0 + 0.1 * std::sin(1.7 * t)); };
        p.nu = [](double) { return 0.1; };
        p.kappa = 1.0;
        p.hbar = 1.0;
        const double s0 = equilibrium_sigma(p);
        const EPTrajectory traj = integrate_ep(p, s0, 0.0, 20.0, 1e-3);
        const double drift = traj.max_drift();
        double worst_ps = 0.0;
        for (std::size_t i = 0; i < traj.nodes.size(); i += 997) {
            const GaussianGroundState st = td_ground_state(traj.nodes[i], p);
            worst_ps = std::max(worst_ps, std::abs(simon_ps(covariance(st))));
        }
        b.check("EP invariant drift (driven run)", drift < 1e-8, drift);
        b.check("TD isotropic Ps stays zero", worst_ps < 1e-8, worst_ps);
    }

    out << (b.failures == 0 ? "all checks passed" : "FAILURES detected") << "\n";
    return b.failures == 0 ? 0 : 1;
}

}  // namespace ncphase

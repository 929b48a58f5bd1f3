#pragma once

#include <cmath>

#include "ncphase/ncs_core.hpp"

namespace ncphase {

// Anisotropic oscillator in NC space: masses m1, m2 and frequencies
// omega1_nc, omega2_nc, plus the noncommutativity scales.
struct NCOscillatorSpec {
    double m1 = 1.0, m2 = 1.0;
    double w1t = 1.0, w2t = 1.0;
    NCParams nc;

    void validate() const {
        nc.validate();
        if (!(m1 > 0.0) || !(m2 > 0.0))
            throw InvalidParameter("NCOscillatorSpec: masses must be > 0");
        if (w1t < 0.0 || w2t < 0.0)
            throw InvalidParameter("NCOscillatorSpec: frequencies must be >= 0");
        if (w1t == 0.0 && w2t == 0.0)
            throw InvalidParameter("NCOscillatorSpec: at least one frequency must be nonzero");
    }
};

// Commutative-space quadratic Hamiltonian
//   H = p1^2/2mu1 + p2^2/2mu2 + mu1 w1^2 x1^2/2 + mu2 w2^2 x2^2/2
//       + nu1 {x2,p1} - nu2 {x1,p2}.
// omega_j is derived from alpha_j = mu_j omega_j^2, never stored.
struct CommHamiltonian {
    double mu1, mu2;
    double alpha1, alpha2;
    double nu1, nu2;
    double hbar;

    double omega1() const { return std::sqrt(alpha1 / mu1); }
    double omega2() const { return std::sqrt(alpha2 / mu2); }
};

CommHamiltonian to_commutative(const NCOscillatorSpec& spec);

struct IsotropicComm {
    double mu0, alpha, nu;
};

IsotropicComm isotropic_commutative(double m, double k, const NCParams& nc);

}  // namespace ncphase

#pragma once

#include <random>

#include "ncphase/separability.hpp"

namespace ncphase {

// Random valid anisotropic NC oscillator specs for property tests and the
// self-test battery. Rejects near-degenerate spectra and states whose mode
// basis fails to normalize.
inline NCOscillatorSpec random_valid_spec(std::mt19937& rng) {
    std::uniform_real_distribution<double> mass(0.5, 2.0);
    std::uniform_real_distribution<double> freq(0.5, 2.5);
    std::uniform_real_distribution<double> ncp(0.01, 0.5);
    for (;;) {
        NCOscillatorSpec spec;
        spec.m1 = mass(rng);
        spec.m2 = mass(rng);
        spec.w1t = freq(rng);
        spec.w2t = freq(rng);
        spec.nc = {ncp(rng), ncp(rng), 1.0};
        if (std::abs(spec.w1t - spec.w2t) < 0.05) continue;
        try {
            const CommHamiltonian h = to_commutative(spec);
            const ModeSpectrum s = symplectic_eigenvalues(h);
            (void)ground_state(mode_basis(h, s), h.hbar);
        } catch (const std::runtime_error&) {
            continue;
        }
        return spec;
    }
}

}  // namespace ncphase

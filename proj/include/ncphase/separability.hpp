#pragma once

#include "ncphase/covariance_wigner.hpp"

namespace ncphase {

struct LocalInvariants {
    double Delta1, Delta2, Delta12;  // block determinants
    double tau_v;                    // Tr(V11 J2 V12 J2 V22 J2 V12^T J2)
};

LocalInvariants local_invariants(const CovarianceMatrix& v);

// Simon functional; >= 0 is necessary for separability and sufficient for
// bipartite Gaussian states.
double simon_ps(const CovarianceMatrix& v);

// LHS - RHS of the separability surface in the original NC parameters;
// zero residual marks the separable set (mu1 nu1 w1 = mu2 nu2 w2).
double sep1_residual(const NCOscillatorSpec& spec);

enum class Verdict { separable, entangled };

struct SeparabilityReport {
    double lambda1, lambda2;
    LocalInvariants inv;
    double Ps;
    double lambda12c;
    double sep1;
    Verdict verdict;
    double tolerance;
};

// Full pipeline: map -> modes -> state -> covariance -> Simon Ps.
SeparabilityReport classify(const NCOscillatorSpec& spec);

SeparabilityReport classify(const CovarianceMatrix& v, const GaussianGroundState& state,
                            const ModeSpectrum& s);

}  // namespace ncphase

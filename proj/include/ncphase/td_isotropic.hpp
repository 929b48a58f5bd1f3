#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ncphase/gaussian_state.hpp"
#include "ncphase/hamiltonian_map.hpp"

namespace ncphase {

// Time-dependent isotropic oscillator, scalar invariant class
//   I = a11 p^2 + b11 x^2 + c11 {x,p} + 2 l L,
// with a11 = sigma^2 driven by the Ermakov-Pinney equation.
struct IsotropicTDParams {
    std::function<double(double)> mu0;
    std::function<double(double)> alpha;
    std::function<double(double)> nu;
    std::function<double(double)> mu0dot;  // optional; central difference if empty
    double kappa = 1.0;
    double l = 0.0;
    double hbar = 1.0;

    void validate() const {
        if (!mu0 || !alpha || !nu) throw InvalidParameter("IsotropicTDParams: missing callables");
        if (!(kappa > 0.0)) throw InvalidParameter("IsotropicTDParams: kappa must be > 0");
        if (!(hbar > 0.0)) throw InvalidParameter("IsotropicTDParams: hbar must be > 0");
    }
};

struct EPNode {
    double t;
    double sigma, sigmadot;
    double a11, b11, c11;  // b11 closed from the constraint, exact
    double b11_ode;        // b11 integrated through its ODE
    double kappa_drift;    // |c11^2 - a11 b11_ode + kappa^2|
};

struct EPTrajectory {
    std::vector<EPNode> nodes;
    double kappa = 0.0;
    double dt = 0.0;

    double max_drift() const;
};

// Fixed-step RK4 with step-doubling error monitoring. sigma stays positive
// throughout or SigmaCollapse is thrown with the last good time.
EPTrajectory integrate_ep(const IsotropicTDParams& params, double sigma0, double sigmadot0,
                          double t_end, double dt);

// sigma at the fixed point of the EP equation for constant parameters.
double equilibrium_sigma(const IsotropicTDParams& params, double t = 0.0);

// Max finite-difference residuals of the consistency ODEs
//   adot = -2 c / mu0,  bdot = 2 alpha c,  cdot = alpha a - b / mu0
// over interior nodes (centered differences).
struct ConsistencyResiduals {
    double adot, bdot, cdot;
};
ConsistencyResiduals consistency_residuals(const EPTrajectory& traj, const IsotropicTDParams& params);

// Lambda11 = Lambda22 = (kappa - i mu0 sigma sigmadot) / (hbar sigma^2),
// off-diagonal zero.
GaussianGroundState td_ground_state(const EPNode& node, const IsotropicTDParams& params);

// (kappa - l, kappa + l); requires kappa > |l|.
std::pair<double, double> invariant_spectrum(double kappa, double l);

// Max |psi00(x1,x2) - psi0(x1) psi0(x2)| over an n x n grid covering
// +-width standard deviations.
double factorization_check(const GaussianGroundState& state, int n = 64, double width = 4.0);

// Tabulated parameters: header line, then uniform rows "t mu0 alpha nu";
// cubic (Catmull-Rom) interpolation between samples.
IsotropicTDParams params_from_table(const std::string& path, double kappa, double l, double hbar);

}  // namespace ncphase

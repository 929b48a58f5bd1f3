#include "ncphase/td_isotropic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ncphase {

namespace {

// State y = (sigma, sigmadot, b11_ode).
using State = std::array<double, 3>;

struct EPRhs {
    const IsotropicTDParams& p;

    double mu0dot(double t) const {
        if (p.mu0dot) return p.mu0dot(t);
        const double h = 6e-6 * std::max(1.0, std::abs(t));
        return (p.mu0(t + h) - p.mu0(t - h)) / (2.0 * h);
    }

    State operator()(double t, const State& y) const {
        const double sg = y[0], sd = y[1];
        if (!(sg > 1e-10))
            throw SigmaCollapse("integrate_ep: sigma collapsed toward zero", t);
        const double mu = p.mu0(t);
        const double al = p.alpha(t);
        const double k2 = p.kappa * p.kappa;
        State d;
        d[0] = sd;
        d[1] = -mu0dot(t) / mu * sd - al / mu * sg + k2 / (mu * mu * sg * sg * sg);
        d[2] = -2.0 * al * mu * sg * sd;  // bdot = 2 alpha c, c = -mu0 sigma sigmadot
        return d;
    }
};

State rk4_step(const EPRhs& f, double t, const State& y, double h) {
    auto axpy = [](const State& a, const State& b, double s) {
        return State{a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]};
    };
    const State k1 = f(t, y);
    const State k2 = f(t + h / 2, axpy(y, k1, h / 2));
    const State k3 = f(t + h / 2, axpy(y, k2, h / 2));
    const State k4 = f(t + h, axpy(y, k3, h));
    State out = y;
    for (int i = 0; i < 3; ++i)
        out[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

EPNode make_node(double t, const State& y, const IsotropicTDParams& p) {
    EPNode n;
    n.t = t;
    n.sigma = y[0];
    n.sigmadot = y[1];
    n.a11 = y[0] * y[0];
    n.c11 = -p.mu0(t) * y[0] * y[1];
    n.b11 = (n.c11 * n.c11 + p.kappa * p.kappa) / n.a11;
    n.b11_ode = y[2];
    n.kappa_drift = std::abs(n.c11 * n.c11 - n.a11 * n.b11_ode + p.kappa * p.kappa);
    return n;
}

}  // namespace

double EPTrajectory::max_drift() const {
    double m = 0.0;
    for (const auto& n : nodes) m = std::max(m, n.kappa_drift);
    return m;
}

EPTrajectory integrate_ep(const IsotropicTDParams& params, double sigma0, double sigmadot0,
                          double t_end, double dt) {
    params.validate();
    if (!(sigma0 > 0.0)) throw InvalidParameter("integrate_ep: sigma0 must be > 0");
    if (!(dt > 0.0) || !(t_end > 0.0)) throw InvalidParameter("integrate_ep: dt, t_end must be > 0");

    const EPRhs f{params};
    const double c0 = -params.mu0(0.0) * sigma0 * sigmadot0;
    const double b0 = (c0 * c0 + params.kappa * params.kappa) / (sigma0 * sigma0);
    State y{sigma0, sigmadot0, b0};

    EPTrajectory traj;
    traj.kappa = params.kappa;
    traj.dt = dt;
    const std::size_t nsteps = static_cast<std::size_t>(std::llround(t_end / dt));
    traj.nodes.reserve(nsteps + 1);
    traj.nodes.push_back(make_node(0.0, y, params));

    for (std::size_t i = 0; i < nsteps; ++i) {
        const double t = static_cast<double>(i) * dt;
        const State full = rk4_step(f, t, y, dt);
        const State half = rk4_step(f, t + dt / 2, rk4_step(f, t, y, dt / 2), dt / 2);
        double err = 0.0;
        for (int j = 0; j < 3; ++j)
            err = std::max(err, std::abs(full[j] - half[j]) / 15.0 / std::max(1.0, std::abs(half[j])));
        if (err > 1e-4)
            throw StepRejection("integrate_ep: local error estimate exceeds tolerance; reduce dt");
        y = full;
        if (!(y[0] > 1e-10))
            throw SigmaCollapse("integrate_ep: sigma collapsed toward zero", t);
        traj.nodes.push_back(make_node(t + dt, y, params));
    }
    return traj;
}

double equilibrium_sigma(const IsotropicTDParams& params, double t) {
    params.validate();
    const double mu = params.mu0(t), al = params.alpha(t);
    if (!(al > 0.0)) throw InvalidParameter("equilibrium_sigma: alpha must be > 0");
    return std::pow(params.kappa * params.kappa / (mu * al), 0.25);
}

ConsistencyResiduals consistency_residuals(const EPTrajectory& traj, const IsotropicTDParams& params) {
    ConsistencyResiduals r{0.0, 0.0, 0.0};
    const double dt = traj.dt;
    for (std::size_t i = 1; i + 1 < traj.nodes.size(); ++i) {
        const auto& m = traj.nodes[i - 1];
        const auto& n = traj.nodes[i];
        const auto& p = traj.nodes[i + 1];
        const double mu = params.mu0(n.t), al = params.alpha(n.t);
        const double adot = (p.a11 - m.a11) / (2.0 * dt);
        const double bdot = (p.b11 - m.b11) / (2.0 * dt);
        const double cdot = (p.c11 - m.c11) / (2.0 * dt);
        r.adot = std::max(r.adot, std::abs(adot + 2.0 * n.c11 / mu));
        r.bdot = std::max(r.bdot, std::abs(bdot - 2.0 * al * n.c11));
        r.cdot = std::max(r.cdot, std::abs(cdot - (al * n.a11 - n.b11 / mu)));
    }
    return r;
}

GaussianGroundState td_ground_state(const EPNode& node, const IsotropicTDParams& params) {
    params.validate();
    if (!(node.sigma > 0.0)) throw SigmaCollapse("td_ground_state: sigma <= 0", node.t);
    const double s2 = node.sigma * node.sigma;
    const std::complex<double> l11 =
        (params.kappa - std::complex<double>(0.0, 1.0) * params.mu0(node.t) * node.sigma * node.sigmadot) /
        (params.hbar * s2);
    Eigen::Matrix2cd lam = Eigen::Matrix2cd::Zero();
    lam(0, 0) = l11;
    lam(1, 1) = l11;
    return make_state(lam, params.hbar);
}

std::pair<double, double> invariant_spectrum(double kappa, double l) {
    if (!(kappa > std::abs(l)))
        throw InvalidParameter("invariant_spectrum: kappa > |l| required");
    return {kappa - l, kappa + l};
}

double factorization_check(const GaussianGroundState& state, int n, double width) {
    const double l11r = state.lambda11r();
    const double sd = 1.0 / std::sqrt(2.0 * l11r);
    // 1D factor psi0(x) = (L11r/pi)^{1/4} exp(-Lambda11 x^2 / 2)
    const double n1 = std::pow(l11r / M_PI, 0.25);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x1 = -width * sd + 2.0 * width * sd * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double x2 = -width * sd + 2.0 * width * sd * j / (n - 1);
            const auto f1 = n1 * std::exp(-0.5 * state.Lambda(0, 0) * x1 * x1);
            const auto f2 = n1 * std::exp(-0.5 * state.Lambda(1, 1) * x2 * x2);
            worst = std::max(worst, std::abs(evaluate_psi(state, x1, x2) - f1 * f2));
        }
    }
    return worst;
}

namespace {

// Uniform-grid Catmull-Rom interpolation with clamped ends.
struct CubicTable {
    double t0, dt;
    std::vector<double> v;

    double operator()(double t) const {
        const double s = (t - t0) / dt;
        const auto n = static_cast<long>(v.size());
        long i = static_cast<long>(std::floor(s));
        i = std::clamp(i, 0L, n - 2);
        const double u = s - static_cast<double>(i);
        const double p0 = v[static_cast<std::size_t>(std::max(i - 1, 0L))];
        const double p1 = v[static_cast<std::size_t>(i)];
        const double p2 = v[static_cast<std::size_t>(i + 1)];
        const double p3 = v[static_cast<std::size_t>(std::min(i + 2, n - 1))];
        return p1 + 0.5 * u * (p2 - p0 + u * (2.0 * p0 - 5.0 * p1 + 4.0 * p2 - p3 +
                                              u * (3.0 * (p1 - p2) + p3 - p0)));
    }
};

}  // namespace

IsotropicTDParams params_from_table(const std::string& path, double kappa, double l, double hbar) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("params_from_table: cannot open " + path);
    std::string line;
    std::getline(in, line);  // header
    std::vector<double> ts, mus, als, nus;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        double t, mu, al, nu;
        if (!(ss >> t >> mu >> al >> nu))
            throw InvalidParameter("params_from_table: malformed row: " + line);
        ts.push_back(t);
        mus.push_back(mu);
        als.push_back(al);
        nus.push_back(nu);
    }
    if (ts.size() < 2) throw InvalidParameter("params_from_table: need at least two rows");
    const double dt = ts[1] - ts[0];
    for (std::size_t i = 1; i < ts.size(); ++i)
        if (std::abs(ts[i] - ts[0] - static_cast<double>(i) * dt) > 1e-9 * std::max(1.0, std::abs(ts.back())))
            throw InvalidParameter("params_from_table: non-uniform time grid");

    IsotropicTDParams p;
    p.mu0 = CubicTable{ts[0], dt, mus};
    p.alpha = CubicTable{ts[0], dt, als};
    p.nu = CubicTable{ts[0], dt, nus};
    p.kappa = kappa;
    p.l = l;
    p.hbar = hbar;
    return p;
}

}  // namespace ncphase

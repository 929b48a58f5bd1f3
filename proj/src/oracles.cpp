#include "ncphase/oracles.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace ncphase::oracle {

using cd = std::complex<double>;

std::array<cd, 4> quartic_roots(const QuarticPoly& p) {
    if (p[4] == 0.0) throw InvalidParameter("quartic_roots: leading coefficient is zero");
    double pnorm = 0.0;
    for (double c : p) pnorm = std::max(pnorm, std::abs(c));

    auto eval = [&](cd z) {
        cd acc{p[4]};
        for (int i = 3; i >= 0; --i) acc = acc * z + p[i];
        return acc;
    };

    // Initial guesses on a non-real spiral.
    std::array<cd, 4> r;
    const cd seed{0.4, 0.9};
    r[0] = seed;
    for (int i = 1; i < 4; ++i) r[i] = r[i - 1] * seed;

    for (int it = 0; it < 500; ++it) {
        double step = 0.0;
        for (int i = 0; i < 4; ++i) {
            cd denom{p[4]};
            for (int j = 0; j < 4; ++j)
                if (j != i) denom *= r[i] - r[j];
            const cd delta = eval(r[i]) / denom;
            r[i] -= delta;
            step = std::max(step, std::abs(delta));
        }
        if (step < 1e-14) break;
    }
    for (const cd& z : r)
        if (std::abs(eval(z)) > 1e-10 * pnorm)
            throw NonConvergence("quartic_roots: Durand-Kerner did not converge");
    return r;
}

void gauss_hermite_rule(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        const double b = std::sqrt(i / 2.0);
        jm(i, i - 1) = b;
        jm(i - 1, i) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm);
    nodes.resize(n);
    weights.resize(n);
    const double sqrtpi = std::sqrt(M_PI);
    for (int i = 0; i < n; ++i) {
        nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        weights[i] = sqrtpi * v0 * v0;
    }
}

Eigen::Matrix4d gauss_hermite_moments(const WignerGaussian& w, int nodes_per_axis, double* norm_out) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(w.LambdaM);
    if (es.eigenvalues().minCoeff() <= 0.0)
        throw InvalidParameter("gauss_hermite_moments: LambdaM is not positive definite");

    // X = E d^{-1/2} y turns the exponent into -y.y.
    const Eigen::Vector4d d = es.eigenvalues();
    const Eigen::Matrix4d map = es.eigenvectors() * d.cwiseSqrt().cwiseInverse().asDiagonal();
    double jac = 1.0;
    for (int i = 0; i < 4; ++i) jac /= std::sqrt(d(i));

    std::vector<double> xs, ws;
    gauss_hermite_rule(nodes_per_axis, xs, ws);

    Eigen::Matrix4d second = Eigen::Matrix4d::Zero();
    double mass = 0.0;
    const int n = nodes_per_axis;
    Eigen::Vector4d y;
    for (int a = 0; a < n; ++a) {
        y(0) = xs[a];
        for (int b = 0; b < n; ++b) {
            y(1) = xs[b];
            const double wab = ws[a] * ws[b];
            for (int c = 0; c < n; ++c) {
                y(2) = xs[c];
                const double wabc = wab * ws[c];
                for (int e = 0; e < n; ++e) {
                    y(3) = xs[e];
                    const double weight = wabc * ws[e];
                    mass += weight;
                    second += weight * (y * y.transpose());
                }
            }
        }
    }
    const double pref = jac / (M_PI * M_PI * w.hbar * w.hbar);
    if (norm_out) *norm_out = pref * mass;
    // <X X^T> in the tilde ordering (x1, x2, p1, p2), then reorder.
    const Eigen::Matrix4d mt = pref * map * second * map.transpose();
    const Eigen::Matrix4d s = reorder_xxpp_to_xpxp();
    return s * mt * s.transpose();
}

double grid_annihilation_residual(const GaussianGroundState& state, const ModeBasis& basis,
                                  int n, double width, int order) {
    if (order != 2 && order != 4 && order != 6)
        throw InvalidParameter("grid_annihilation_residual: order must be 2, 4 or 6");
    const double sd1 = 1.0 / std::sqrt(2.0 * state.lambda11r());
    const double sd2 = 1.0 / std::sqrt(2.0 * state.lambda22r());
    const double h1 = 2.0 * width * sd1 / (n - 1);
    const double h2 = 2.0 * width * sd2 / (n - 1);

    std::vector<cd> psi(static_cast<std::size_t>(n) * n);
    std::vector<double> x1s(n), x2s(n);
    for (int i = 0; i < n; ++i) x1s[i] = -width * sd1 + i * h1;
    for (int j = 0; j < n; ++j) x2s[j] = -width * sd2 + j * h2;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            psi[static_cast<std::size_t>(i) * n + j] = evaluate_psi(state, x1s[i], x2s[j]);

    auto at = [&](int i, int j) { return psi[static_cast<std::size_t>(i) * n + j]; };
    const int m = order / 2;
    auto stencil = [&](auto f, double h) {
        switch (order) {
            case 2: return (f(1) - f(-1)) / (2.0 * h);
            case 4: return (-f(2) + 8.0 * f(1) - 8.0 * f(-1) + f(-2)) / (12.0 * h);
            default:
                return (f(3) - 9.0 * f(2) + 45.0 * f(1) - 45.0 * f(-1) + 9.0 * f(-2) - f(-3)) /
                       (60.0 * h);
        }
    };

    const cd ih{0.0, state.hbar};
    double worst = 0.0;
    for (int i = m; i < n - m; ++i) {
        for (int j = m; j < n - m; ++j) {
            const cd d1 = stencil([&](int s) { return at(i + s, j); }, h1);
            const cd d2 = stencil([&](int s) { return at(i, j + s); }, h2);
            const Eigen::Vector2cd xv{cd(x1s[i]), cd(x2s[j])};
            const Eigen::Vector2cd dv{d1, d2};
            const Eigen::Vector2cd res = basis.Ux * xv * at(i, j) - ih * basis.Up * dv;
            worst = std::max({worst, std::abs(res(0)), std::abs(res(1))});
        }
    }
    return worst;
}

PPTResult ppt_symplectic_check(const CovarianceMatrix& v) {
    Eigen::Matrix4d mirrored = v.V;
    mirrored.row(3) *= -1.0;
    mirrored.col(3) *= -1.0;
    const Eigen::Matrix4d m = symplectic_j() * mirrored;
    Eigen::EigenSolver<Eigen::Matrix4d> es(m);
    double mn = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 4; ++i) mn = std::min(mn, std::abs(es.eigenvalues()(i).imag()));
    return {mn, mn >= v.hbar / 2.0 - 1e-10};
}

CovarianceMatrix covariance_via_inverse(const WignerGaussian& w) {
    const Eigen::Matrix2d a = w.block1();
    const Eigen::Matrix2d b = w.block2();
    const Eigen::Matrix2d c = w.block12();
    if (std::abs(b.determinant()) < 1e-300)
        throw SingularBlock("covariance_via_inverse: singular momentum block");
    const Eigen::Matrix2d binv = b.inverse();
    const Eigen::Matrix2d schur = a - c * binv * c.transpose();
    const double det = b.determinant() * schur.determinant();
    if (!(det > 0.0))
        throw SingularBlock("covariance_via_inverse: LambdaM not positive definite");
    const Eigen::Matrix2d sinv = schur.inverse();

    Eigen::Matrix4d inv;
    inv.block<2, 2>(0, 0) = sinv;
    const Eigen::Matrix2d lower = -binv * c.transpose() * sinv;
    inv.block<2, 2>(2, 0) = lower;
    inv.block<2, 2>(0, 2) = lower.transpose();
    inv.block<2, 2>(2, 2) = binv + binv * c.transpose() * sinv * c * binv;

    const Eigen::Matrix4d sig = inv / (2.0 * w.hbar * w.hbar * std::sqrt(det));
    const Eigen::Matrix4d s = reorder_xxpp_to_xpxp();
    CovarianceMatrix out;
    out.hbar = w.hbar;
    out.V = s * sig * s.transpose();
    return out;
}

}  // namespace ncphase::oracle

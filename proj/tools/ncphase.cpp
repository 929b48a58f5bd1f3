#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ncphase/oracles.hpp"
#include "ncphase/selftest.hpp"
#include "ncphase/separability.hpp"
#include "ncphase/td_isotropic.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitSelftest = 1;
constexpr int kExitConfig = 2;
constexpr int kExitAnalysis = 3;
constexpr int kExitIntegration = 4;

// Round-trippable double formatting for CSV.
std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::map<std::string, double> parse_config_file(const std::string& path,
                                                std::map<std::string, std::string>& strings) {
    std::map<std::string, double> values;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            const auto b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty()) continue;
        try {
            std::size_t used = 0;
            const double d = std::stod(val, &used);
            if (used == val.size()) {
                values[key] = d;
                continue;
            }
        } catch (...) {
        }
        strings[key] = val;
    }
    return values;
}

struct RunConfig {
    double m1 = 1.0, m2 = 1.0, omega1t = 1.0, omega2t = 2.0;
    double theta = 0.1, eta = 0.1, hbar = 1.0;
    double kappa = 1.0, l = 0.0;
    double mu0 = 1.0, alpha0 = 1.0, nu = 0.1;
    double alpha_eps = 0.0, alpha_omega = 1.0;
    double sigma0 = 0.0, sigmadot0 = 0.0;  // sigma0 = 0 means equilibrium
    double dt = 1e-3, t_end = 10.0;
    int threads = 0;
    std::string td_table;

    void load(const std::map<std::string, double>& v, const std::map<std::string, std::string>& s) {
        auto get = [&](const char* k, double& dst) {
            if (auto it = v.find(k); it != v.end()) dst = it->second;
        };
        get("m1", m1); get("m2", m2);
        get("omega1t", omega1t); get("omega2t", omega2t);
        get("theta", theta); get("eta", eta); get("hbar", hbar);
        get("kappa", kappa); get("l", l);
        get("mu0", mu0); get("alpha", alpha0); get("nu", nu);
        get("alpha_eps", alpha_eps); get("alpha_omega", alpha_omega);
        get("sigma0", sigma0); get("sigmadot0", sigmadot0);
        get("dt", dt); get("t_end", t_end);
        if (auto it = v.find("threads"); it != v.end()) threads = static_cast<int>(it->second);
        if (auto it = s.find("td_table"); it != s.end()) td_table = it->second;
    }

    ncphase::NCOscillatorSpec spec() const {
        ncphase::NCOscillatorSpec sp;
        sp.m1 = m1; sp.m2 = m2;
        sp.w1t = omega1t; sp.w2t = omega2t;
        sp.nc = {theta, eta, hbar};
        return sp;
    }
};

int effective_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("NCPHASE_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

const char* verdict_str(ncphase::Verdict v) {
    return v == ncphase::Verdict::separable ? "separable" : "entangled";
}

int cmd_analyze(const RunConfig& cfg, const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    try {
        const ncphase::NCOscillatorSpec spec = cfg.spec();
        const ncphase::SeparabilityReport rep = ncphase::classify(spec);
        const ncphase::CommHamiltonian h = ncphase::to_commutative(spec);
        const auto s = ncphase::symplectic_eigenvalues(h);
        const auto st = ncphase::ground_state(ncphase::mode_basis(h, s), h.hbar);
        const auto v = ncphase::covariance(st);

        json j;
        j["lambda1"] = rep.lambda1;
        j["lambda2"] = rep.lambda2;
        j["Lambda"] = {{"Lambda11", st.lambda11r()},
                       {"Lambda22", st.lambda22r()},
                       {"Lambda12c", st.lambda12c()}};
        std::vector<double> vflat;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) vflat.push_back(v.V(r, c));
        j["V"] = vflat;
        j["Delta1"] = rep.inv.Delta1;
        j["Delta2"] = rep.inv.Delta2;
        j["Delta12"] = rep.inv.Delta12;
        j["tau_v"] = rep.inv.tau_v;
        j["Ps"] = rep.Ps;
        j["verdict"] = verdict_str(rep.verdict);
        j["rsup_min"] = ncphase::rsup_check(v.V, v.hbar, ncphase::symplectic_j());
        j["sep1_residual"] = rep.sep1;
        out << j.dump(2) << "\n";
        return 0;
    } catch (const ncphase::InvalidParameter& e) {
        out << json{{"error", e.what()}}.dump(2) << "\n";
        return kExitConfig;
    } catch (const std::runtime_error& e) {
        out << json{{"error", e.what()}}.dump(2) << "\n";
        return kExitAnalysis;
    }
}

struct SweepAxis {
    std::string param;
    double start, stop;
    int count;
};

void set_param(RunConfig& cfg, const std::string& name, double value) {
    if (name == "m1") cfg.m1 = value;
    else if (name == "m2") cfg.m2 = value;
    else if (name == "omega1t") cfg.omega1t = value;
    else if (name == "omega2t") cfg.omega2t = value;
    else if (name == "theta") cfg.theta = value;
    else if (name == "eta") cfg.eta = value;
    else if (name == "hbar") cfg.hbar = value;
    else throw std::runtime_error("unknown sweep parameter: " + name);
}

int cmd_sweep(const RunConfig& cfg, const std::vector<SweepAxis>& axes, const std::string& out_path) {
    for (const SweepAxis& a : axes) {
        RunConfig probe = cfg;
        set_param(probe, a.param, a.start);  // validate the name before threading
    }
    const int n1 = axes[0].count;
    const int n2 = axes.size() > 1 ? axes[1].count : 1;
    auto axis_value = [](const SweepAxis& a, int i) {
        return a.count == 1 ? a.start : a.start + (a.stop - a.start) * i / (a.count - 1);
    };

    struct Row {
        double a1 = 0.0, a2 = 0.0;
        std::string body;
    };
    std::vector<Row> rows(static_cast<std::size_t>(n1) * n2);

    auto work = [&](int lo, int hi) {
        for (int idx = lo; idx < hi; ++idx) {
            const int i = idx / n2, j = idx % n2;
            Row& row = rows[static_cast<std::size_t>(idx)];
            RunConfig point = cfg;
            row.a1 = axis_value(axes[0], i);
            set_param(point, axes[0].param, row.a1);
            if (axes.size() > 1) {
                row.a2 = axis_value(axes[1], j);
                set_param(point, axes[1].param, row.a2);
            }
            try {
                const ncphase::SeparabilityReport r = ncphase::classify(point.spec());
                row.body = num(r.lambda1) + "," + num(r.lambda2) + "," + num(r.lambda12c) + "," +
                           num(r.Ps) + "," + verdict_str(r.verdict) + "," + num(r.sep1);
            } catch (const std::runtime_error&) {
                double sep1 = std::nan("");
                try {
                    sep1 = ncphase::sep1_residual(point.spec());
                } catch (...) {
                }
                row.body = "nan,nan,nan,nan,error," + num(sep1);
            }
        }
    };

    const int total = n1 * n2;
    const int nthreads = std::min(effective_threads(cfg.threads), total);
    std::vector<std::thread> pool;
    const int chunk = (total + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back(work, t * chunk, std::min(total, (t + 1) * chunk));
    for (auto& th : pool) th.join();

    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << "axis1,axis2,lambda1,lambda2,lambda12c,Ps,verdict,sep1_residual\n";
    for (int idx = 0; idx < total; ++idx) {
        const Row& row = rows[static_cast<std::size_t>(idx)];
        out << num(row.a1) << "," << (axes.size() > 1 ? num(row.a2) : std::string{}) << ","
            << row.body << "\n";
    }
    return 0;
}

int cmd_td(const RunConfig& cfg, const std::string& out_path) {
    ncphase::IsotropicTDParams p;
    if (!cfg.td_table.empty()) {
        p = ncphase::params_from_table(cfg.td_table, cfg.kappa, cfg.l, cfg.hbar);
    } else {
        const double mu0 = cfg.mu0, a0 = cfg.alpha0, nu = cfg.nu;
        const double eps = cfg.alpha_eps, om = cfg.alpha_omega;
        p.mu0 = [mu0](double) { return mu0; };
        p.alpha = [a0, eps, om](double t) { return a0 * (1.0 + eps * std::sin(om * t)); };
        p.nu = [nu](double) { return nu; };
        p.kappa = cfg.kappa;
        p.l = cfg.l;
        p.hbar = cfg.hbar;
    }
    if (!(p.kappa > std::abs(p.l))) {
        std::cerr << "td: kappa > |l| required\n";
        return kExitConfig;
    }

    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << "t,sigma,sigmadot,a11,b11,c11,kappa_drift,Lambda11_re,Lambda11_im,Ps\n";
    try {
        const double s0 = cfg.sigma0 > 0.0 ? cfg.sigma0 : ncphase::equilibrium_sigma(p);
        const ncphase::EPTrajectory traj = ncphase::integrate_ep(p, s0, cfg.sigmadot0, cfg.t_end, cfg.dt);
        for (const auto& n : traj.nodes) {
            const ncphase::GaussianGroundState st = ncphase::td_ground_state(n, p);
            const double ps = ncphase::simon_ps(ncphase::covariance(st));
            out << num(n.t) << "," << num(n.sigma) << "," << num(n.sigmadot) << "," << num(n.a11)
                << "," << num(n.b11) << "," << num(n.c11) << "," << num(n.kappa_drift) << ","
                << num(st.Lambda(0, 0).real()) << "," << num(st.Lambda(0, 0).imag()) << ","
                << num(ps) << "\n";
        }
        return 0;
    } catch (const ncphase::SigmaCollapse& e) {
        std::cerr << "td: " << e.what() << " (last good time " << num(e.last_good_time) << ")\n";
        return kExitIntegration;
    } catch (const ncphase::InvalidParameter& e) {
        std::cerr << "td: " << e.what() << "\n";
        return kExitConfig;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"noncommutative-oscillator Gaussian-state analysis"};
    app.require_subcommand(1);

    std::string config_path, out_path;
    std::vector<std::string> params;
    std::vector<std::string> ranges;
    double dt = -1.0, t_end = -1.0;
    int threads = 0;
    unsigned seed = 12345;
    bool mutate = false;

    RunConfig cfg;
    std::map<std::string, double> overrides;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value config file");
        sub->add_option("--out", out_path, "output path (default stdout)");
        sub->add_option("--threads", threads, "worker threads (env NCPHASE_THREADS)");
        for (const char* key : {"m1", "m2", "omega1t", "omega2t", "theta", "eta", "hbar",
                                "kappa", "l", "mu0", "alpha", "nu", "alpha_eps", "alpha_omega",
                                "sigma0", "sigmadot0"})
            sub->add_option_function<double>(
                std::string("--") + key,
                [&overrides, key](double v) { overrides[key] = v; },
                std::string("override ") + key);
    };

    CLI::App* analyze = app.add_subcommand("analyze", "single-point JSON report");
    add_common(analyze);

    CLI::App* sweep = app.add_subcommand("sweep", "1-D or 2-D parameter sweep to CSV");
    add_common(sweep);
    sweep->add_option("--param", params, "swept parameter name (repeatable twice)");
    sweep->add_option("--range", ranges, "START:STOP:COUNT per --param");

    CLI::App* td = app.add_subcommand("td", "time-dependent isotropic trajectory to CSV");
    add_common(td);
    td->add_option("--dt", dt, "integration step");
    td->add_option("--t-end", t_end, "end time");

    CLI::App* selftest = app.add_subcommand("selftest", "fixed-seed invariant battery");
    selftest->add_option("--seed", seed, "RNG seed");
    selftest->add_flag("--mutate", mutate, "flip sigma12 sign (negative control)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!config_path.empty()) {
            std::map<std::string, std::string> strings;
            const auto values = parse_config_file(config_path, strings);
            cfg.load(values, strings);
        }
        cfg.load(overrides, {});  // flags win
        if (threads > 0) cfg.threads = threads;
        if (dt > 0.0) cfg.dt = dt;
        if (t_end > 0.0) cfg.t_end = t_end;
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }

    if (analyze->parsed()) return cmd_analyze(cfg, out_path);

    if (sweep->parsed()) {
        if (params.empty() || params.size() > 2 || params.size() != ranges.size()) {
            std::cerr << "sweep: need one or two --param/--range pairs\n";
            return kExitConfig;
        }
        std::vector<SweepAxis> axes;
        for (std::size_t i = 0; i < params.size(); ++i) {
            SweepAxis a;
            a.param = params[i];
            char colon1 = 0, colon2 = 0;
            std::istringstream ss(ranges[i]);
            if (!(ss >> a.start >> colon1 >> a.stop >> colon2 >> a.count) || colon1 != ':' ||
                colon2 != ':' || a.count < 2 || a.stop < a.start) {
                std::cerr << "sweep: bad --range '" << ranges[i] << "' (want START:STOP:COUNT)\n";
                return kExitConfig;
            }
            axes.push_back(a);
        }
        try {
            return cmd_sweep(cfg, axes, out_path);
        } catch (const std::exception& e) {
            std::cerr << "sweep: " << e.what() << "\n";
            return kExitConfig;
        }
    }

    if (td->parsed()) return cmd_td(cfg, out_path);

    if (selftest->parsed()) {
        const int rc = ncphase::run_selftest(std::cout, seed, mutate);
        return rc == 0 ? 0 : kExitSelftest;
    }
    return kExitConfig;
}

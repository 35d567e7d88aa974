#include "nsplab/acceptance.hpp"
#include "nsplab/composite.hpp"
#include "nsplab/config.hpp"
#include "nsplab/evolve.hpp"
#include "nsplab/io.hpp"
#include "nsplab/poisson.hpp"
#include "nsplab/rarefaction.hpp"
#include "nsplab/shock_profile.hpp"
#include "nsplab/thermo.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

namespace {

constexpr const char* kVersion = "nsplab 1.0.0";

std::string metadata_header(const nsplab::config::RunConfig& cfg) {
    std::ostringstream os;
    os << "# " << kVersion << "\n";
    std::istringstream echo(nsplab::config::echo(cfg));
    std::string line;
    while (std::getline(echo, line)) os << "# " << line << "\n";
    return os.str();
}

int run_riemann(const nsplab::config::RunConfig& cfg) {
    const auto fan = nsplab::thermo::solve_riemann(cfg.v_minus, cfg.u_minus,
                                                   cfg.v_plus, cfg.u_plus);
    using nsplab::io::format_g17;
    std::ostringstream os;
    auto put = [&](const char* key, double value) {
        os << key << " = " << format_g17(value) << "\n";
    };
    put("v_minus", fan.v_minus); put("u_minus", fan.u_minus);
    put("v_mid", fan.v_mid); put("u_mid", fan.u_mid);
    put("v_plus", fan.v_plus); put("u_plus", fan.u_plus);
    put("sigma", fan.sigma);
    put("delta_R", fan.delta_R); put("delta_S", fan.delta_S);
    put("phi_minus", fan.phi_minus); put("phi_mid", fan.phi_mid);
    put("phi_plus", fan.phi_plus);
    os << "v_minus,u_minus,v_mid,u_mid,v_plus,u_plus,sigma,delta_R,delta_S\n";
    os << nsplab::io::csv_row({fan.v_minus, fan.u_minus, fan.v_mid, fan.u_mid,
                               fan.v_plus, fan.u_plus, fan.sigma, fan.delta_R,
                               fan.delta_S})
       << "\n";
    std::cout << os.str();
    return 0;
}

int run_rarefaction(const nsplab::config::RunConfig& cfg, double t, int samples) {
    const auto fan = nsplab::thermo::solve_riemann(cfg.v_minus, cfg.u_minus,
                                                   cfg.v_plus, cfg.u_plus);
    const nsplab::rarefaction::RarefactionField field(fan);
    const double lo = field.w_minus * (1.0 + t) - 25.0;
    const double hi = field.w_mid * (1.0 + t) + 25.0;
    const double dx = (hi - lo) / (samples - 1);

    std::ostringstream os;
    os << metadata_header(cfg);
    os << "x,v,u,phi,vx,ux\n";
    for (int i = 0; i < samples; ++i) {
        const double x = lo + dx * i;
        const auto p = nsplab::rarefaction::eval(field, t, x);
        const auto d = nsplab::rarefaction::derivatives(field, t, x, 1);
        os << nsplab::io::csv_row({x, p.v, p.u, p.phi, d.vx[0], d.ux[0]}) << "\n";
    }
    std::filesystem::create_directories(cfg.output_dir);
    nsplab::io::atomic_write(cfg.output_dir + "/rarefaction.csv", os.str());
    std::cout << "wrote " << cfg.output_dir << "/rarefaction.csv\n";
    return 0;
}

int run_profile(const nsplab::config::RunConfig& cfg) {
    const auto fan = nsplab::thermo::solve_riemann(cfg.v_minus, cfg.u_minus,
                                                   cfg.v_plus, cfg.u_plus);
    const auto prof = nsplab::shock_profile::solve_profile(fan);

    std::ostringstream os;
    os << metadata_header(cfg);
    os << "xi,v,u,phi,h,vp,up,phip\n";
    for (std::size_t i = 0; i < prof.xi.size(); ++i)
        os << nsplab::io::csv_row({prof.xi[i], prof.v[i], prof.u[i], prof.phi[i],
                                   prof.h[i], prof.vp[i], prof.up[i], prof.phip[i]})
           << "\n";
    std::filesystem::create_directories(cfg.output_dir);
    nsplab::io::atomic_write(cfg.output_dir + "/profile.csv", os.str());

    const auto tail = nsplab::shock_profile::verify_tail(prof);
    using nsplab::io::format_g17;
    std::ostringstream js;
    js << "{\"residual_unreduced\":"
       << format_g17(nsplab::shock_profile::residual_unreduced(prof))
       << ",\"rate_left\":" << format_g17(tail.rate_left)
       << ",\"rate_right\":" << format_g17(tail.rate_right)
       << ",\"r2_left\":" << format_g17(tail.r2_left)
       << ",\"r2_right\":" << format_g17(tail.r2_right)
       << ",\"max_vp\":" << format_g17(tail.max_vp)
       << ",\"decay_ok\":" << (tail.decay_ok ? "true" : "false") << "}\n";
    nsplab::io::atomic_write(cfg.output_dir + "/profile_verification.jsonl", js.str());
    std::cout << "wrote " << cfg.output_dir << "/profile.csv and profile_verification.jsonl\n";
    return 0;
}

int run_poisson_test(const nsplab::config::RunConfig& cfg) {
    const double A = 0.1, B = 0.3;
    const double pi = std::acos(-1.0);
    std::ostringstream os;
    os << metadata_header(cfg);
    os << "dxi,error,observed_order\n";
    double prev_err = 0.0, prev_h = 0.0;
    for (const std::size_t n : {65u, 129u, 257u, 513u}) {
        nsplab::poisson::Problem prob;
        prob.dxi = 1.0 / static_cast<double>(n - 1);
        prob.v.resize(n);
        prob.source.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = prob.dxi * static_cast<double>(i);
            const double v = 1.0 + B * std::sin(2.0 * pi * x);
            const double vx = 2.0 * pi * B * std::cos(2.0 * pi * x);
            const double px = A * pi * std::cos(pi * x);
            const double pxx = -A * pi * pi * std::sin(pi * x);
            prob.v[i] = v;
            prob.source[i] = -(pxx / v - px * vx / (v * v)) - 1.0 +
                             v * std::exp(A * std::sin(pi * x));
        }
        const auto sol = nsplab::poisson::solve_phi(prob, std::vector<double>(n, 0.0));
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = prob.dxi * static_cast<double>(i);
            e = std::max(e, std::abs(sol.phi[i] - A * std::sin(pi * x)));
        }
        const double order = prev_err > 0.0
                                 ? std::log(prev_err / e) / std::log(prev_h / prob.dxi)
                                 : 0.0;
        os << nsplab::io::csv_row({prob.dxi, e, order}) << "\n";
        prev_err = e;
        prev_h = prob.dxi;
    }
    std::filesystem::create_directories(cfg.output_dir);
    nsplab::io::atomic_write(cfg.output_dir + "/poisson_convergence.csv", os.str());
    std::cout << "wrote " << cfg.output_dir << "/poisson_convergence.csv\n";
    return 0;
}

int run_simulate(const nsplab::config::RunConfig& cfg) {
    const auto fan = nsplab::thermo::solve_riemann(cfg.v_minus, cfg.u_minus,
                                                   cfg.v_plus, cfg.u_plus);
    const auto prof = nsplab::shock_profile::solve_profile(fan);

    nsplab::evolve::Params par;
    par.fan = fan;
    par.L_dom = cfg.L_dom;
    par.dxi = cfg.dxi;
    par.A_v = cfg.A_v; par.A_u = cfg.A_u;
    par.xi0_v = cfg.xi0_v; par.xi0_u = cfg.xi0_u;
    par.w_v = cfg.w_v; par.w_u = cfg.w_u;
    par.c0 = cfg.c0;
    par.cfl_h = cfg.cfl_h; par.cfl_p = cfg.cfl_p;

    nsplab::evolve::Simulator sim(par, prof);
    sim.initialize();

    std::filesystem::create_directories(cfg.output_dir);
    std::ostringstream report;
    report << metadata_header(cfg);
    report << "t,X,Xdot,Linf_v,Linf_u,Linf_phi,L2_v,L2_u,H2_v,H2_u,eta_weighted,"
              "G1,G2,G3,GS,GR,D,mass_balance_residual\n";

    auto snapshot_due = [&](double t) {
        for (const double s : cfg.snapshots)
            if (std::abs(s - t) < 1e-9) return true;
        return false;
    };
    auto on_report = [&](const nsplab::evolve::Simulator& s) {
        const auto r = s.report();
        report << nsplab::io::csv_row(
                      {r.t, r.X, r.Xdot, r.norms.Linf_v, r.norms.Linf_u,
                       r.norms.Linf_phi, r.norms.L2_v, r.norms.L2_u, r.norms.H2_v,
                       r.norms.H2_u, r.eta_weighted, r.good.G1, r.good.G2,
                       r.good.G3, r.good.GS, r.good.GR, r.good.D,
                       r.mass_balance_residual})
               << "\n";
        if (snapshot_due(r.t)) {
            std::ostringstream snap;
            snap << metadata_header(cfg);
            snap << "xi,v,u,phi,vbar,ubar,phibar\n";
            const auto bar = s.sample_composite();
            const auto& st = s.state();
            for (std::size_t i = 0; i < st.xi.size(); ++i)
                snap << nsplab::io::csv_row({st.xi[i], st.v[i], st.u[i], st.phi[i],
                                             bar[i].v, bar[i].u, bar[i].phi})
                     << "\n";
            std::ostringstream name;
            name << cfg.output_dir << "/snapshot_" << r.t << ".csv";
            nsplab::io::atomic_write(name.str(), snap.str());
        }
    };
    nsplab::evolve::run(sim, cfg.t_final, cfg.report_interval, on_report);
    nsplab::io::atomic_write(cfg.output_dir + "/report.csv", report.str());
    std::cout << "wrote " << cfg.output_dir << "/report.csv\n";
    return 0;
}

int run_verify(const nsplab::config::RunConfig& cfg) {
    std::vector<int> ids;
    if (cfg.verify_profile == "quick") ids = {1, 3, 4, 8, 9};
    else if (cfg.verify_profile == "full") ids = {};
    else throw std::invalid_argument("verify: unknown profile '" +
                                     cfg.verify_profile + "' (quick|full)");
    unsigned threads = 1;
    if (const char* env = std::getenv("NSP_WAVELAB_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 1) threads = static_cast<unsigned>(n);
    }
    const auto results = nsplab::acceptance::run(ids, cfg.seed, threads);
    bool all = true;
    for (const auto& r : results) {
        std::cout << nsplab::acceptance::format_line(r) << "\n";
        all = all && r.passed;
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for composite waves of the 1D isothermal "
                 "Navier-Stokes-Poisson system"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> overrides;
    double t = 10.0;
    int samples = 1001;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key = value configuration file");
        sub->add_option("--set", overrides,
                        "key=value override applied after the config file");
    };

    auto* riemann = app.add_subcommand("riemann", "solve the two-wave Riemann fan");
    double vm = 1.0, um = 0.0, vp = 1.2, up = 0.011697;
    riemann->add_option("--v-minus", vm);
    riemann->add_option("--u-minus", um);
    riemann->add_option("--v-plus", vp);
    riemann->add_option("--u-plus", up);

    auto* rare = app.add_subcommand("rarefaction", "sample the smooth rarefaction");
    add_common(rare);
    rare->add_option("--t", t, "evaluation time");
    rare->add_option("--samples", samples, "number of sample points");

    auto* prof = app.add_subcommand("profile", "compute the shock profile");
    add_common(prof);

    auto* pois = app.add_subcommand("poisson-test",
                                    "manufactured-solution convergence study");
    add_common(pois);

    auto* simu = app.add_subcommand("simulate", "time-evolve perturbed data");
    add_common(simu);

    auto* veri = app.add_subcommand("verify", "run the verification suites");
    add_common(veri);
    std::string verify_profile;
    veri->add_option("--verify-profile", verify_profile, "quick or full");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        nsplab::config::RunConfig cfg;
        if (!config_path.empty()) cfg = nsplab::config::parse_file(config_path);
        std::map<std::string, std::string> ov;
        for (const auto& kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
            ov[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        nsplab::config::apply_overrides(cfg, ov);
        if (!verify_profile.empty()) cfg.verify_profile = verify_profile;

        if (riemann->parsed()) {
            cfg.v_minus = vm; cfg.u_minus = um;
            cfg.v_plus = vp; cfg.u_plus = up;
            nsplab::config::validate(cfg);
            return run_riemann(cfg);
        }
        nsplab::config::validate(cfg);
        if (rare->parsed()) return run_rarefaction(cfg, t, samples);
        if (prof->parsed()) return run_profile(cfg);
        if (pois->parsed()) return run_poisson_test(cfg);
        if (simu->parsed()) return run_simulate(cfg);
        if (veri->parsed()) return run_verify(cfg);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    }
}

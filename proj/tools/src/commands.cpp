#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <tnl/analysis.hpp>
#include <tnl/collocation.hpp>
#include <tnl/io.hpp>
#include <tnl/paper_faithful.hpp>
#include <tnl/report.hpp>
#include <tnl/variational.hpp>

#include "log.hpp"
#include "suite.hpp"

namespace tnl::cli {

using ojson = nlohmann::ordered_json;

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument:
        case ErrorKind::Domain:
        case ErrorKind::UnsupportedKernel:
        case ErrorKind::InsufficientData:
            return kExitUsage;
        case ErrorKind::DegenerateRoots:
        case ErrorKind::DegenerateProblem:
        case ErrorKind::IllPosed:
        case ErrorKind::Range:
        case ErrorKind::InternalConsistency:
            return kExitNumerical;
    }
    return kExitNumerical;
}

std::string error_json(std::string_view kind, std::string_view message, int exit_code) {
    ojson j;
    j["error"] = {{"kind", kind}, {"message", message}};
    j["exit_code"] = exit_code;
    return j.dump();
}

namespace {

std::filesystem::path output_dir(const RunConfig& cfg) {
    std::filesystem::path dir(cfg.out);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    require(!ec, ErrorKind::InvalidArgument, "cannot create output directory '" + cfg.out + "'");
    return dir;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    require(static_cast<bool>(os), ErrorKind::InvalidArgument,
            "cannot write '" + path.string() + "'");
    return os;
}

ojson inputs_json(const RunConfig& cfg) {
    ojson j;
    j["m"] = cfg.params.m;
    j["k"] = cfg.params.k;
    j["ktilde"] = cfg.params.ktilde;
    j["gamma"] = cfg.params.gamma;
    j["q0"] = cfg.q0;
    if (cfg.qbar) j["qbar"] = *cfg.qbar;
    else j["v0"] = cfg.v0;
    j["t_end"] = cfg.t_end;
    j["n"] = cfg.n;
    return j;
}

/// q(t) is affine in qdot(0), so two initial-value solves fix the velocity
/// that lands on q(t) = qbar.
double shoot_velocity(const std::function<double(double)>& terminal, double qbar) {
    const double base = terminal(0.0);
    const double slope = terminal(1.0) - base;
    require(std::abs(slope) > 1e-12 * std::max(1.0, std::abs(base)), ErrorKind::IllPosed,
            "solve: q(t) does not depend on qdot(0); the boundary-value problem is ill-posed");
    return (qbar - base) / slope;
}

void warn_if_undersampled(const OscillatorParams& P, double t_end, std::size_t n) {
    try {
        const auto r = roots(characteristic_coefficients(P));
        const double freq = std::max(std::abs(r.x1.imag()), std::abs(r.x2.imag()));
        const double periods = freq * t_end / (2.0 * std::numbers::pi);
        if (periods > 0.0 && static_cast<double>(n - 1) / periods < 20.0) {
            log(LogLevel::Warn, "n = " + std::to_string(n) + " gives fewer than 20 points per period of the " +
                                    "fastest oscillation (" + format_double(periods) + " periods on [0, t])");
        }
    } catch (const Error&) {
    }
}

}  // namespace

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
    cfg.validate();
    const auto& P = cfg.params;
    const Grid grid = Grid::uniform(cfg.t_end, cfg.n);
    const auto dir = output_dir(cfg);
    warn_if_undersampled(P, cfg.t_end, cfg.n);
    log(LogLevel::Info, "solve: method " + std::string(to_string(cfg.method)) + ", n = " + std::to_string(cfg.n));

    std::vector<double> q, qdot;
    ojson j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["method"] = to_string(cfg.method);
    j["inputs"] = inputs_json(cfg);
    double v0 = cfg.v0;

    switch (cfg.method) {
        case Method::Closed: {
            ClosedFormOptions opts;
            opts.consistency = cfg.consistency;
            if (cfg.qbar) {
                v0 = shoot_velocity(
                    [&](double v) {
                        return eval_solution(solve_closed_form(P, cfg.q0, v, cfg.t_end, opts), cfg.t_end);
                    },
                    *cfg.qbar);
            }
            const auto sol = solve_closed_form(P, cfg.q0, v0, cfg.t_end, opts);
            q = sample_solution(sol, grid, 0);
            qdot = sample_solution(sol, grid, 1);
            j["solution"] = ojson::parse(solution_to_json(sol));
            break;
        }
        case Method::Oracle: {
            Path path = cfg.qbar ? solve_integro_bvp(P, cfg.q0, *cfg.qbar, cfg.t_end, cfg.n)
                                 : solve_integro_ivp_banded(P, cfg.q0, cfg.v0, cfg.t_end, cfg.n);
            q.assign(path.q().begin(), path.q().end());
            qdot = first_derivative(grid, q);
            j["solver"] = cfg.qbar ? "dense collocation (boundary-value)" : "banded collocation";
            break;
        }
        case Method::Appendix: {
            require(!cfg.qbar, ErrorKind::InvalidArgument,
                    "solve: --method appendix takes initial data (q0, v0), not qbar");
            const auto tr = appendix_solution(P, cfg.q0, cfg.v0, grid);
            q.assign(tr.path.q().begin(), tr.path.q().end());
            qdot = tr.qdot;
            j["max_imag_ratio"] = tr.max_imag_ratio;
            break;
        }
    }
    if (cfg.qbar) j["shooting_v0"] = cfg.method == Method::Closed ? ojson(v0) : ojson(nullptr);
    const Path path(grid, q);
    j["ground_truth_relative_residual"] = oscillator_relative_residual(P, path);

    {
        auto os = open_output(dir / "trajectory.csv");
        write_trajectory_csv(os, grid, q, qdot);
    }
    {
        auto os = open_output(dir / "solution.json");
        os << j.dump(2) << '\n';
    }
    out << "wrote " << (dir / "trajectory.csv").string() << " and " << (dir / "solution.json").string()
        << '\n';
    return kExitOk;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
    log(LogLevel::Info, "validate: n = " + std::to_string(cfg.n));
    const auto report = run_validation(cfg);
    const auto dir = output_dir(cfg);
    {
        auto os = open_output(dir / "report.json");
        os << to_json(report) << '\n';
    }
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
        out << to_string(c.verdict) << '\t' << c.name << " [" << c.variant << "]"
            << (c.normative ? "" : " (informational)") << '\n';
        if (c.normative && c.verdict == Verdict::Fail) ++failed;
    }
    out << report.checks.size() << " checks, " << failed << " normative failures; report in "
        << (dir / "report.json").string() << '\n';
    return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_figures(const RunConfig& cfg, std::ostream& out) {
    cfg.validate();
    const auto& P = cfg.params;
    const Grid grid = Grid::uniform(cfg.t_end, cfg.n);
    const auto dir = output_dir(cfg);
    warn_if_undersampled(P, cfg.t_end, cfg.n);
    log(LogLevel::Info, "figures: " + std::to_string(cfg.gammas.size()) + " sweep entries on " +
                            std::to_string(cfg.jobs) + " worker(s)");

    const auto fig1 = solve_closed_form(P, cfg.q0, cfg.v0, cfg.t_end);
    {
        auto os = open_output(dir / "fig1.csv");
        write_trajectory_csv(os, grid, sample_solution(fig1, grid, 0), sample_solution(fig1, grid, 1));
    }
    const auto fig1_stages = detect_stages(fig1, cfg.t_end);

    const auto sweep = gamma_sweep(P, cfg.gammas, cfg.q0, cfg.v0, cfg.t_end, cfg.n, cfg.jobs);
    for (const auto& e : sweep) {
        if (!e.error.empty()) fail(ErrorKind::InternalConsistency, "figures: gamma " + format_double(e.gamma) + ": " + e.error);
    }
    {
        auto os = open_output(dir / "fig2.csv");
        os << "gamma,s,q\n";
        for (const auto& e : sweep) {
            OscillatorParams p = P;
            p.gamma = e.gamma;
            const auto q = sample_solution(solve_closed_form(p, cfg.q0, cfg.v0, cfg.t_end), grid, 0);
            const auto g = format_double(e.gamma);
            for (std::size_t i = 0; i < grid.size(); ++i)
                os << g << ',' << format_double(grid[i]) << ',' << format_double(q[i]) << '\n';
        }
        for (std::size_t i = 0; i < grid.size(); ++i)
            os << "inf," << format_double(grid[i]) << ','
               << format_double(local_reference(P, cfg.q0, cfg.v0, grid[i])) << '\n';
    }

    const auto stages_json = [](const StageReport& s) {
        ojson j;
        j["gamma"] = s.gamma;
        j["stabilized"] = s.stabilized;
        j["transient_end"] = s.transient_end;
        j["longtime_period"] = s.longtime_period;
        j["longtime_amplitude"] = s.longtime_amplitude;
        j["local_period"] = s.local_period;
        j["local_amplitude"] = s.local_amplitude;
        return j;
    };
    bool decreasing = true, periods_longer = true, amplitudes_larger = true;
    ojson entries = ojson::array();
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        const auto& e = sweep[i];
        if (i > 0 && !(e.l2_distance < sweep[i - 1].l2_distance)) decreasing = false;
        const auto& s = e.stages;
        if (!(s.stabilized && s.longtime_period > s.local_period)) periods_longer = false;
        if (!(s.stabilized && s.longtime_amplitude > s.local_amplitude)) amplitudes_larger = false;
        ojson j;
        j["gamma"] = e.gamma;
        j["l2_distance"] = e.l2_distance;
        j["local_norm"] = e.local_norm;
        j["initial_mismatch"] = e.initial_mismatch;
        j["stages"] = stages_json(s);
        entries.push_back(std::move(j));
    }
    ojson summary;
    summary["schema_version"] = kReportSchemaVersion;
    summary["tool_version"] = kToolVersion;
    summary["inputs"] = inputs_json(cfg);
    summary["gammas"] = cfg.gammas;
    ojson f1;
    f1["stages"] = stages_json(fig1_stages);
    f1["oscillatory_root_period"] =
        std::abs(fig1.roots.x2) > 0.0 ? 2.0 * std::numbers::pi / std::abs(fig1.roots.x2) : NAN;
    summary["fig1"] = std::move(f1);
    summary["sweep"] = std::move(entries);
    summary["claims"] = {{"l2_distance_strictly_decreasing", decreasing},
                         {"stabilized_period_exceeds_local", periods_longer},
                         {"stabilized_amplitude_exceeds_local", amplitudes_larger}};
    {
        auto os = open_output(dir / "figures.json");
        os << summary.dump(2) << '\n';
    }
    out << "wrote fig1.csv, fig2.csv, figures.json in " << dir.string() << '\n';
    return kExitOk;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    require(static_cast<bool>(is), ErrorKind::InvalidArgument, "cannot read config '" + path + "'");
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

struct Flags {
    std::optional<double> m, k, ktilde, gamma, q0, v0, qbar, t_end;
    std::optional<std::size_t> n;
    std::optional<unsigned> jobs;
    std::optional<std::string> method, consistency, kernel_order, gammas, out, config;
};

void add_flags(CLI::App* app, Flags& f) {
    app->add_option("--m", f.m, "mass");
    app->add_option("--k", f.k, "local spring constant");
    app->add_option("--ktilde", f.ktilde, "memory coupling");
    app->add_option("--gamma", f.gamma, "kernel cutoff");
    app->add_option("--q0", f.q0, "initial position");
    auto* v0 = app->add_option("--v0", f.v0, "initial velocity");
    auto* qbar = app->add_option("--qbar", f.qbar, "final position (replaces --v0)");
    v0->excludes(qbar);
    app->add_option("--t-end", f.t_end, "final time");
    app->add_option("--n", f.n, "grid points");
    app->add_option("--method", f.method, "closed | oracle | appendix")
        ->check(CLI::IsMember({"closed", "oracle", "appendix"}));
    app->add_option("--variant-consistency", f.consistency, "derived | paper")
        ->check(CLI::IsMember({"derived", "paper"}));
    app->add_option("--variant-kernel-order", f.kernel_order, "derived | paper")
        ->check(CLI::IsMember({"derived", "paper"}));
    app->add_option("--gammas", f.gammas, "comma-separated cutoffs for the sweep");
    app->add_option("--jobs", f.jobs, "worker threads for sweeps");
    app->add_option("--out", f.out, "output directory");
    app->add_option("--config", f.config, "JSON config file (flags win)");
}

RunConfig resolve(Command command, const Flags& f) {
    RunConfig c = default_config(command);
    if (f.config) c = apply_json(c, read_file(*f.config));
    if (f.m) c.params.m = *f.m;
    if (f.k) c.params.k = *f.k;
    if (f.ktilde) c.params.ktilde = *f.ktilde;
    if (f.gamma) c.params.gamma = *f.gamma;
    if (f.q0) c.q0 = *f.q0;
    if (f.v0) {
        c.v0 = *f.v0;
        c.qbar.reset();
    }
    if (f.qbar) c.qbar = *f.qbar;
    if (f.t_end) c.t_end = *f.t_end;
    if (f.n) c.n = *f.n;
    if (f.jobs) c.jobs = *f.jobs;
    if (f.method) {
        c.method = *f.method == "oracle" ? Method::Oracle
                 : *f.method == "appendix" ? Method::Appendix
                                           : Method::Closed;
    }
    if (f.consistency) {
        c.consistency = *f.consistency == "paper" ? ConsistencyVariant::PaperLiteral
                                                  : ConsistencyVariant::Derived;
    }
    if (f.kernel_order) {
        c.kernel_order = *f.kernel_order == "paper" ? KernelArgumentOrder::PaperLiteral
                                                    : KernelArgumentOrder::Derived;
    }
    if (f.gammas) c.gammas = parse_gamma_list(*f.gammas);
    if (f.out) c.out = *f.out;
    c.validate();
    return c;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    set_log_level(log_level_from_env());
    CLI::App app{"Time-non-local oscillator: closed form, oracle checks, figure data", "tnl"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    Flags flags;
    auto* solve = app.add_subcommand("solve", "write one trajectory (CSV) and its solution (JSON)");
    auto* validate = app.add_subcommand("validate", "run the oracle check suite, write report.json");
    auto* figures = app.add_subcommand("figures", "write trajectory and gamma-sweep data for plotting");
    for (auto* sub : {solve, validate, figures}) add_flags(sub, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << error_json("usage", e.what(), kExitUsage) << '\n';
        return kExitUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(resolve(Command::Solve, flags), out);
        if (validate->parsed()) return cmd_validate(resolve(Command::Validate, flags), out);
        return cmd_figures(resolve(Command::Figures, flags), out);
    } catch (const Error& e) {
        const int code = exit_code_for(e.kind());
        err << error_json(to_string(e.kind()), e.what(), code) << '\n';
        return code;
    } catch (const std::exception& e) {
        err << error_json("internal", e.what(), kExitNumerical) << '\n';
        return kExitNumerical;
    }
}

}  // namespace tnl::cli

// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria (0 when everything passes).

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <tnl/action.hpp>
#include <tnl/analysis.hpp>
#include <tnl/closed_form.hpp>
#include <tnl/collocation.hpp>
#include <tnl/errors.hpp>
#include <tnl/hamiltonian.hpp>
#include <tnl/paper_faithful.hpp>
#include <tnl/variational.hpp>

#ifdef TNL_ACCEPTANCE_WITH_CLI
#include "config.hpp"
#include "suite.hpp"
#endif

using namespace tnl;

namespace {

// Pinned tolerances.
constexpr double kResidualTol = 1e-5;
constexpr double kRatioLo = 3.6, kRatioHi = 4.4;
constexpr double kOracleTol = 1e-3;
constexpr double kOracleOrderTol = 0.2;
constexpr double kDenseBandedTol = 1e-10;
constexpr double kLocalSanityTol = 1e-2;
constexpr double kKtildeZeroTol = 1e-6;
constexpr double kSpuriousTol = 1e-10;
constexpr double kLargeGammaTol = 1e-2;
constexpr double kRestTol = 1e-14;
constexpr double kGradientOrderTol = 0.3;
constexpr double kActionTol = 1e-8;
constexpr double kRoundtripTol = 1e-12;
constexpr double kDensityTol = 1e-10;
constexpr double kRootTol = 1e-12;

const OscillatorParams kBase{1.0, 1.0, 2.0, 1.0};
constexpr double kQ0 = 0.0, kV0 = 1.0, kT = 10.0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double linf_diff(const Path& a, const Path& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

// Relative L-inf error against the closed form and the observed order from
// the oracle at n = 1001, 2001, 4001.
struct OracleAgreement {
    double error = INFINITY;
    double order = NAN;
    bool ok() const { return error <= kOracleTol && std::abs(order - 2.0) <= kOracleOrderTol; }
};

OracleAgreement oracle_agreement(const OscillatorParams& p, const ClosedFormOptions& opts) {
    OracleAgreement a;
    try {
        const auto sol = solve_closed_form(p, kQ0, kV0, kT, opts);
        std::vector<double> err, h;
        for (std::size_t n : {1001, 2001, 4001}) {
            const auto oracle = solve_integro_ivp_banded(p, kQ0, kV0, kT, n);
            const auto exact = sample_path(sol, oracle.grid());
            err.push_back(linf_diff(oracle, exact) / max_abs(exact.q()));
            h.push_back(oracle.grid().step());
        }
        a.error = err[2];
        a.order = observed_order(h[1], err[1], h[2], err[2]);
    } catch (const Error&) {
    }
    return a;
}

Outcome criterion1() {
    const auto sol = solve_closed_form(kBase, kQ0, kV0, kT);
    const double r4 = oscillator_relative_residual(kBase, sample_path(sol, make_uniform_grid(kT, 4001)));
    const double r2 = oscillator_relative_residual(kBase, sample_path(sol, make_uniform_grid(kT, 2001)));
    const double ratio = r2 / r4;
    return {r4 <= kResidualTol && ratio >= kRatioLo && ratio <= kRatioHi,
            "residual " + fmt(r4) + " of max|m q''| at n=4001, ratio " + fmt(ratio) + " on doubling"};
}

Outcome criterion2() {
    const auto a = oracle_agreement(kBase, {});
    const auto dense = solve_integro_ivp(kBase, kQ0, kV0, kT, 2001);
    const auto banded = solve_integro_ivp_banded(kBase, kQ0, kV0, kT, 2001);
    const double db = linf_diff(dense, banded);
    return {a.ok() && db <= kDenseBandedTol,
            "L-inf " + fmt(a.error) + " of max|q| at n=4001, order " + fmt(a.order) + ", dense vs banded " +
                fmt(db) + " at n=2001"};
}

Outcome criterion3() {
    std::vector<std::string> consistency, coefficients;
    for (auto [name, v] : {std::pair{"derived", ConsistencyVariant::Derived},
                           std::pair{"paper", ConsistencyVariant::PaperLiteral}}) {
        ClosedFormOptions o;
        o.consistency = v;
        if (oracle_agreement(kBase, o).ok()) consistency.push_back(name);
    }
    const std::array<std::pair<const char*, CharacteristicCoefficients>, 3> sets{
        std::pair{"derived", characteristic_coefficients(kBase)},
        std::pair{"paper", printed_characteristic_coefficients(kBase)},
        std::pair{"appendix", appendix_implied_coefficients(kBase)}};
    for (const auto& [name, cc] : sets) {
        ClosedFormOptions o;
        o.coefficients = cc;
        if (oracle_agreement(kBase, o).ok()) coefficients.push_back(name);
    }
    OscillatorParams big = kBase;
    big.gamma = 1e3 * std::sqrt((kBase.k + kBase.ktilde) / kBase.m);
    const double printed_dev = local_limit_deviation(printed_characteristic_coefficients(big), big);
    const double derived_dev = local_limit_deviation(characteristic_coefficients(big), big);
    bool ok = consistency == std::vector<std::string>{"derived"} &&
              coefficients == std::vector<std::string>{"derived"} && printed_dev > kLocalSanityTol &&
              derived_dev <= kLocalSanityTol;
    std::string named = "not checked";
#ifdef TNL_ACCEPTANCE_WITH_CLI
    const auto report = cli::run_validation(cli::default_config(cli::Command::Validate));
    named = "missing";
    for (const auto& c : report.checks) {
        if (c.name == "variant-disambiguation") {
            named = c.note;
            ok = ok && c.verdict == Verdict::Pass && c.note == "consistency: derived; coefficients: derived";
        }
    }
#endif
    std::string cs, ks;
    for (const auto& s : consistency) cs += (cs.empty() ? "" : ",") + s;
    for (const auto& s : coefficients) ks += (ks.empty() ? "" : ",") + s;
    return {ok, "consistency sets passing {" + cs + "}, coefficient sets passing {" + ks +
                    "}, large-gamma deviation printed " + fmt(printed_dev) + " derived " + fmt(derived_dev) +
                    ", report: " + named};
}

Outcome criterion4() {
    OscillatorParams p0 = kBase;
    p0.ktilde = 0.0;
    const auto sol = solve_closed_form(p0, 0.0, 1.0, kT);
    const double w = std::sqrt(p0.k / p0.m);
    double err = 0.0;
    for (double s = 0.0; s <= kT; s += 1e-3) err = std::max(err, std::abs(eval_solution(sol, s) - std::sin(w * s) / w));
    const double spurious = std::max(std::abs(sol.amplitudes[0]), std::abs(sol.amplitudes[1]));
    const double wt = std::sqrt((kBase.k + kBase.ktilde) / kBase.m);
    OscillatorParams big = kBase;
    big.gamma = 1e3 * wt;
    const double freq = std::abs(std::abs(roots(characteristic_coefficients(big)).x2) - wt) / wt;
    return {err <= kKtildeZeroTol && spurious <= kSpuriousTol && freq <= kLargeGammaTol,
            "ktilde=0 L-inf " + fmt(err) + ", spurious amplitude " + fmt(spurious) + ", |x2| off by " + fmt(freq) +
                " at gamma=" + fmt(big.gamma)};
}

Outcome criterion5() {
    const auto sol = solve_closed_form(kBase, 0.0, 0.0, kT);
    const auto grid = make_uniform_grid(kT, 2001);
    const double closed = max_abs(sample_solution(sol, grid));
    const double oracle = std::max(max_abs(solve_integro_ivp_banded(kBase, 0.0, 0.0, kT, 2001).q()),
                                   max_abs(solve_integro_ivp(kBase, 0.0, 0.0, kT, 501).q()));
    const double appendix = max_abs(appendix_solution(kBase, 0.0, 0.0, grid).path.q());
    return {closed <= kRestTol && oracle <= kRestTol && appendix <= kRestTol,
            "max|q| closed " + fmt(closed) + ", oracle " + fmt(oracle) + ", appendix " + fmt(appendix)};
}

Outcome criterion6() {
    const OscillatorParams p{1.0, 1.0, 1e6, 1.0};
    const auto sweep = gamma_sweep(p, {0.1, 0.3, 0.7}, 0.0, 1.0, 2.0, 20001, 1);
    const double local_amp = 1.0 / std::sqrt(p.k + p.ktilde);
    bool ok = true;
    std::ostringstream d;
    for (std::size_t i = 0; i < sweep.size(); ++i) {
        const auto& e = sweep[i];
        ok = ok && e.error.empty() && e.stages.stabilized && e.stages.longtime_period > e.stages.local_period &&
             e.stages.longtime_amplitude > local_amp;
        if (i > 0) ok = ok && e.l2_distance < sweep[i - 1].l2_distance;
        d << (i ? "; " : "") << "gamma " << e.gamma << ": L2 " << fmt(e.l2_distance) << ", period "
          << fmt(e.stages.longtime_period) << " > " << fmt(e.stages.local_period) << ", amplitude "
          << fmt(e.stages.longtime_amplitude) << " > " << fmt(local_amp);
    }
    return {ok, d.str()};
}

struct RandomPath {
    std::function<double(double)> q, qdot;
};

std::vector<RandomPath> random_paths(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<RandomPath> out;
    for (std::size_t c = 0; c < count; ++c) {
        std::array<double, 3> a{}, f{};
        for (int j = 0; j < 3; ++j) {
            a[j] = U(rng);
            f[j] = 1.0 + 1.5 * (U(rng) + 1.0);
        }
        out.push_back({[a, f](double s) {
                           double v = 0.0;
                           for (int j = 0; j < 3; ++j) v += a[j] * std::sin(f[j] * s + j);
                           return v;
                       },
                       [a, f](double s) {
                           double v = 0.0;
                           for (int j = 0; j < 3; ++j) v += a[j] * f[j] * std::cos(f[j] * s + j);
                           return v;
                       }});
    }
    return out;
}

GeneralLagrangianSpec general_spec() {
    GeneralLagrangianSpec g;
    g.m = 1.2;
    g.A = 0.4;
    g.B = -0.7;
    g.C = 0.2;
    g.D = 0.5;
    g.E = 0.3;
    g.F = -0.8;
    g.G = 0.6;
    g.H = 0.25;
    g.kernel = MemoryKernel::exponential(1.5);
    return g;
}

Outcome criterion7() {
    const double T = 2.0;
    const auto spec = general_spec();
    const auto reduced = reduce_general(spec, T);
    const auto paths = random_paths(10, 7);
    double worst_order_dev = 0.0, worst_action = 0.0;
    for (const auto& rp : paths) {
        std::vector<double> e;
        for (std::size_t n : {101, 201, 401})
            e.push_back(gradient_vs_analytic(spec, Path::sample(make_uniform_grid(T, n), rp.q),
                                             QuadratureRule::Trapezoid));
        worst_order_dev = std::max(worst_order_dev, std::abs(std::log2(e[1] / e[2]) - 2.0));
        const SmoothPath sp{rp.q, rp.qdot};
        const double sg = action_smooth(spec, sp, T);
        const double sr = action_smooth(reduced, sp, T);
        worst_action = std::max(worst_action, std::abs(sg - sr) / std::abs(sg));
    }
    return {worst_order_dev <= kGradientOrderTol && worst_action <= kActionTol,
            "max |order - 2| " + fmt(worst_order_dev) + " over 10 paths, action mismatch " + fmt(worst_action)};
}

Outcome criterion8() {
    const double T = 2.0;
    const auto spec = reduce_general(general_spec(), T);
    const auto paths = random_paths(3, 11);
    double roundtrip = 0.0, legendre = 0.0, printed = INFINITY;
    for (const auto& rp : paths) {
        const auto grid = make_uniform_grid(T, 401);
        const Path path = Path::sample(grid, rp.q);
        const double S = action(spec, path, QuadratureRule::Trapezoid);
        roundtrip = std::max(roundtrip, legendre_roundtrip(spec, path, QuadratureRule::Trapezoid) / std::abs(S));
        auto p = momentum(spec, path);
        for (std::size_t i = 0; i < p.size(); ++i) p[i] += 0.3 * std::sin(3.0 * grid[i]);
        const PhasePath phase(grid, std::vector<double>(path.q().begin(), path.q().end()), p);
        const double H = generalized_hamiltonian(spec, phase, QuadratureRule::Trapezoid);
        const double Hl = analytic_hamiltonian_reduced(spec, phase, QuadratureRule::Trapezoid);
        const double Hp =
            analytic_hamiltonian_reduced(spec, phase, QuadratureRule::Trapezoid, HamiltonianDensity::PaperLiteral);
        legendre = std::max(legendre, std::abs(Hl - H) / std::abs(H));
        printed = std::min(printed, std::abs(Hp - H) / std::abs(H));
    }
    const auto sol = solve_closed_form(kBase, kQ0, kV0, 5.0);
    std::vector<double> rp;
    for (std::size_t n : {201, 401}) {
        const auto g = make_uniform_grid(5.0, n);
        auto q = sample_solution(sol, g, 0);
        auto p = sample_solution(sol, g, 1);
        const auto res = hamilton_residuals(to_reduced(kBase), PhasePath(g, q, p), QuadratureRule::Trapezoid, 1e-2);
        double worst = 0.0;
        for (std::size_t i = 3; i + 4 < n; ++i) worst = std::max(worst, std::abs(res.r_p[i]));
        rp.push_back(worst);
    }
    const double order = std::log2(rp[0] / rp[1]);
    return {roundtrip <= kRoundtripTol && legendre <= kDensityTol && printed > kDensityTol &&
                std::abs(order - 2.0) <= kGradientOrderTol,
            "round trip " + fmt(roundtrip) + " of |S|, dH/dp order " + fmt(order) + ", Legendre density " +
                fmt(legendre) + ", printed density deviates by at least " + fmt(printed) + " (A~ = 0.4)"};
}

Outcome criterion9() {
    OscillatorParams p0 = kBase;
    p0.k = 0.0;
    const double k0 = root_distance(appendix_roots(p0), roots(characteristic_coefficients(p0)));
    const auto c = compare_paper_vs_derived(kBase, kQ0, kV0, kT, 4001);
    const bool ok = k0 <= kRootTol && c.roots_verdict == FormulaVerdict::Differs && c.residual_winner == "derived";
    return {ok, "k=0 root discrepancy " + fmt(k0) + "; k=1 root discrepancy " + fmt(c.root_discrepancy) +
                    ", solution difference " + fmt(c.solution_difference.value_or(NAN)) +
                    ", residuals derived " + fmt(c.normative_residual.value_or(NAN)) + " appendix " +
                    fmt(c.appendix_residual.value_or(NAN)) + ", winner " + c.residual_winner};
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        double budget_s;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"ground-truth residual", 5.0, criterion1},   {"oracle equivalence", 30.0, criterion2},
        {"variant disambiguation", 60.0, criterion3}, {"local limits", 30.0, criterion4},
        {"rest state", 30.0, criterion5},             {"gamma-sweep claims", 60.0, criterion6},
        {"variational consistency", 60.0, criterion7}, {"hamiltonian suite", 30.0, criterion8},
        {"appendix fidelity", 30.0, criterion9},
    };
    int failed = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = o.pass && secs <= c.budget_s;
        if (!pass) ++failed;
        std::printf("%s %d %s: %s [%.2f s, budget %.0f s]\n", pass ? "PASS" : "FAIL", index, c.title,
                    o.detail.c_str(), secs, c.budget_s);
        std::fflush(stdout);
    }
    return failed;
}

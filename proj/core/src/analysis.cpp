#include "tnl/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "tnl/errors.hpp"
#include "tnl/quadrature.hpp"

namespace tnl {

namespace {

std::vector<double> crossings(const Path& path, double t_a, double t_b, bool upward) {
    const Grid& g = path.grid();
    std::vector<double> out;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (g[i] < t_a || g[i + 1] > t_b) continue;
        const double a = path[i];
        const double b = path[i + 1];
        const bool hit = upward ? (a <= 0.0 && b > 0.0) : (a >= 0.0 && b < 0.0);
        if (hit) out.push_back(g[i] + g.step() * a / (a - b));
    }
    return out;
}

double mean_spacing(const std::vector<double>& c, double& total, std::size_t& count) {
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        total += c[i + 1] - c[i];
        ++count;
    }
    return count ? total / static_cast<double>(count) : 0.0;
}

}  // namespace

std::vector<double> upward_crossings(const Path& path, double t_a, double t_b) {
    return crossings(path, t_a, t_b, true);
}

PeriodAmplitude estimate_period_amplitude(const Path& path, double t_a, double t_b) {
    require(t_b > t_a, ErrorKind::InvalidArgument, "period: empty window");
    const auto up = crossings(path, t_a, t_b, true);
    const auto down = crossings(path, t_a, t_b, false);
    if (up.size() + down.size() < 3) {
        fail(ErrorKind::InsufficientData, "period: fewer than three zero crossings in window");
    }
    double total = 0.0;
    std::size_t count = 0;
    mean_spacing(up, total, count);
    mean_spacing(down, total, count);

    const Grid& g = path.grid();
    double sum_ext = 0.0;
    std::size_t n_ext = 0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g[i] < t_a || g[i] > t_b) continue;
        const double l = path[i - 1], c = path[i], r = path[i + 1];
        const bool is_max = c > l && c >= r;
        const bool is_min = c < l && c <= r;
        if (!is_max && !is_min) continue;
        // Vertex of the parabola through the three samples.
        const double curv = l - 2.0 * c + r;
        const double peak = curv != 0.0 ? c - (r - l) * (r - l) / (8.0 * curv) : c;
        sum_ext += std::abs(peak);
        ++n_ext;
    }
    PeriodAmplitude out;
    out.period = total / static_cast<double>(count);
    out.amplitude = n_ext ? sum_ext / static_cast<double>(n_ext) : 0.0;
    out.crossings = up.size() + down.size();
    return out;
}

double local_reference(const OscillatorParams& params, double q0, double v0, double s) {
    const double omega = std::sqrt((params.k + params.ktilde) / params.m);
    return q0 * std::cos(omega * s) + v0 / omega * std::sin(omega * s);
}

StageReport detect_stages(const ClosedFormSolution& sol, double t_end, std::size_t n) {
    const auto& p = sol.params;
    StageReport rep;
    rep.gamma = p.gamma;
    const double total_spring = p.k + p.ktilde;
    if (total_spring > 0.0) {
        rep.local_period = 2.0 * std::numbers::pi * std::sqrt(p.m / total_spring);
        rep.local_amplitude = std::sqrt(sol.q0 * sol.q0 + p.m * sol.v0 * sol.v0 / total_spring);
    } else {
        rep.local_period = rep.local_amplitude = NAN;
    }
    if (n == 0) {
        const double fastest = std::max(std::abs(sol.roots.x2.imag()), std::abs(sol.roots.x1.imag()));
        const double cycles = fastest * t_end / (2.0 * std::numbers::pi);
        n = std::max<std::size_t>(2001, static_cast<std::size_t>(std::ceil(cycles * 200.0)) + 1);
    }
    const Grid grid = Grid::uniform(t_end, n);
    const Path path = sample_path(sol, grid);

    const auto up = upward_crossings(path, 0.0, t_end);
    if (up.size() < 3) {
        rep.longtime_period = rep.longtime_amplitude = NAN;
        rep.transient_end = t_end;
        return rep;
    }
    std::vector<double> periods(up.size() - 1);
    for (std::size_t i = 0; i + 1 < up.size(); ++i) periods[i] = up[i + 1] - up[i];
    const double final_period = periods.back();
    std::size_t first_stable = periods.size() - 1;
    while (first_stable > 0 &&
           std::abs(periods[first_stable - 1] - final_period) <= kStabilityBand * final_period) {
        --first_stable;
    }
    rep.transient_end = up[first_stable];
    const auto window = estimate_period_amplitude(path, rep.transient_end, t_end);
    rep.stabilized = true;
    rep.longtime_period = window.period;
    rep.longtime_amplitude = window.amplitude;
    return rep;
}

std::vector<SweepEntry> gamma_sweep(const OscillatorParams& base,
                                    const std::vector<double>& gammas, double q0, double v0,
                                    double t_end, std::size_t n, unsigned jobs) {
    require(!gammas.empty(), ErrorKind::InvalidArgument, "sweep: empty gamma list");
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        require(gammas[i] > 0.0, ErrorKind::InvalidArgument, "sweep: gammas must be positive");
        require(i == 0 || gammas[i] > gammas[i - 1], ErrorKind::InvalidArgument,
                "sweep: gammas must be increasing");
    }
    const Grid grid = Grid::uniform(t_end, n);
    std::vector<double> local(n);
    for (std::size_t i = 0; i < n; ++i) local[i] = local_reference(base, q0, v0, grid[i]);
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) sq[i] = local[i] * local[i];
    const double local_norm = std::sqrt(integrate(QuadratureRule::Trapezoid, grid, sq));

    std::vector<SweepEntry> out(gammas.size());
    const auto run = [&](std::size_t idx) {
        SweepEntry& e = out[idx];
        e.gamma = gammas[idx];
        e.local_norm = local_norm;
        try {
            OscillatorParams p = base;
            p.gamma = gammas[idx];
            const auto sol = solve_closed_form(p, q0, v0, t_end);
            const auto q = sample_solution(sol, grid, 0);
            std::vector<double> d2(n);
            for (std::size_t i = 0; i < n; ++i) d2[i] = (q[i] - local[i]) * (q[i] - local[i]);
            e.l2_distance = std::sqrt(integrate(QuadratureRule::Trapezoid, grid, d2));
            e.initial_mismatch = std::max(std::abs(eval_solution(sol, 0.0, 0) - q0),
                                          std::abs(eval_solution(sol, 0.0, 1) - v0));
            e.stages = detect_stages(sol, t_end);
        } catch (const Error& err) {
            e.error = err.what();
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(gammas.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < gammas.size(); ++i) run(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < gammas.size(); i = next++) run(i);
        });
    }
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace tnl

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <tnl/action.hpp>
#include <tnl/closed_form.hpp>
#include <tnl/errors.hpp>
#include <tnl/lagrangian.hpp>

using namespace tnl;

namespace {

struct Modes {
    std::array<double, 4> a{}, b{};
    double q(double s) const {
        double v = 0.0;
        for (int j = 0; j < 4; ++j) v += a[j] * std::sin((j + 1) * s) + b[j] * std::cos(0.6 * (j + 1) * s);
        return v;
    }
    double qdot(double s) const {
        double v = 0.0;
        for (int j = 0; j < 4; ++j)
            v += a[j] * (j + 1) * std::cos((j + 1) * s) - b[j] * 0.6 * (j + 1) * std::sin(0.6 * (j + 1) * s);
        return v;
    }
};

std::vector<Modes> random_modes(int count, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    std::vector<Modes> out(count);
    for (auto& m : out)
        for (int j = 0; j < 4; ++j) {
            m.a[j] = U(rng);
            m.b[j] = U(rng);
        }
    return out;
}

GeneralLagrangianSpec full_spec() {
    GeneralLagrangianSpec g;
    g.m = 1.3;
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

}  // namespace

TEST(Reduce, NothingToReduce) {
    GeneralLagrangianSpec g;
    g.m = 2.0;
    g.A = 0.1;
    g.B = -0.2;
    g.C = 0.3;
    g.D = -0.4;
    g.F = 0.5;
    g.kernel = MemoryKernel::exponential(0.8);
    const auto r = reduce_general(g, 3.0);
    for (double s : {0.0, 1.1, 3.0}) {
        EXPECT_EQ(r.a(s), 0.1);
        EXPECT_EQ(r.b(s), -0.2);
        EXPECT_EQ(r.c(s), 0.3);
        EXPECT_EQ(r.d(s), -0.4);
        EXPECT_EQ(r.f(s), 0.5);
    }
    EXPECT_FALSE(r.has_couplings());
    EXPECT_EQ(r.remainder(1.3, -0.7), 0.0);
}

TEST(Reduce, OscillatorIsAlreadyReduced) {
    const OscillatorParams p{1.5, 2.0, 3.0, 0.9};
    const auto r = to_reduced(p);
    EXPECT_EQ(r.a(0.5), 0.0);
    EXPECT_EQ(r.c(0.5), 0.0);
    EXPECT_EQ(r.d(0.5), 0.0);
    EXPECT_EQ(r.b(0.5), -1.0);
    EXPECT_EQ(r.f(0.5), -3.0);

    GeneralLagrangianSpec g;
    g.m = 1.5;
    g.B = -1.0;
    g.F = -3.0;
    g.kernel = p.kernel();
    const auto rg = reduce_general(g, 2.0);
    EXPECT_EQ(rg.b(0.3), -1.0);
    EXPECT_EQ(rg.f(0.3), -3.0);
}

TEST(Reduce, NonExponentialKernelUnsupported) {
    GeneralLagrangianSpec g;
    g.E = 1.0;
    g.kernel = MemoryKernel::dirac();
    try {
        reduce_general(g, 1.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedKernel);
    }
}

// Direct double-integral quadrature of both forms on smooth paths.
TEST(Reduce, ActionEqualityOnTwentyRandomPaths) {
    const double T = 2.0;
    for (const auto& spec : {full_spec(), [] {
             auto g = full_spec();
             g.A = g.B = g.C = g.D = g.F = g.G = g.H = 0.0;
             g.E = 1.0;
             g.kernel = MemoryKernel::exponential(1.0);
             return g;
         }()}) {
        const auto reduced = reduce_general(spec, T);
        for (const auto& m : random_modes(20, 5)) {
            const SmoothPath p{[&](double s) { return m.q(s); }, [&](double s) { return m.qdot(s); }};
            const double sg = action_smooth(spec, p, T);
            const double sr = action_smooth(reduced, p, T);
            EXPECT_LE(std::abs(sg - sr), 1e-8 * std::abs(sg));
        }
    }
}

TEST(Reduce, EachDoubleIntegralTermSeparately) {
    const double T = 1.7;
    const auto m = random_modes(1, 99)[0];
    const SmoothPath p{[&](double s) { return m.q(s); }, [&](double s) { return m.qdot(s); }};
    for (int term = 0; term < 3; ++term) {
        GeneralLagrangianSpec g;
        g.kernel = MemoryKernel::exponential(2.3);
        (term == 0 ? g.E : term == 1 ? g.G : g.H) = 0.9;
        const double sg = action_smooth(g, p, T);
        const double sr = action_smooth(reduce_general(g, T), p, T);
        EXPECT_LE(std::abs(sg - sr), 1e-10 * std::max(1.0, std::abs(sg))) << "term " << term;
    }
}

TEST(Action, ZeroPath) {
    const OscillatorParams p{1.0, 1.0, 2.0, 1.0};
    const auto g = make_uniform_grid(1.0, 101);
    EXPECT_EQ(action(p, Path::zero(g), QuadratureRule::Trapezoid), 0.0);
}

TEST(Action, ConstantPathOscillator) {
    const OscillatorParams p{1.0, 1.0, 2.0, 1.0};
    const double exact = -0.5 - std::exp(-1.0);
    EXPECT_NEAR(exact, -0.867879, 1e-6);
    double prev = 0.0;
    for (std::size_t n : {101, 201, 401}) {
        const auto g = make_uniform_grid(1.0, n);
        const double s = action(p, Path::sample(g, [](double) { return 1.0; }), QuadratureRule::Trapezoid);
        const double err = std::abs(s - exact);
        EXPECT_LE(err, 1e-4);
        if (prev > 0.0) {
            EXPECT_NEAR(prev / err, 4.0, 0.1);
        }
        prev = err;
    }
    const auto g = make_uniform_grid(1.0, 401);
    EXPECT_NEAR(action(p, Path::sample(g, [](double) { return 1.0; }), QuadratureRule::Simpson), exact, 1e-5);
}

TEST(Action, FreeParticleStraightLine) {
    const OscillatorParams p{1.0, 0.0, 0.0, 1.0};
    const auto g = make_uniform_grid(1.0, 51);
    const auto line = Path::sample(g, [](double s) { return s; });
    EXPECT_NEAR(action(p, line, QuadratureRule::Trapezoid), 0.5, 1e-14);
    EXPECT_NEAR(action(p, line, QuadratureRule::Simpson), 0.5, 1e-14);
}

TEST(Action, QuadraticScaling) {
    auto spec = full_spec();
    spec.C = spec.D = 0.0;
    const auto g = make_uniform_grid(2.0, 201);
    const auto m = random_modes(1, 3)[0];
    const auto path = Path::sample(g, [&](double s) { return m.q(s); });
    std::vector<double> scaled(path.q().begin(), path.q().end());
    for (double& x : scaled) x *= 2.5;
    const double s1 = action(spec, path, QuadratureRule::Trapezoid);
    const double s2 = action(spec, path.with_values(scaled), QuadratureRule::Trapezoid);
    EXPECT_NEAR(s2, 6.25 * s1, 1e-12 * std::abs(s2));
}

TEST(Action, GeneralMatchesReducedOnGrid) {
    // On a grid the two forms agree only to discretisation accuracy.
    const auto spec = full_spec();
    const auto m = random_modes(1, 8)[0];
    double prev = 0.0;
    for (std::size_t n : {201, 401, 801}) {
        const auto g = make_uniform_grid(2.0, n);
        const auto path = Path::sample(g, [&](double s) { return m.q(s); });
        const double d = std::abs(action(spec, path, QuadratureRule::Trapezoid) -
                                  action(reduce_general(spec, 2.0), path, QuadratureRule::Trapezoid));
        if (prev > 0.0) {
            EXPECT_GT(prev / d, 3.0);
        }
        prev = d;
    }
}

TEST(Action, InputMismatchRejected) {
    const auto g = make_uniform_grid(1.0, 12);
    const auto spec = to_reduced({1.0, 1.0, 1.0, 1.0});
    EXPECT_THROW(action_qv(spec, g, std::vector<double>(12, 0.0), std::vector<double>(11, 0.0),
                           QuadratureRule::Trapezoid),
                 Error);
    // Simpson needs an odd node count.
    EXPECT_THROW(action(spec, Path::zero(g), QuadratureRule::Simpson), Error);
}

TEST(FunctionalGradient, RejectsNonPositiveStep) {
    const auto g = make_uniform_grid(1.0, 11);
    EXPECT_THROW(functional_gradient(OscillatorParams{}, Path::zero(g), QuadratureRule::Trapezoid, 0.0), Error);
}

TEST(FunctionalGradient, FreeParticleStraightLine) {
    const OscillatorParams p{1.0, 0.0, 0.0, 1.0};
    const auto g = make_uniform_grid(1.0, 201);
    const auto fg = functional_gradient(p, Path::sample(g, [](double s) { return 2.0 * s - 0.3; }),
                                        QuadratureRule::Trapezoid, 1e-6);
    for (std::size_t i = fg.first_clean; i <= fg.last_clean; ++i) EXPECT_LE(std::abs(fg.g[i]), 1e-6);
}

TEST(FunctionalGradient, LocalOscillatorExactSolution) {
    const OscillatorParams p{1.0, 4.0, 0.0, 1.0};
    double prev = 0.0;
    for (std::size_t n : {101, 201, 401}) {
        const auto g = make_uniform_grid(3.0, n);
        const auto fg = functional_gradient(p, Path::sample(g, [](double s) { return std::sin(2.0 * s); }),
                                            QuadratureRule::Trapezoid, 1e-2);
        double worst = 0.0;
        for (std::size_t i = fg.first_clean; i <= fg.last_clean; ++i) worst = std::max(worst, std::abs(fg.g[i]));
        if (prev > 0.0) {
            EXPECT_NEAR(prev / worst, 4.0, 0.3);
        }
        prev = worst;
    }
}

TEST(FunctionalGradient, ClosedFormPathSecondOrder) {
    const OscillatorParams p{1.0, 1.0, 2.0, 1.0};
    const auto sol = solve_closed_form(p, 0.0, 1.0, 10.0);
    std::vector<double> worst;
    for (std::size_t n : {501, 1001}) {
        const auto g = make_uniform_grid(10.0, n);
        const auto fg = functional_gradient(p, sample_path(sol, g), QuadratureRule::Trapezoid, 1e-2);
        double w = 0.0;
        for (std::size_t i = fg.first_clean; i <= fg.last_clean; ++i) w = std::max(w, std::abs(fg.g[i]));
        worst.push_back(w);
    }
    EXPECT_NEAR(worst[0] / worst[1], 4.0, 0.3);
}

TEST(FunctionalGradient, VelocityGradientIsMomentum) {
    // delta S / delta qdot = m qdot + A~ q + C~, probed with independent (q, qdot) samples.
    auto spec = ReducedLagrangianSpec::constant(1.0, 1.0, -0.3, 2.0, 0.1, -0.5, MemoryKernel::exponential(1.0));
    const auto g = make_uniform_grid(1.0, 51);
    const std::vector<double> q(51, 1.0), v(51, 0.0);
    const auto p = velocity_gradient(spec, g, q, v, QuadratureRule::Trapezoid, 1e-3);
    for (std::size_t i = 1; i + 1 < 51; ++i) EXPECT_NEAR(p[i], 3.0, 1e-9);
}

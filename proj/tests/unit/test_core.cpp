#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <tnl/errors.hpp>
#include <tnl/grid.hpp>
#include <tnl/kernel.hpp>
#include <tnl/quadrature.hpp>

using namespace tnl;

namespace {

std::vector<double> sample(const Grid& g, double (*f)(double)) {
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = f(g[i]);
    return v;
}

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InternalConsistency;
}

}  // namespace

TEST(Grid, FiveNodesOnUnitInterval) {
    const auto g = make_uniform_grid(1.0, 5);
    const std::vector<double> expect{0.0, 0.25, 0.5, 0.75, 1.0};
    ASSERT_EQ(g.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_DOUBLE_EQ(g[i], expect[i]);
    EXPECT_DOUBLE_EQ(g.step(), 0.25);
}

TEST(Grid, ThreeNodes) {
    const auto g = make_uniform_grid(2.0, 3);
    EXPECT_DOUBLE_EQ(g[0], 0.0);
    EXPECT_DOUBLE_EQ(g[1], 1.0);
    EXPECT_DOUBLE_EQ(g[2], 2.0);
}

TEST(Grid, RejectsBadArguments) {
    EXPECT_EQ(kind_of([] { make_uniform_grid(0.0, 5); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { make_uniform_grid(-1.0, 5); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { make_uniform_grid(1.0, 2); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { make_uniform_grid(NAN, 5); }), ErrorKind::InvalidArgument);
}

TEST(Grid, UniformSpacingInvariant) {
    const auto g = make_uniform_grid(7.3, 1237);
    EXPECT_EQ(g[0], 0.0);
    EXPECT_EQ(g[g.size() - 1], 7.3);
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        EXPECT_GT(g[i + 1], g[i]);
        EXPECT_LE(std::abs(g[i + 1] - g[i] - g.step()), 1e-12 * 7.3);
    }
}

TEST(Path, RejectsNonFiniteAndLengthMismatch) {
    const auto g = make_uniform_grid(1.0, 4);
    EXPECT_EQ(kind_of([&] { Path(g, {0.0, 1.0, NAN, 0.0}); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([&] { Path(g, {0.0, 1.0}); }), ErrorKind::InvalidArgument);
}

TEST(Derivatives, ExactOnQuadratics) {
    const auto g = make_uniform_grid(2.0, 21);
    const auto q = sample(g, [](double s) { return 3.0 * s * s - s + 2.0; });
    const auto d1 = first_derivative(g, q);
    const auto d2 = second_derivative(g, q);
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(d1[i], 6.0 * g[i] - 1.0, 1e-11);
    for (std::size_t i = 1; i + 1 < g.size(); ++i) EXPECT_NEAR(d2[i], 6.0, 1e-9);
}

TEST(Kernel, ExponentialValues) {
    EXPECT_DOUBLE_EQ(kernel_eval(MemoryKernel::exponential(1.0), 0.3, 0.3), 0.5);
    EXPECT_NEAR(kernel_eval(MemoryKernel::exponential(2.0), 1.5, 0.5), std::exp(-2.0), 1e-15);
    EXPECT_NEAR(kernel_eval(MemoryKernel::exponential(2.0), 1.5, 0.5), 0.135335, 1e-6);
}

TEST(Kernel, SymmetryOnRandomPairs) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0.0, 3.0);
    const auto g = make_uniform_grid(3.0, 31);
    std::vector<double> table(31 * 31);
    for (std::size_t i = 0; i < 31; ++i)
        for (std::size_t j = 0; j < 31; ++j) table[i * 31 + j] = std::exp(-std::abs(g[i] - g[j])) * (1.0 + g[i] * g[j]);
    const std::vector<MemoryKernel> kernels{MemoryKernel::exponential(0.7), MemoryKernel::exponential(40.0),
                                            MemoryKernel::tabulated(g, table)};
    for (const auto& k : kernels) {
        EXPECT_LE(k.asymmetry(), 1e-12);
        for (int r = 0; r < 200; ++r) {
            const double a = U(rng), b = U(rng);
            const double kab = kernel_eval(k, a, b), kba = kernel_eval(k, b, a);
            EXPECT_NEAR(kab, kba, 1e-12);
            EXPECT_GE(kab, 0.0);
        }
    }
    EXPECT_EQ(kernel_eval(kernels[0], 0.4, 2.9), kernel_eval(kernels[0], 2.9, 0.4));
}

TEST(Kernel, TabulatedBilinearAndDomain) {
    const auto g = make_uniform_grid(1.0, 3);
    // alpha(t, s) = t + 2 s is reproduced exactly by bilinear interpolation.
    std::vector<double> table(9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) table[i * 3 + j] = g[i] + 2.0 * g[j];
    const auto k = MemoryKernel::tabulated(g, table);
    EXPECT_NEAR(k(0.3, 0.8), 0.3 + 1.6, 1e-14);
    EXPECT_NEAR(k.asymmetry(), 1.0, 1e-14);
    EXPECT_EQ(kind_of([&] { k(1.2, 0.5); }), ErrorKind::Domain);
    EXPECT_EQ(kind_of([&] { k(0.5, -0.1); }), ErrorKind::Domain);
}

TEST(Kernel, InvalidConstruction) {
    EXPECT_EQ(kind_of([] { MemoryKernel::exponential(0.0); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { MemoryKernel::tabulated(make_uniform_grid(1.0, 3), {1.0, 2.0}); }),
              ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { MemoryKernel::dirac()(0.1, 0.1); }), ErrorKind::UnsupportedKernel);
}

TEST(Kernel, MemoryRecursionMatchesDirectSum) {
    const auto g = make_uniform_grid(2.0, 41);
    const auto q = sample(g, [](double s) { return std::sin(3.0 * s) + s; });
    const auto k = MemoryKernel::exponential(1.7);
    const auto pre = prefix_memory(k, g, q);
    const auto full = full_memory(k, g, q);
    const double h = g.step();
    for (std::size_t i = 0; i < g.size(); ++i) {
        double p = 0.0, f = 0.0;
        for (std::size_t j = 0; j < g.size(); ++j) {
            const double w = (j == 0 || j == g.size() - 1) ? 0.5 * h : h;
            f += w * k(g[i], g[j]) * q[j];
            if (j <= i) {
                const double wp = (i == 0) ? 0.0 : ((j == 0 || j == i) ? 0.5 * h : h);
                p += wp * k(g[i], g[j]) * q[j];
            }
        }
        EXPECT_NEAR(pre[i], p, 1e-13);
        EXPECT_NEAR(full[i], f, 1e-13);
    }
}

TEST(Kernel, DiracMemoryIsLocal) {
    const auto g = make_uniform_grid(1.0, 11);
    const auto q = sample(g, [](double s) { return 1.0 + s * s; });
    const auto full = full_memory(MemoryKernel::dirac(), g, q);
    const auto pre = prefix_memory(MemoryKernel::dirac(), g, q);
    for (std::size_t i = 1; i + 1 < g.size(); ++i) {
        EXPECT_DOUBLE_EQ(full[i], q[i]);
        EXPECT_DOUBLE_EQ(pre[i], 0.5 * q[i]);
    }
    // One-sided at the ends of the interval.
    EXPECT_DOUBLE_EQ(full[0], 0.5 * q[0]);
    EXPECT_DOUBLE_EQ(full[10], 0.5 * q[10]);
}

TEST(Kernel, ExponentialApproachesDiracForLargeGamma) {
    const auto g = make_uniform_grid(1.0, 20001);
    const auto q = sample(g, [](double s) { return std::cos(2.0 * s); });
    const auto full = full_memory(MemoryKernel::exponential(2000.0), g, q);
    const std::size_t mid = 10000;
    EXPECT_NEAR(full[mid], q[mid], 2e-3);
    EXPECT_NEAR(full[0], 0.5 * q[0], 2e-3);
}

TEST(Quadrature, WeightsSumAndPositivity) {
    const auto g = make_uniform_grid(3.5, 101);
    for (auto rule : {QuadratureRule::Trapezoid, QuadratureRule::Simpson}) {
        const auto w = quadrature_weights(rule, g);
        double sum = 0.0;
        for (double x : w) {
            EXPECT_GT(x, 0.0);
            sum += x;
        }
        EXPECT_NEAR(sum, 3.5, 1e-12 * 3.5);
    }
}

TEST(Quadrature, ExactCases) {
    const auto g5 = make_uniform_grid(1.0, 5);
    EXPECT_DOUBLE_EQ(integrate(QuadratureRule::Trapezoid, g5, std::vector<double>(5, 1.0)), 1.0);
    EXPECT_DOUBLE_EQ(integrate(QuadratureRule::Trapezoid, g5, sample(g5, [](double s) { return s; })), 0.5);
    EXPECT_NEAR(integrate(QuadratureRule::Simpson, g5, sample(g5, [](double s) { return s * s; })), 1.0 / 3.0,
                1e-15);
    EXPECT_NEAR(integrate(QuadratureRule::Simpson, g5, sample(g5, [](double s) { return s * s * s - s; })),
                0.25 - 0.5, 1e-15);
}

TEST(Quadrature, Errors) {
    const auto g4 = make_uniform_grid(1.0, 4);
    EXPECT_EQ(kind_of([&] { integrate(QuadratureRule::Simpson, g4, std::vector<double>(4, 1.0)); }),
              ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([&] { integrate(QuadratureRule::Trapezoid, g4, std::vector<double>(3, 1.0)); }),
              ErrorKind::InvalidArgument);
}

TEST(Quadrature, RichardsonFactors) {
    const double exact = 1.0 - std::cos(2.0);  // \int_0^2 sin
    double prev_t = 0.0, prev_s = 0.0;
    for (std::size_t n : {17, 33, 65, 129}) {
        const auto g = make_uniform_grid(2.0, n);
        const auto f = sample(g, [](double s) { return std::sin(s); });
        const double et = std::abs(integrate(QuadratureRule::Trapezoid, g, f) - exact);
        const double es = std::abs(integrate(QuadratureRule::Simpson, g, f) - exact);
        if (prev_t > 0.0) {
            EXPECT_NEAR(prev_t / et, 4.0, 0.05);
            EXPECT_NEAR(prev_s / es, 16.0, 0.3);
        }
        prev_t = et;
        prev_s = es;
    }
}

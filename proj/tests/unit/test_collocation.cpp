#include <cmath>

#include <gtest/gtest.h>

#include <tnl/closed_form.hpp>
#include <tnl/collocation.hpp>
#include <tnl/errors.hpp>
#include <tnl/variational.hpp>

using namespace tnl;

namespace {

const OscillatorParams kBase{1.0, 1.0, 2.0, 1.0};

double linf_diff(const Path& a, const Path& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

TEST(Collocation, ZeroDataGivesZeroPath) {
    const auto path = solve_integro_ivp(kBase, 0.0, 0.0, 5.0, 101);
    for (double q : path.q()) EXPECT_EQ(q, 0.0);
    const auto banded = solve_integro_ivp_banded(kBase, 0.0, 0.0, 5.0, 101);
    for (double q : banded.q()) EXPECT_EQ(q, 0.0);
}

TEST(Collocation, LocalOscillatorIsSine) {
    const OscillatorParams p{1.0, 1.0, 0.0, 1.0};
    const auto path = solve_integro_ivp(p, 0.0, 1.0, 5.0, 1001);
    double err = 0.0;
    for (std::size_t i = 0; i < path.size(); ++i) err = std::max(err, std::abs(path[i] - std::sin(path.grid()[i])));
    EXPECT_LE(err, 1e-4);
}

TEST(Collocation, SystemShape) {
    const auto g = make_uniform_grid(2.0, 21);
    const auto sys = assemble_collocation(to_reduced(kBase), g, 0.5, SecondCondition::InitialVelocity, 1.0);
    EXPECT_EQ(sys.matrix.rows(), 21);
    EXPECT_EQ(sys.matrix.cols(), 21);
    EXPECT_EQ(sys.rhs.size(), 21);
    EXPECT_DOUBLE_EQ(sys.rhs[static_cast<Eigen::Index>(sys.condition_rows[0])], 0.5);
}

TEST(Collocation, AgreesWithClosedForm) {
    const double t = 10.0;
    const auto sol = solve_closed_form(kBase, 0.0, 1.0, t);
    const auto path = solve_integro_ivp_banded(kBase, 0.0, 1.0, t, 4001);
    const auto exact = sample_path(sol, path.grid());
    double scale = 0.0;
    for (double q : exact.q()) scale = std::max(scale, std::abs(q));
    EXPECT_LE(linf_diff(path, exact), 1e-3 * scale);
}

TEST(Collocation, SecondOrderAgainstClosedForm) {
    const double t = 10.0;
    const auto sol = solve_closed_form(kBase, 0.0, 1.0, t);
    std::vector<double> err;
    std::vector<double> h;
    for (std::size_t n : {1001, 2001, 4001}) {
        const auto path = solve_integro_ivp_banded(kBase, 0.0, 1.0, t, n);
        err.push_back(linf_diff(path, sample_path(sol, path.grid())));
        h.push_back(path.grid().step());
    }
    EXPECT_NEAR(observed_order(h[0], err[0], h[1], err[1]), 2.0, 0.2);
    EXPECT_NEAR(observed_order(h[1], err[1], h[2], err[2]), 2.0, 0.2);
}

TEST(Collocation, BandedMatchesDense) {
    for (const OscillatorParams& p : {kBase, OscillatorParams{2.0, 0.5, 7.0, 0.3}}) {
        const auto dense = solve_integro_ivp(p, 0.2, -1.0, 6.0, 401);
        const auto banded = solve_integro_ivp_banded(p, 0.2, -1.0, 6.0, 401);
        EXPECT_LE(linf_diff(dense, banded), 1e-10);
    }
}

TEST(Collocation, BoundaryValueRoundTrip) {
    const double t = 4.0;
    const auto ivp = solve_integro_ivp(kBase, 0.1, 0.8, t, 401);
    const double qbar = ivp[ivp.size() - 1];
    const auto bvp = solve_integro_bvp(kBase, 0.1, qbar, t, 401);
    EXPECT_LE(linf_diff(ivp, bvp), 1e-8);
}

TEST(Collocation, SelfConvergence) {
    const auto est = estimate_convergence(
        [](std::size_t n) { return solve_integro_ivp_banded(kBase, 0.0, 1.0, 10.0, n); }, {501, 1001, 2001, 4001});
    EXPECT_FALSE(est.inconclusive);
    EXPECT_EQ(est.differences.size(), 3u);
    EXPECT_NEAR(est.order, 2.0, 0.2);
}

TEST(Collocation, SelfConvergenceInconclusiveForZero) {
    const auto est = estimate_convergence(
        [](std::size_t n) { return solve_integro_ivp_banded(kBase, 0.0, 0.0, 10.0, n); }, {101, 201, 401});
    EXPECT_TRUE(est.inconclusive);
}

TEST(Collocation, NonNestedSizesRejected) {
    EXPECT_THROW(estimate_convergence(
                     [](std::size_t n) { return solve_integro_ivp_banded(kBase, 0.0, 1.0, 1.0, n); }, {101, 150}),
                 Error);
}

TEST(Collocation, ObservedOrder) {
    EXPECT_DOUBLE_EQ(observed_order(0.2, 4.0, 0.1, 1.0), 2.0);
    EXPECT_DOUBLE_EQ(observed_order(0.2, 16.0, 0.1, 1.0), 4.0);
}

TEST(Collocation, GeneralSpecSolves) {
    GeneralLagrangianSpec g;
    g.B = -0.5;
    g.F = -1.0;
    g.kernel = MemoryKernel::exponential(1.0);
    const auto reduced = reduce_general(g, 3.0);
    const auto path = solve_integro_ivp(reduced, 0.0, 1.0, 3.0, 301);
    const auto direct = solve_integro_ivp(OscillatorParams{1.0, 1.0, 1.0, 1.0}, 0.0, 1.0, 3.0, 301);
    EXPECT_LE(linf_diff(path, direct), 1e-10);
}

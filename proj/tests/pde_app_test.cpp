#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lcjdt/pde_app.hpp"

using namespace lcjdt;

namespace {
const JacobiParams kP(0.5, -0.5);
const CanonicalMatrix kM(1, 1, 1, 2);

const LcjdtContext& ctx() {
    static const LcjdtContext c(kP, kM);
    return c;
}

SampledFunction initial_xgauss() { return sample_function(ctx().half_spatial(), probe_xgauss); }
}  // namespace

TEST_CASE("homogeneous solve recovers the initial data at t = 0") {
    HeatProblem prob{initial_xgauss(), nullptr, {0.0, 0.5, 1.0}};
    const HeatSolution sol = heat_solve(prob, ctx());
    REQUIRE(sol.slices.size() == 3);
    CHECK(relative_l2_error(sol.slices[0], prob.initial, kP) < 1e-3);

    // pointwise synthesis agrees with the grid slices
    const double x = sol.slices[1].grid.nodes[40];
    CHECK(std::abs(heat_value(sol, ctx(), x, 0.5) - sol.slices[1].values[40]) < 1e-12);
}

TEST_CASE("zero initial data stays zero") {
    SampledFunction zero = initial_xgauss();
    for (auto& v : zero.values) v = 0.0;
    HeatProblem prob{zero, nullptr, {0.0, 0.7}};
    const HeatSolution sol = heat_solve(prob, ctx());
    for (const auto& slice : sol.slices)
        for (const Complex& v : slice.values) CHECK(v == Complex(0.0, 0.0));
}

TEST_CASE("spectral energy is conserved") {
    HeatProblem prob{initial_xgauss(), nullptr, {0.0, 0.5, 1.0}};
    const HeatSolution sol = heat_solve(prob, ctx());
    const double e0 = spectral_energy(sol, ctx(), 0.0);
    CHECK(e0 > 0.0);
    for (double t : {0.5, 1.0})
        CHECK(std::abs(spectral_energy(sol, ctx(), t) - e0) / e0 < 1e-10);
}

TEST_CASE("PDE residual under the adopted convention") {
    auto residual_with_dt = [&](double dt) {
        HeatProblem prob{initial_xgauss(), nullptr, {0.5 - dt, 0.5, 0.5 + dt}};
        const HeatSolution sol = heat_solve(prob, ctx());
        return heat_residual(sol, ctx(), 0.5, 1.0);
    };
    const HeatResidual r = residual_with_dt(0.01);
    CHECK(r.adopted < 1e-3);
    CHECK(r.hilbert > 10.0 * r.adopted);  // the Hilbert-adjoint reading does not hold

    const HeatResidual rh = residual_with_dt(0.005);
    CHECK(r.adopted / rh.adopted >= 2.0);  // second-order difference in t

    // t must be interior and solved
    HeatProblem prob{initial_xgauss(), nullptr, {0.0, 0.5, 1.0}};
    const HeatSolution sol = heat_solve(prob, ctx());
    CHECK_THROWS_AS(heat_residual(sol, ctx(), 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(heat_residual(sol, ctx(), 0.25, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(heat_residual(sol, ctx(), 0.5, -1.0), std::domain_error);
}

TEST_CASE("solver preconditions") {
    HeatProblem prob{initial_xgauss(), nullptr, {0.0, 0.5}};
    HeatProblem sourced = prob;
    sourced.source = [](double, double) { return Complex(0, 0); };
    CHECK_THROWS_AS(heat_solve(sourced, ctx()), std::invalid_argument);
    CHECK_THROWS_AS(nonhom_solve(prob, ctx()), std::invalid_argument);

    HeatProblem unordered = prob;
    unordered.times = {0.5, 0.2};
    CHECK_THROWS_AS(heat_solve(unordered, ctx()), std::invalid_argument);

    // c = 0 has no spectral variable -lambda/c
    static const LcjdtContext plain(kP, CanonicalMatrix(1, 2, 0, 1));
    HeatProblem pp{sample_function(plain.half_spatial(), probe_xgauss), nullptr, {0.0, 0.5}};
    CHECK_THROWS_AS(heat_solve(pp, plain), std::domain_error);
}

TEST_CASE("nonhomogeneous solve with the cosine-modulated source") {
    auto source = [](double x, double t) { return Complex(std::exp(-x * x) * std::cos(t), 0.0); };
    HeatProblem prob{initial_xgauss(), source, {0.0, 0.5, 1.0}};
    const HeatSolution sol = nonhom_solve(prob, ctx(), 200);
    CHECK(relative_l2_error(sol.slices[0], prob.initial, kP) < 1e-3);

    const OdeResidual ode = duhamel_ode_residual(sol, ctx(), 0.5);
    CHECK(ode.adopted < 1e-4);
    CHECK(ode.flipped > 10.0 * ode.adopted);

    // halving the tau step at least halves the residual
    const HeatSolution fine = nonhom_solve(prob, ctx(), 400);
    CHECK(ode.adopted / duhamel_ode_residual(fine, ctx(), 0.5).adopted >= 2.0);

    // output times must sit on the partition
    HeatProblem off = prob;
    off.times = {0.0, 0.5001234567, 1.0};
    CHECK_THROWS_AS(nonhom_solve(off, ctx(), 200), std::invalid_argument);
}

TEST_CASE("zero source degenerates to the homogeneous solver") {
    HeatProblem hom{initial_xgauss(), nullptr, {0.0, 0.5, 1.0}};
    const HeatSolution a = heat_solve(hom, ctx());

    HeatProblem zsrc = hom;
    zsrc.source = [](double, double) { return Complex(0.0, 0.0); };
    const HeatSolution b = nonhom_solve(zsrc, ctx(), 200);

    double peak = 0.0, diff = 0.0;
    for (std::size_t k = 0; k < a.slices.size(); ++k)
        for (std::size_t i = 0; i < a.slices[k].values.size(); ++i) {
            peak = std::max(peak, std::abs(a.slices[k].values[i]));
            diff = std::max(diff, std::abs(a.slices[k].values[i] - b.slices[k].values[i]));
        }
    CHECK(diff / peak < 1e-10);
}

#ifndef LCJDT_PDE_APP_HPP
#define LCJDT_PDE_APP_HPP

// Heat-type evolution on the half-line x > 0, solved spectrally.
//
// Homogeneous problem: initial data h on x > 0 with v(0,t) = 0 is extended
// oddly, chirped (g = exp(-i a x^2/(2b)) h), transformed on the half-line
// with the odd part of the kernel bookkept explicitly, and synthesized as
//   v(x,t) = exp(i a x^2/(2b)) * sum_j Fg_j conj(psi_{eps_j}(x)) e^{-i eps_j t} w_j.
//
// Nonhomogeneous problem (source g(x,t)): the transform-domain coefficients
// obey dy/dt = -i eps y + Ghat(t); the variation-of-constants integral is
// accumulated with the composite trapezoid rule on a uniform tau partition.
//
// The adjoint in the model equation is adopted as L - i(a/b)x (the operator
// whose transform action is multiplication by -i eps); residual checkers also
// report the Hilbert-adjoint convention -L^M alongside.

#include "lcjdt/lcjdt.hpp"

namespace lcjdt {

struct HeatProblem {
    SampledFunction initial;                         // sampled on the positive half-grid
    std::function<Complex(double, double)> source;   // g(x, t); empty = homogeneous
    std::vector<double> times;                       // ascending, nonnegative
};

struct HeatSolution {
    std::vector<double> times;
    std::vector<SampledFunction> slices;       // one per time, on the half-grid
    std::vector<Complex> spectral_initial;     // transform of the chirped odd extension
    // nonhomogeneous bookkeeping (empty for the homogeneous solver)
    double tau_step = 0.0;
    std::vector<double> taus;
    std::vector<std::vector<Complex>> source_hat;  // Ghat[m][j] on the tau partition
    std::vector<std::vector<Complex>> duhamel;     // trapezoid prefix sums P[m][j]
};

struct HeatResidual {
    double adopted;  // |dv/dt - (L - i(a/b)x) v|
    double hilbert;  // |dv/dt + L^M v|
};

struct OdeResidual {
    double adopted;  // max_j |dy/dt + i eps y - Ghat|
    double flipped;  // max_j |dy/dt - i eps y - Ghat|
};

// Homogeneous solve. Requires an empty source, c != 0, and a both-signs
// spectral grid.
HeatSolution heat_solve(const HeatProblem& prob, const LcjdtContext& ctx);

// Pointwise value of the homogeneous solution at any (x, t).
Complex heat_value(const HeatSolution& sol, const LcjdtContext& ctx, double x, double t);

// PDE residual at (x, t), t an interior solved time; time derivative by a
// three-point difference over the adjacent solved times, spatial action with
// analytic kernel derivatives.
HeatResidual heat_residual(const HeatSolution& sol, const LcjdtContext& ctx, double t, double x);

// sum_j |F_j e^{-i eps_j t}|^2 w_j; constant in t up to rounding.
double spectral_energy(const HeatSolution& sol, const LcjdtContext& ctx, double t);

// Nonhomogeneous solve. Output times must sit on the tau partition; the
// partition is refined automatically when max|eps| * dtau > 0.5.
HeatSolution nonhom_solve(const HeatProblem& prob, const LcjdtContext& ctx,
                          int tau_per_unit = 200);

// Transform-domain residual of the evolution at the partition node nearest
// the interior time t.
OdeResidual duhamel_ode_residual(const HeatSolution& sol, const LcjdtContext& ctx, double t);

}  // namespace lcjdt

#endif

#include "lcjdt/pde_app.hpp"

#include <cmath>

namespace lcjdt {

namespace {

const Complex kI(0.0, 1.0);

void require_pde_context(const LcjdtContext& ctx) {
    if (ctx.jdt_branch())
        throw std::domain_error("heat solver: requires c != 0 (the spectral variable is -lambda/c)");
    bool has_negative = false;
    for (double e : ctx.spectral().epsilon) has_negative |= e < 0.0;
    if (!has_negative)
        throw std::invalid_argument("heat solver: requires a both-signs spectral grid");
}

void require_half_grid(const HeatProblem& prob, const LcjdtContext& ctx) {
    const SpatialGrid half = ctx.half_spatial();
    if (prob.initial.grid.nodes.size() != half.nodes.size())
        throw std::invalid_argument("heat solver: initial data not on the context half-grid");
    for (std::size_t i = 0; i < half.nodes.size(); ++i)
        if (std::abs(prob.initial.grid.nodes[i] - half.nodes[i]) > 1e-12)
            throw std::invalid_argument("heat solver: initial data not on the context half-grid");
    const double x_end = half.nodes.back();
    const double tail = std::abs(prob.initial.values.back()) * weight(x_end, ctx.params());
    if (!(tail < 1e-12))
        throw TruncationError("heat solver: initial data fails the decay precondition");
    if (prob.times.empty()) throw std::invalid_argument("heat solver: no output times");
    for (std::size_t k = 0; k < prob.times.size(); ++k) {
        if (prob.times[k] < 0.0) throw std::invalid_argument("heat solver: negative time");
        if (k > 0 && !(prob.times[k] > prob.times[k - 1]))
            throw std::invalid_argument("heat solver: times must be ascending");
    }
}

// Transform of the chirped odd extension of half-line samples: only the odd
// part of the kernel survives, psi(x) - psi(-x) = 2i Im psi(x).
std::vector<Complex> odd_halfline_transform(const std::vector<Complex>& half_values,
                                            const LcjdtContext& ctx) {
    const std::size_t nx = ctx.spatial().nodes.size();
    const std::size_t h0 = ctx.half_offset();
    const auto& table = ctx.kernel_table();
    const auto& aw = ctx.node_measure();
    const auto& chirp = ctx.node_chirp();

    std::vector<Complex> out(ctx.spectral().epsilon.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const Complex* row = table.data() + j * nx;
        Complex s(0.0, 0.0);
        for (std::size_t i = h0; i < nx; ++i)
            s += chirp[i] * half_values[i - h0] * Complex(0.0, 2.0 * row[i].imag()) * aw[i];
        out[j] = s;
    }
    return out;
}

// Synthesize coefficient vector y_j onto the half-grid through the table.
SampledFunction synthesize_half(const std::vector<Complex>& y, const LcjdtContext& ctx) {
    const std::size_t nx = ctx.spatial().nodes.size();
    const std::size_t h0 = ctx.half_offset();
    const auto& table = ctx.kernel_table();
    const auto& wts = ctx.spectral().weights;
    const auto& chirp = ctx.node_chirp();

    SampledFunction slice;
    slice.grid = ctx.half_spatial();
    slice.values.resize(nx - h0);
    for (std::size_t i = h0; i < nx; ++i) {
        Complex s(0.0, 0.0);
        for (std::size_t j = 0; j < y.size(); ++j)
            s += y[j] * std::conj(table[j * nx + i]) * wts[j];
        slice.values[i - h0] = std::conj(chirp[i]) * s;
    }
    return slice;
}

std::size_t locate_time(const std::vector<double>& times, double t) {
    for (std::size_t k = 0; k < times.size(); ++k)
        if (std::abs(times[k] - t) <= 1e-9 * std::max(1.0, std::abs(t))) return k;
    throw std::invalid_argument("heat residual: t is not a solved time");
}

}  // namespace

HeatSolution heat_solve(const HeatProblem& prob, const LcjdtContext& ctx) {
    if (prob.source) throw std::invalid_argument("heat_solve: source present; use nonhom_solve");
    require_pde_context(ctx);
    require_half_grid(prob, ctx);

    HeatSolution sol;
    sol.times = prob.times;
    sol.spectral_initial = odd_halfline_transform(prob.initial.values, ctx);

    const auto& eps = ctx.spectral().epsilon;
    std::vector<Complex> y(eps.size());
    for (double t : prob.times) {
        for (std::size_t j = 0; j < eps.size(); ++j)
            y[j] = sol.spectral_initial[j] * std::polar(1.0, -eps[j] * t);
        sol.slices.push_back(synthesize_half(y, ctx));
    }
    return sol;
}

Complex heat_value(const HeatSolution& sol, const LcjdtContext& ctx, double x, double t) {
    const auto& eps = ctx.spectral().epsilon;
    const auto& wts = ctx.spectral().weights;
    const CanonicalMatrix& m = ctx.matrix();
    Complex s(0.0, 0.0);
    for (std::size_t j = 0; j < eps.size(); ++j)
        s += sol.spectral_initial[j] * std::conj(jd_kernel(x, eps[j], ctx.params())) *
             std::polar(1.0, -eps[j] * t) * wts[j];
    return std::polar(1.0, m.a * x * x / (2.0 * m.b)) * s;
}

HeatResidual heat_residual(const HeatSolution& sol, const LcjdtContext& ctx, double t, double x) {
    if (!(x > 0.0)) throw std::domain_error("heat_residual: requires x > 0");
    const std::size_t k = locate_time(sol.times, t);
    if (k == 0 || k + 1 == sol.times.size())
        throw std::invalid_argument("heat_residual: t must be interior to the solved times");

    const JacobiParams& p = ctx.params();
    const CanonicalMatrix& m = ctx.matrix();
    const auto& eps = ctx.spectral().epsilon;
    const auto& wts = ctx.spectral().weights;

    // Kernel rows at +-x and the derivative row, reused across the three times.
    const std::size_t ne = eps.size();
    std::vector<Complex> row(ne), row_neg(ne), drow(ne);
    for (std::size_t j = 0; j < ne; ++j) {
        row[j] = std::conj(jd_kernel(x, eps[j], p)) * wts[j] * sol.spectral_initial[j];
        row_neg[j] = std::conj(jd_kernel(-x, eps[j], p)) * wts[j] * sol.spectral_initial[j];
        drow[j] = std::conj(jd_kernel_dx(x, eps[j], p)) * wts[j] * sol.spectral_initial[j];
    }
    const Complex chirp_pos = std::polar(1.0, m.a * x * x / (2.0 * m.b));
    auto at = [&](const std::vector<Complex>& r, double tau) {
        Complex s(0.0, 0.0);
        for (std::size_t j = 0; j < ne; ++j) s += r[j] * std::polar(1.0, -eps[j] * tau);
        return s;
    };

    const double t0 = sol.times[k - 1], t2 = sol.times[k + 1];
    const double h1 = t - t0, h2 = t2 - t;
    const Complex u_m = chirp_pos * at(row, t0);
    const Complex u = chirp_pos * at(row, t);
    const Complex u_p = chirp_pos * at(row, t2);
    // three-point derivative on a possibly nonuniform stencil
    const Complex dudt =
        (h1 * h1 * u_p + (h2 * h2 - h1 * h1) * u - h2 * h2 * u_m) / (h1 * h2 * (h1 + h2));

    const Complex s_val = at(row, t);                       // S(x, t)
    const Complex s_neg = at(row_neg, t);                   // S(-x, t)
    const Complex s_dx = at(drow, t);                       // dS/dx
    const Complex u_neg = chirp_pos * s_neg;                // chirp is even
    const Complex du = chirp_pos * (kI * (m.a / m.b) * x * s_val + s_dx);
    const Complex lam_u = du + weight_log_derivative(x, p) * 0.5 * (u - u_neg);
    const Complex chirp_term = kI * (m.a / m.b) * x * u;

    HeatResidual r;
    r.adopted = std::abs(dudt - (lam_u - chirp_term));
    r.hilbert = std::abs(dudt + (lam_u + chirp_term));
    return r;
}

double spectral_energy(const HeatSolution& sol, const LcjdtContext& ctx, double t) {
    const auto& eps = ctx.spectral().epsilon;
    const auto& wts = ctx.spectral().weights;
    double e = 0.0;
    for (std::size_t j = 0; j < eps.size(); ++j)
        e += std::norm(sol.spectral_initial[j] * std::polar(1.0, -eps[j] * t)) * wts[j];
    return e;
}

HeatSolution nonhom_solve(const HeatProblem& prob, const LcjdtContext& ctx, int tau_per_unit) {
    if (!prob.source) throw std::invalid_argument("nonhom_solve: source absent; use heat_solve");
    if (tau_per_unit < 1) throw std::invalid_argument("nonhom_solve: tau_per_unit must be positive");
    require_pde_context(ctx);
    require_half_grid(prob, ctx);

    const auto& eps = ctx.spectral().epsilon;
    double eps_max = 0.0;
    for (double e : eps) eps_max = std::max(eps_max, std::abs(e));
    double dtau = 1.0 / tau_per_unit;
    if (eps_max * dtau > 0.5) dtau = 0.5 / eps_max;  // resolve the fastest phase

    HeatSolution sol;
    sol.times = prob.times;
    sol.spectral_initial = odd_halfline_transform(prob.initial.values, ctx);

    const double t_max = prob.times.back();
    const std::size_t n_tau = static_cast<std::size_t>(std::llround(std::ceil(t_max / dtau))) + 1;
    dtau = n_tau > 1 ? t_max / static_cast<double>(n_tau - 1) : dtau;
    sol.tau_step = dtau;
    sol.taus.resize(n_tau);
    for (std::size_t mth = 0; mth < n_tau; ++mth) sol.taus[mth] = mth * dtau;

    for (double t : prob.times) {
        const double m_real = t / dtau;
        if (std::abs(m_real - std::round(m_real)) > 1e-6)
            throw std::invalid_argument("nonhom_solve: output time off the tau partition");
    }

    // Source transform on the partition, then trapezoid prefix sums of
    // e^{+i eps tau} Ghat(tau).
    const std::size_t ne = eps.size();
    const SpatialGrid half = ctx.half_spatial();
    sol.source_hat.resize(n_tau);
    sol.duhamel.assign(n_tau, std::vector<Complex>(ne, Complex(0.0, 0.0)));
    std::vector<Complex> gvals(half.nodes.size());
    for (std::size_t mth = 0; mth < n_tau; ++mth) {
        for (std::size_t i = 0; i < half.nodes.size(); ++i)
            gvals[i] = prob.source(half.nodes[i], sol.taus[mth]);
        sol.source_hat[mth] = odd_halfline_transform(gvals, ctx);
        if (mth > 0) {
            for (std::size_t j = 0; j < ne; ++j) {
                const Complex prev =
                    std::polar(1.0, eps[j] * sol.taus[mth - 1]) * sol.source_hat[mth - 1][j];
                const Complex curr =
                    std::polar(1.0, eps[j] * sol.taus[mth]) * sol.source_hat[mth][j];
                sol.duhamel[mth][j] = sol.duhamel[mth - 1][j] + 0.5 * dtau * (prev + curr);
            }
        }
    }

    std::vector<Complex> y(ne);
    for (double t : prob.times) {
        const std::size_t mth = static_cast<std::size_t>(std::llround(t / dtau));
        for (std::size_t j = 0; j < ne; ++j)
            y[j] = std::polar(1.0, -eps[j] * t) * (sol.spectral_initial[j] + sol.duhamel[mth][j]);
        sol.slices.push_back(synthesize_half(y, ctx));
    }
    return sol;
}

OdeResidual duhamel_ode_residual(const HeatSolution& sol, const LcjdtContext& ctx, double t) {
    if (sol.taus.size() < 3)
        throw std::invalid_argument("duhamel_ode_residual: tau partition too short");
    const double dtau = sol.tau_step;
    const std::size_t mth = static_cast<std::size_t>(std::llround(t / dtau));
    if (mth == 0 || mth + 1 >= sol.taus.size())
        throw std::invalid_argument("duhamel_ode_residual: t must be interior to the partition");

    const auto& eps = ctx.spectral().epsilon;
    auto y_at = [&](std::size_t node, std::size_t j) {
        return std::polar(1.0, -eps[j] * sol.taus[node]) *
               (sol.spectral_initial[j] + sol.duhamel[node][j]);
    };

    OdeResidual r{0.0, 0.0};
    for (std::size_t j = 0; j < eps.size(); ++j) {
        const Complex dy = (y_at(mth + 1, j) - y_at(mth - 1, j)) / (2.0 * dtau);
        const Complex y = y_at(mth, j);
        const Complex g = sol.source_hat[mth][j];
        r.adopted = std::max(r.adopted, std::abs(dy + kI * eps[j] * y - g));
        r.flipped = std::max(r.flipped, std::abs(dy - kI * eps[j] * y - g));
    }
    return r;
}

}  // namespace lcjdt

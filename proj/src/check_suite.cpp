#include "lcjdt/check_suite.hpp"

#include <cmath>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include "lcjdt/pde_app.hpp"
#include "lcjdt/specfun.hpp"

namespace lcjdt {

namespace {

const Complex kI(0.0, 1.0);

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1.0);
    return v;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Probe family with analytic derivatives, for the operator-level checks.
DifferentiableFunction diff_gauss() {
    return {[](double x) { return Complex(std::exp(-x * x), 0.0); },
            [](double x) { return Complex(-2.0 * x * std::exp(-x * x), 0.0); }};
}

DifferentiableFunction diff_xgauss() {
    return {[](double x) { return Complex(x * std::exp(-x * x), 0.0); },
            [](double x) { return Complex((1.0 - 2.0 * x * x) * std::exp(-x * x), 0.0); }};
}

DifferentiableFunction diff_shifted_gauss() {
    return {[](double x) { return Complex(std::exp(-0.5 * (x - 1.0) * (x - 1.0)), 0.0); },
            [](double x) {
                return Complex(-(x - 1.0) * std::exp(-0.5 * (x - 1.0) * (x - 1.0)), 0.0);
            }};
}

DifferentiableFunction diff_sin() {
    return {[](double x) { return Complex(std::sin(x), 0.0); },
            [](double x) { return Complex(std::cos(x), 0.0); }};
}

DifferentiableFunction diff_cos_gauss() {
    return {[](double x) { return Complex(std::cos(2.0 * x) * std::exp(-x * x), 0.0); },
            [](double x) {
                return Complex((-2.0 * std::sin(2.0 * x) - 2.0 * x * std::cos(2.0 * x)) *
                                   std::exp(-x * x),
                               0.0);
            }};
}

// ---- criterion 1: special-function oracles ---------------------------------

void check_specfun(std::vector<CheckReport>& out) {
    double worst = 0.0;
    for (double z : {-100.0, -10.0, -1.0, -0.5, 0.25, 0.5}) {
        const Complex v = hyp2f1(Complex(1, 0), Complex(1, 0), Complex(2, 0), z);
        const double exact = -std::log1p(-z) / z;
        worst = std::max(worst, std::abs(v - exact) / std::abs(exact));
    }
    out.push_back(make_report("hypergeometric-closed-form", worst, 1e-11, 1,
                              "2F1(1,1;2;z) against -log(1-z)/z"));

    double worst_gamma = 0.0;
    for (double re : linspace(0.1, 20.0, 20))
        for (double im : linspace(-20.0, 20.0, 20)) {
            const Complex z(re, im);
            const Complex ratio = std::exp(ln_gamma(z + 1.0) - ln_gamma(z));
            worst_gamma = std::max(worst_gamma, std::abs(ratio - z) / std::abs(z));
        }
    out.push_back(make_report("gamma-recurrence", worst_gamma, 1e-12, 1,
                              "exp(lnG(z+1) - lnG(z)) against z on [0.1,20]x[-20,20]i"));
}

// ---- criterion 2: eigen-equations ------------------------------------------

void check_eigen(std::vector<CheckReport>& out, const JacobiParams& p, const CanonicalMatrix& m) {
    const auto xs = linspace(0.1, 3.0, 20);
    const auto mags = linspace(p.rho + 0.1, p.rho + 5.0, 20);

    double worst_jd = 0.0;
    for (double x : xs)
        for (int k = 0; k < 20; ++k) {
            const double lam = (k % 2 == 0 ? 1.0 : -1.0) * mags[k];
            worst_jd = std::max(worst_jd, jd_eigen_residual(x, lam, p));
        }
    out.push_back(make_report("kernel-eigen-equation", worst_jd, 1e-7, 2,
                              "20x20 grid, x in [0.1,3], |lambda| in [rho+0.1, rho+5]"));

    if (m.c == 0.0) {
        out.push_back(make_skipped("canonical-eigen-equation", "skipped: JDT branch (c = 0)", 2));
        out.push_back(make_skipped("canonical-eigen-iterated", "skipped: JDT branch (c = 0)", 2));
        return;
    }
    double worst_lc = 0.0;
    for (double x : xs)
        for (int k = 0; k < 20; ++k) {
            const double eps = (k % 2 == 0 ? 1.0 : -1.0) * mags[k];
            worst_lc = std::max(worst_lc, lc_eigen_residual(x, -m.c * eps, p, m, 1));
        }
    out.push_back(make_report("canonical-eigen-equation", worst_lc, 1e-7, 2,
                              "same grid mapped through lambda = -c eps"));

    double worst_k2 = 0.0;
    for (double x : {0.5, 0.8, 1.5, 2.2, 2.9})
        worst_k2 = std::max(worst_k2, lc_eigen_residual(x, -m.c * (p.rho + 1.0), p, m, 2));
    out.push_back(make_report("canonical-eigen-iterated", worst_k2, 1e-5, 2,
                              "k = 2, nested application"));
}

// ---- criterion 3: intertwining ---------------------------------------------

void check_intertwining(std::vector<CheckReport>& out, const JacobiParams& p) {
    const DifferentiableFunction family[] = {diff_gauss(), diff_xgauss(), diff_shifted_gauss(),
                                             diff_sin(), diff_cos_gauss()};
    const double th = 3.14159265358979323846 / 3.0;
    const CanonicalMatrix mats[] = {CanonicalMatrix(1, 1, 1, 2), CanonicalMatrix(1, 2, 0, 1),
                                    CanonicalMatrix(2, 1, 1, 1), CanonicalMatrix(0, 1, -1, 0),
                                    CanonicalMatrix(std::cos(th), -std::sin(th), std::sin(th),
                                                    std::cos(th))};
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> pick_f(0, 4);
    std::uniform_int_distribution<int> pick_m(0, 4);
    std::uniform_real_distribution<double> pick_x(0.3, 2.5);

    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const auto& f = family[pick_f(rng)];
        const auto& m = mats[pick_m(rng)];
        worst = std::max(worst, intertwining_residual(f, pick_x(rng), p, m));
    }
    out.push_back(make_report("intertwining", worst, 1e-9, 3,
                              "10 random (f, x, M) triples from the built-in families"));
}

// ---- criterion 4: reduction to the plain transform -------------------------

void check_reduction(std::vector<CheckReport>& out, const JacobiParams& p,
                     const SpatialGridSpec& ss, const SpectralGridSpec& es) {
    const CanonicalMatrix m0(0, 1, -1, 0);
    double worst_kernel = 0.0;
    for (double x : linspace(-3.0, 3.0, 11))
        for (double lam : linspace(-p.rho - 6.0, p.rho + 6.0, 11)) {
            const Complex diff = lc_kernel(x, lam, p, m0) - jd_kernel(x, lam, p);
            worst_kernel = std::max(worst_kernel, std::abs(diff));
        }
    out.push_back(make_report("reduction-kernel", worst_kernel, 1e-12, 4,
                              "M = (0,1;-1,0): canonical kernel against the plain kernel"));

    const LcjdtContext ctx0(p, m0, ss, es);
    const SampledFunction f = ctx0.sample(probe_gauss, Symmetry::even);
    // grid machinery: canonical forward against the plain transform sums
    const SpectralFunction lc = lc_forward_grid(f, ctx0);
    const std::vector<Complex> jd_grid = ctx0.jdt_forward(f.values);
    double worst_fwd = 0.0;
    for (std::size_t j = 0; j < lc.values.size(); ++j)
        worst_fwd = std::max(worst_fwd, std::abs(lc.values[j] - jd_grid[j]) /
                                            std::max(1.0, std::abs(jd_grid[j])));
    // free-abscissa machinery: both sides evaluated afresh
    const std::vector<double> lams = linspace(-p.rho - 5.0, p.rho + 5.0, 7);
    const SpectralFunction lc_free = lc_forward(f, lams, p, m0);
    const SpectralFunction jd_free = jd_transform(f, lams, p);
    for (std::size_t j = 0; j < lams.size(); ++j)
        worst_fwd = std::max(worst_fwd, std::abs(lc_free.values[j] - jd_free.values[j]) /
                                            std::max(1.0, std::abs(jd_free.values[j])));
    out.push_back(make_report("reduction-transform", worst_fwd, 1e-12, 4,
                              "forward transform against the plain path, grid and free abscissae"));
}

// ---- criterion 5: kernel bound ---------------------------------------------

void check_bound(std::vector<CheckReport>& out, const JacobiParams& p, const CanonicalMatrix& m) {
    const auto xs = linspace(-5.0, 5.0, 200);
    const auto eps_mags = linspace(p.rho, p.rho + 10.0, 25);
    double peak = 0.0;
    for (double x : xs)
        for (double em : eps_mags)
            for (double sign : {1.0, -1.0}) {
                const double lam = m.c != 0.0 ? -m.c * sign * em : sign * em;
                peak = std::max(peak, std::abs(lc_kernel(x, lam, p, m)));
            }
    // Below the spectral edge the bound is not asserted, only reported.
    double sub_peak = 0.0;
    for (double x : linspace(-1.2, 1.2, 13))
        for (double frac : {0.25, 0.5, 0.75}) {
            const double lam = m.c != 0.0 ? -m.c * frac * p.rho : frac * p.rho;
            sub_peak = std::max(sub_peak, std::abs(lc_kernel(x, lam, p, m)));
        }
    out.push_back(make_report("kernel-bound", std::max(0.0, peak - 1.0), 1e-9, 5,
                              "max |Psi| = " + fmt(peak) + " over 200x50 nodes with |eps| >= rho; "
                              "below the edge (reported only): max |Psi| = " + fmt(sub_peak)));
}

// ---- criterion 6: weight asymptotics ---------------------------------------

void check_weight_asymptotics(std::vector<CheckReport>& out, const JacobiParams& p) {
    auto spread_of = [](const std::vector<double>& r) {
        double lo = r[0], hi = r[0], mean = 0.0;
        for (double v : r) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            mean += v;
        }
        mean /= r.size();
        return (hi - lo) / mean;
    };
    std::vector<double> far, near;
    for (double x : linspace(15.0, 25.0, 50)) far.push_back(weight(x, p) * std::exp(-2.0 * p.rho * x));
    for (double x : linspace(1e-4, 1e-3, 50))
        near.push_back(weight(x, p) * std::pow(x, -(2.0 * p.alpha + 1.0)));
    out.push_back(make_report("weight-growth", spread_of(far), 1e-2, 6,
                              "spread of A(x) exp(-2 rho x) on [15, 25]"));
    out.push_back(make_report("weight-origin", spread_of(near), 1e-2, 6,
                              "spread of A(x) x^{-(2 alpha + 1)} on [1e-4, 1e-3]"));
}

// ---- criterion 7: Parseval / calibration -----------------------------------

void check_parseval(std::vector<CheckReport>& out, const LcjdtContext& ctx) {
    for (const std::string& name : probe_names()) {
        const SampledFunction f = ctx.sample(probe_by_name(name));
        CheckReport r = parseval_report(f, f, ctx);
        r.id = "parseval-" + name;
        out.push_back(r);
    }
    const CalibrationRecord& cal = ctx.calibration();
    out.push_back(make_report("calibration-spread", cal.spread, 5e-3, 7,
                              "constant = " + fmt(cal.constant) + " (" + cal.fingerprint + ")"));
}

// ---- criterion 8: inversion round trips + refinement ------------------------

void check_roundtrip(std::vector<CheckReport>& out, const LcjdtContext& ctx) {
    const JacobiParams& p = ctx.params();
    for (const char* name : {"gauss", "xgauss"}) {
        const SampledFunction f = ctx.sample(probe_by_name(name));
        const SampledFunction back = lc_inverse(lc_forward_grid(f, ctx), ctx);
        out.push_back(make_report(std::string("roundtrip-") + name,
                                  relative_l2_error(back, f, p), 1e-3, 8,
                                  "inverse(forward(f)) against f, relative L2"));
    }

    // Refinement study at deliberately coarse spatial quadrature (low panel
    // order, modest spectral window): halving the spacing must cut the
    // round-trip error at least 4x. The spectral-edge check is off here; the
    // coarse grid's aliasing noise at the band edge is part of the error
    // being measured.
    SpatialGridSpec coarse;
    coarse.half_width = ctx.spatial().nodes.back() > 0 ? std::ceil(ctx.spatial().nodes.back()) : 12.0;
    coarse.points_per_unit = 8;
    coarse.panel_order = 4;
    SpatialGridSpec fine = coarse;
    fine.points_per_unit = 16;
    SpectralGridSpec espec;
    espec.mu_max = 10.0;
    espec.mu_points = 160;

    double errs[2];
    const SpatialGridSpec* specs[2] = {&coarse, &fine};
    for (int k = 0; k < 2; ++k) {
        const LcjdtContext cctx(p, ctx.matrix(), *specs[k], espec);
        const SampledFunction f = cctx.sample(probe_gauss);
        const SampledFunction back = lc_inverse(lc_forward_grid(f, cctx), cctx, false);
        errs[k] = relative_l2_error(back, f, p);
    }
    const double gain = errs[0] / std::max(errs[1], 1e-300);
    out.push_back(make_report("roundtrip-refinement", gain >= 4.0 ? 0.0 : 1.0, 0.5, 8,
                              "error " + fmt(errs[0]) + " -> " + fmt(errs[1]) +
                                  " under spacing halving (gain " + fmt(gain) + "x, need >= 4x)"));
}

// ---- criterion 9: linearity, differentiation, modulation paths --------------

void check_linearity(std::vector<CheckReport>& out, const LcjdtContext& ctx) {
    const SampledFunction f = ctx.sample(probe_gauss);
    const SampledFunction g = ctx.sample(probe_shifted_gauss);
    SampledFunction combo = f;
    for (std::size_t i = 0; i < combo.values.size(); ++i)
        combo.values[i] = 2.0 * f.values[i] + 3.0 * g.values[i];

    const SpectralFunction Fc = lc_forward_grid(combo, ctx);
    const SpectralFunction Ff = lc_forward_grid(f, ctx);
    const SpectralFunction Fg = lc_forward_grid(g, ctx);
    double worst = 0.0;
    for (std::size_t j = 0; j < Fc.values.size(); ++j) {
        const Complex expect = 2.0 * Ff.values[j] + 3.0 * Fg.values[j];
        worst = std::max(worst,
                         std::abs(Fc.values[j] - expect) / std::max(1.0, std::abs(expect)));
    }
    out.push_back(make_report("linearity", worst, 1e-10, 9, "forward(2f + 3g) against the sum"));

    // Differentiation identity on a probe with both parities, so the lambda=0
    // side does not degenerate to 0 = 0.
    const double lam1 = ctx.jdt_branch() ? ctx.params().rho + 1.0
                                         : ctx.matrix().c * (ctx.params().rho + 1.0);
    CheckReport d = derivative_transform_report(diff_shifted_gauss(), {lam1, 0.0}, ctx);
    out.push_back(d);

    // Path agreement, relative to the spectral peak (pointwise ratios at
    // rounding-floor tail values are not meaningful).
    const SpectralFunction mod = lc_forward_grid(f, ctx, ForwardPath::modulation);
    const SpectralFunction dir = lc_forward_grid(f, ctx, ForwardPath::direct);
    double peak = 0.0;
    for (const Complex& v : mod.values) peak = std::max(peak, std::abs(v));
    double worst_path = 0.0;
    for (std::size_t j = 0; j < mod.values.size(); ++j)
        worst_path = std::max(worst_path, std::abs(mod.values[j] - dir.values[j]));
    out.push_back(make_report("modulation-path", worst_path / std::max(peak, 1e-30), 1e-8, 9,
                              "chirp-then-transform path against direct quadrature, "
                              "relative to the spectral peak"));
}

// ---- criterion 10: convolution ----------------------------------------------

void check_convolution(std::vector<CheckReport>& out, const LcjdtContext& ctx) {
    const SampledFunction f = ctx.sample(probe_gauss);
    const SampledFunction r = ctx.sample(probe_shifted_gauss);

    CheckReport fact = convolution_factorization_report(f, r, ctx);
    // Separability diagnostic at one lambda: iterated double quadrature of
    // f(t) r(u) Psi(t) Psi(u) A(t) A(u) against the product of the two
    // forward values. Confirms the product structure the factorization rests on.
    {
        const double lam = ctx.grid_lambdas()[ctx.grid_lambdas().size() / 2];
        const auto& nodes = ctx.spatial().nodes;
        const auto& aw = ctx.node_measure();
        std::vector<Complex> kf(nodes.size());
        for (std::size_t i = 0; i < nodes.size(); ++i)
            kf[i] = lc_kernel(nodes[i], lam, ctx) * aw[i];
        Complex dbl(0.0, 0.0);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            Complex inner(0.0, 0.0);
            for (std::size_t j = 0; j < nodes.size(); ++j) inner += f.values[i] * r.values[j] * kf[j];
            dbl += kf[i] * inner;
        }
        Complex pf(0.0, 0.0), pr(0.0, 0.0);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            pf += f.values[i] * kf[i];
            pr += r.values[i] * kf[i];
        }
        const double sep = std::abs(dbl - pf * pr) / std::max(1.0, std::abs(pf * pr));
        fact.notes += "; separability diagnostic at one lambda: " + fmt(sep);
    }
    out.push_back(fact);

    const SampledFunction fr = convolve_spectral(f, r, ctx);
    const SampledFunction rf = convolve_spectral(r, f, ctx);
    double peak = 0.0, worst = 0.0;
    for (std::size_t i = 0; i < fr.values.size(); ++i) {
        peak = std::max(peak, std::abs(fr.values[i]));
        worst = std::max(worst, std::abs(fr.values[i] - rf.values[i]));
    }
    out.push_back(make_report("convolution-commutativity", worst / std::max(peak, 1e-30), 1e-8,
                              10, "f*r against r*f, relative to the peak"));
}

// ---- criterion 11: even/odd splitting ---------------------------------------

void check_even_odd(std::vector<CheckReport>& out, const LcjdtContext& ctx) {
    const std::vector<double> mus = {0.8, 1.6, 2.4};
    CheckReport even = even_odd_relation_report(diff_gauss(), mus, ctx);
    even.id = "even-odd-pure-even";
    even.tolerance = 1e-3;
    even.pass = even.residual <= even.tolerance;
    out.push_back(even);

    CheckReport odd = even_odd_relation_report(diff_xgauss(), mus, ctx);
    odd.id = "even-odd-pure-odd";
    odd.tolerance = 1e-3;
    odd.pass = odd.residual <= odd.tolerance;
    out.push_back(odd);

    const DifferentiableFunction mixed{
        [](double x) { return Complex(std::exp(-(x - 0.5) * (x - 0.5)), 0.0); },
        [](double x) { return Complex(-2.0 * (x - 0.5) * std::exp(-(x - 0.5) * (x - 0.5)), 0.0); }};
    CheckReport mix = even_odd_relation_report(mixed, mus, ctx);
    mix.id = "even-odd-mixed";
    out.push_back(mix);
}

// ---- criterion 12: uncertainty ratio ----------------------------------------

void check_uncertainty(std::vector<CheckReport>& out, const JacobiParams& p,
                       const CanonicalMatrix& m, const SpectralGridSpec& espec) {
    SpatialGridSpec wide;
    wide.half_width = 16.0;  // the s = 0.5 dilation needs the larger window
    const LcjdtContext ctx(p, m, wide, espec);

    double kmin = 1e300;
    double scale_dev = 0.0;
    bool all_finite = true;
    std::ostringstream notes;
    for (double s : {0.5, 0.75, 1.0, 1.5, 2.0}) {
        const SampledFunction f =
            ctx.sample([s](double x) { return Complex(std::exp(-s * s * x * x), 0.0); });
        const double ratio = uncertainty_ratio(f, 1.0, 1.0, 1.0, ctx);
        all_finite = all_finite && std::isfinite(ratio) && ratio > 0.0;
        kmin = std::min(kmin, ratio);
        SampledFunction f2 = f;
        for (auto& v : f2.values) v *= 2.0;
        scale_dev = std::max(scale_dev,
                             std::abs(uncertainty_ratio(f2, 1.0, 1.0, 1.0, ctx) - ratio) / ratio);
        notes << "s=" << s << ": " << fmt(ratio) << "; ";
    }
    notes << "empirical minimum " << fmt(kmin) << " (reported, not asserted)";
    out.push_back(make_report("uncertainty-positivity", all_finite && kmin > 0.0 ? 0.0 : 1.0, 0.5,
                              12, notes.str()));
    out.push_back(make_report("uncertainty-homogeneity", scale_dev, 1e-10, 12,
                              "ratio invariance under f -> 2f"));
}

// ---- criteria 13/14: heat applications --------------------------------------

void check_heat(std::vector<CheckReport>& out, const LcjdtContext& ctx, double fd_dt,
                int tau_per_unit) {
    if (ctx.jdt_branch()) {
        out.push_back(make_skipped("heat-recovery", "skipped: JDT branch (c = 0)", 13));
        out.push_back(make_skipped("heat-energy", "skipped: JDT branch (c = 0)", 13));
        out.push_back(make_skipped("heat-residual", "skipped: JDT branch (c = 0)", 13));
        out.push_back(make_skipped("duhamel-ode-residual", "skipped: JDT branch (c = 0)", 14));
        out.push_back(make_skipped("duhamel-degeneration", "skipped: JDT branch (c = 0)", 14));
        return;
    }
    const JacobiParams& p = ctx.params();
    const SpatialGrid half = ctx.half_spatial();
    const SampledFunction h0 = sample_function(half, probe_xgauss);

    // recovery and energy at {0, 0.5, 1}
    HeatProblem prob{h0, nullptr, {0.0, 0.5, 1.0}};
    const HeatSolution sol = heat_solve(prob, ctx);
    out.push_back(make_report("heat-recovery", relative_l2_error(sol.slices[0], h0, p), 1e-3, 13,
                              "t = 0 slice against the initial data, relative L2"));
    const double e0 = spectral_energy(sol, ctx, 0.0);
    double drift = 0.0;
    for (double t : prob.times)
        drift = std::max(drift, std::abs(spectral_energy(sol, ctx, t) - e0) / e0);
    out.push_back(make_report("heat-energy", drift, 1e-10, 13,
                              "spectral energy drift across t in {0, 0.5, 1}"));

    // PDE residual at (x, t) = (1, 0.5), both sign conventions, plus the
    // halving study for the finite difference in t.
    auto residual_with_dt = [&](double dt) {
        HeatProblem pr{h0, nullptr, {0.5 - dt, 0.5, 0.5 + dt}};
        const HeatSolution s = heat_solve(pr, ctx);
        return heat_residual(s, ctx, 0.5, 1.0);
    };
    const HeatResidual r1 = residual_with_dt(fd_dt);
    const HeatResidual r2 = residual_with_dt(0.5 * fd_dt);
    const double gain = r1.adopted / std::max(r2.adopted, 1e-300);
    out.push_back(make_report(
        "heat-residual", r1.adopted, 1e-3, 13,
        "adopted adjoint L - i(a/b)x; Hilbert-adjoint convention residual = " + fmt(r1.hilbert) +
            "; halving dt: " + fmt(r1.adopted) + " -> " + fmt(r2.adopted) + " (gain " + fmt(gain) +
            "x, need >= 2x)" + (gain >= 2.0 ? "" : " [FAIL]")));
    if (gain < 2.0) out.back().pass = false;

    // Nonhomogeneous: source exp(-x^2) cos t.
    auto source = [](double x, double t) { return Complex(std::exp(-x * x) * std::cos(t), 0.0); };
    HeatProblem nprob{h0, source, {0.0, 0.5, 1.0}};
    const HeatSolution nsol = nonhom_solve(nprob, ctx, tau_per_unit);
    const OdeResidual ode = duhamel_ode_residual(nsol, ctx, 0.5);
    const HeatSolution nsol_fine = nonhom_solve(nprob, ctx, 2 * tau_per_unit);
    const OdeResidual ode_fine = duhamel_ode_residual(nsol_fine, ctx, 0.5);
    const double ode_gain = ode.adopted / std::max(ode_fine.adopted, 1e-300);
    out.push_back(make_report(
        "duhamel-ode-residual", ode.adopted, 1e-4, 14,
        "transform-domain residual at the interior node t = 0.5; flipped-sign convention = " +
            fmt(ode.flipped) + "; halving dtau: gain " + fmt(ode_gain) + "x (need >= 2x)" +
            (ode_gain >= 2.0 ? "" : " [FAIL]")));
    if (ode_gain < 2.0) out.back().pass = false;
    out.push_back(make_report("duhamel-recovery", relative_l2_error(nsol.slices[0], h0, p), 1e-3,
                              14, "t = 0 slice of the nonhomogeneous solve"));

    HeatProblem zprob{h0, [](double, double) { return Complex(0.0, 0.0); }, {0.0, 0.5, 1.0}};
    const HeatSolution zsol = nonhom_solve(zprob, ctx, tau_per_unit);
    double peak = 0.0, worst = 0.0;
    for (std::size_t k = 0; k < zsol.slices.size(); ++k)
        for (std::size_t i = 0; i < zsol.slices[k].values.size(); ++i) {
            peak = std::max(peak, std::abs(sol.slices[k].values[i]));
            worst = std::max(worst, std::abs(zsol.slices[k].values[i] - sol.slices[k].values[i]));
        }
    out.push_back(make_report("duhamel-degeneration", worst / std::max(peak, 1e-30), 1e-10, 14,
                              "zero-source solve against the homogeneous solver"));
}

void guarded(std::vector<CheckReport>& out, const char* id, int criterion,
             const std::function<void(std::vector<CheckReport>&)>& body) {
    try {
        body(out);
    } catch (const std::exception& e) {
        CheckReport r;
        r.id = id;
        r.residual = std::numeric_limits<double>::infinity();
        r.tolerance = 0.0;
        r.pass = false;
        r.criterion = criterion;
        r.notes = std::string("check aborted: ") + e.what();
        out.push_back(r);
    }
}

}  // namespace

std::vector<CheckReport> run_check_suite(const CheckOptions& opts) {
    std::vector<CheckReport> out;
    const JacobiParams p(opts.alpha, opts.beta);
    const CanonicalMatrix m(opts.mat_a, opts.mat_b, opts.mat_c, opts.mat_d);

    guarded(out, "specfun-oracles", 1, [&](auto& o) { check_specfun(o); });
    guarded(out, "kernel-eigen-equation", 2, [&](auto& o) { check_eigen(o, p, m); });
    guarded(out, "intertwining", 3, [&](auto& o) { check_intertwining(o, p); });
    guarded(out, "reduction", 4,
            [&](auto& o) { check_reduction(o, p, opts.spatial, opts.spectral); });
    guarded(out, "kernel-bound", 5, [&](auto& o) { check_bound(o, p, m); });
    guarded(out, "weight-asymptotics", 6, [&](auto& o) { check_weight_asymptotics(o, p); });

    std::unique_ptr<LcjdtContext> ctx;
    try {
        ctx = std::make_unique<LcjdtContext>(p, m, opts.spatial, opts.spectral);
    } catch (const std::exception& e) {
        CheckReport r;
        r.id = "context-build";
        r.residual = std::numeric_limits<double>::infinity();
        r.tolerance = 0.0;
        r.pass = false;
        r.criterion = 7;
        r.notes = std::string("context construction failed: ") + e.what();
        out.push_back(r);
        return out;
    }

    guarded(out, "parseval", 7, [&](auto& o) { check_parseval(o, *ctx); });
    guarded(out, "roundtrip", 8, [&](auto& o) { check_roundtrip(o, *ctx); });
    guarded(out, "linearity", 9, [&](auto& o) { check_linearity(o, *ctx); });
    guarded(out, "convolution", 10, [&](auto& o) { check_convolution(o, *ctx); });
    guarded(out, "even-odd", 11, [&](auto& o) { check_even_odd(o, *ctx); });
    guarded(out, "uncertainty", 12,
            [&](auto& o) { check_uncertainty(o, p, m, opts.spectral); });
    guarded(out, "heat", 13,
            [&](auto& o) { check_heat(o, *ctx, opts.heat_fd_dt, opts.tau_per_unit); });
    return out;
}

void write_report(std::ostream& out, const std::vector<CheckReport>& reports, bool with_caveats) {
    for (const CheckReport& r : reports) {
        if (r.skipped) {
            out << "[SKIP] " << r.id << ": " << r.notes << "\n";
            continue;
        }
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << ": residual " << r.residual
            << " (tolerance " << r.tolerance << ")";
        if (!r.notes.empty()) out << " -- " << r.notes;
        out << "\n";
    }
    if (with_caveats) {
        out << "\ncaveats:\n"
            << "  * The normalization of the spectral measure is fixed numerically by enforcing\n"
            << "    the Parseval identity on a probe family; the cross-probe spread is reported\n"
            << "    above and the constant is not asserted against any closed form.\n"
            << "  * The kernel bound |Psi| <= 1 is asserted only for |lambda/c| >= rho; below\n"
            << "    the spectral edge the magnitude is reported without assertion.\n"
            << "  * The adjoint in the heat model and the direction of the Duhamel phase follow\n"
            << "    the solution formulas as implemented; residuals are reported under both sign\n"
            << "    conventions.\n"
            << "  * Convolution is defined through spectral multiplication; the direct weighted\n"
            << "    integral is singular at the origin and only its separability is diagnosed.\n";
    }
}

bool all_passed(const std::vector<CheckReport>& reports) {
    for (const CheckReport& r : reports)
        if (!r.pass) return false;
    return true;
}

}  // namespace lcjdt

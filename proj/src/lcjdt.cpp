#include "lcjdt/lcjdt.hpp"

#include <cmath>
#include <sstream>

namespace lcjdt {

namespace {

const Complex kI(0.0, 1.0);

Complex chirp_at(double x, const CanonicalMatrix& m) {
    if (m.c == 0.0) return Complex(1.0, 0.0);
    return std::polar(1.0, -m.a * x * x / (2.0 * m.b));
}

Complex phase_at(double lambda, const CanonicalMatrix& m) {
    if (m.c == 0.0) return Complex(1.0, 0.0);
    return std::polar(1.0, -m.d * lambda * lambda / (2.0 * m.b));
}

void require_on_grid(const SpectralFunction& F, const LcjdtContext& ctx) {
    const auto& lams = ctx.grid_lambdas();
    if (F.values.size() != lams.size())
        throw std::invalid_argument(
            "spectral data is not sampled on the context grid (off-grid data is not supported; "
            "evaluate the forward transform on the grid)");
    for (std::size_t j = 0; j < lams.size(); ++j)
        if (std::abs(F.lambdas[j] - lams[j]) > 1e-9 * std::max(1.0, std::abs(lams[j])))
            throw std::invalid_argument("spectral abscissae do not match the context grid");
}

}  // namespace

LcjdtContext::LcjdtContext(const JacobiParams& params, const CanonicalMatrix& matrix,
                           const SpatialGridSpec& sspec, const SpectralGridSpec& espec)
    : params_(params), matrix_(matrix) {
    spatial_ = build_spatial_grid(sspec, probe_gauss, params_);
    SpectralGrid raw = build_spectral_grid(espec, params_, nullptr);
    table_ = build_kernel_table(spatial_, raw, params_);
    calibration_ = calibrate(params_, matrix_, spatial_, raw, &table_);

    spectral_ = std::move(raw);
    for (double& w : spectral_.weights) w *= calibration_.constant;

    const std::size_t nx = spatial_.nodes.size();
    aw_.resize(nx);
    chirp_.resize(nx);
    for (std::size_t i = 0; i < nx; ++i) {
        aw_[i] = weight(spatial_.nodes[i], params_) * spatial_.weights[i];
        chirp_[i] = chirp_at(spatial_.nodes[i], matrix_);
    }

    grid_lambdas_.resize(spectral_.epsilon.size());
    phase_.resize(spectral_.epsilon.size());
    for (std::size_t j = 0; j < spectral_.epsilon.size(); ++j) {
        grid_lambdas_[j] = lambda_of_epsilon(spectral_.epsilon[j]);
        phase_[j] = phase_at(grid_lambdas_[j], matrix_);
    }

    half_offset_ = 0;
    while (half_offset_ < nx && spatial_.nodes[half_offset_] <= 0.0) ++half_offset_;
}

std::vector<Complex> LcjdtContext::jdt_forward(const std::vector<Complex>& grid_values) const {
    const std::size_t nx = spatial_.nodes.size();
    if (grid_values.size() != nx)
        throw std::invalid_argument("jdt_forward: values not sampled on the spatial grid");
    std::vector<Complex> out(spectral_.epsilon.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        const Complex* row = table_.data() + j * nx;
        Complex s(0.0, 0.0);
        for (std::size_t i = 0; i < nx; ++i) s += grid_values[i] * row[i] * aw_[i];
        out[j] = s;
    }
    return out;
}

SpatialGrid LcjdtContext::half_spatial() const {
    SpatialGrid half;
    half.nodes.assign(spatial_.nodes.begin() + half_offset_, spatial_.nodes.end());
    half.weights.assign(spatial_.weights.begin() + half_offset_, spatial_.weights.end());
    return half;
}

SampledFunction LcjdtContext::sample(const std::function<Complex(double)>& fn,
                                     Symmetry symmetry) const {
    return sample_function(spatial_, fn, symmetry);
}

Complex lc_apply(const DifferentiableFunction& f, double x, const JacobiParams& p,
                 const CanonicalMatrix& m) {
    return jd_apply(f, x, p) + kI * (m.a / m.b) * x * f.value(x);
}

Complex lc_apply(const DifferentiableFunction& f, double x, const LcjdtContext& ctx) {
    return lc_apply(f, x, ctx.params(), ctx.matrix());
}

double intertwining_residual(const DifferentiableFunction& f, double x, const JacobiParams& p,
                             const CanonicalMatrix& m) {
    const double half_ab = m.a / (2.0 * m.b);
    DifferentiableFunction conjugated;
    conjugated.value = [half_ab, &f](double t) {
        return std::polar(1.0, -half_ab * t * t) * f.value(t);
    };
    if (f.deriv)
        conjugated.deriv = [half_ab, &f](double t) {
            return std::polar(1.0, -half_ab * t * t) *
                   (f.deriv(t) - kI * 2.0 * half_ab * t * f.value(t));
        };
    const Complex lhs = std::polar(1.0, half_ab * x * x) * lc_apply(conjugated, x, p, m);
    const Complex rhs = jd_apply(f, x, p);
    return std::abs(lhs - rhs);
}

double intertwining_residual(const DifferentiableFunction& f, double x, const LcjdtContext& ctx) {
    return intertwining_residual(f, x, ctx.params(), ctx.matrix());
}

Complex lc_kernel(double x, double lambda, const JacobiParams& p, const CanonicalMatrix& m) {
    if (m.c == 0.0) return jd_kernel(x, lambda, p);
    return std::polar(1.0, -(m.a * x * x + m.d * lambda * lambda) / (2.0 * m.b)) *
           jd_kernel(x, -lambda / m.c, p);
}

Complex lc_kernel_dx(double x, double lambda, const JacobiParams& p, const CanonicalMatrix& m) {
    if (m.c == 0.0) return jd_kernel_dx(x, lambda, p);
    const double eps = -lambda / m.c;
    const Complex phase =
        std::polar(1.0, -(m.a * x * x + m.d * lambda * lambda) / (2.0 * m.b));
    return phase * (jd_kernel_dx(x, eps, p) - kI * (m.a / m.b) * x * jd_kernel(x, eps, p));
}

Complex lc_kernel(double x, double lambda, const LcjdtContext& ctx) {
    return lc_kernel(x, lambda, ctx.params(), ctx.matrix());
}

Complex lc_kernel_dx(double x, double lambda, const LcjdtContext& ctx) {
    return lc_kernel_dx(x, lambda, ctx.params(), ctx.matrix());
}

double lc_eigen_residual(double x, double lambda, const JacobiParams& p, const CanonicalMatrix& m,
                         int k) {
    if (m.c == 0.0)
        throw std::domain_error(
            "lc_eigen_residual: the eigen-relation divides by c; c = 0 selects the plain branch");
    if (x == 0.0) throw std::domain_error("lc_eigen_residual: requires x != 0");
    if (k != 1 && k != 2) throw std::invalid_argument("lc_eigen_residual: k must be 1 or 2");

    const Complex eig = -kI * lambda / m.c;
    const DifferentiableFunction kernel{
        [lambda, &p, &m](double t) { return lc_kernel(t, lambda, p, m); },
        [lambda, &p, &m](double t) { return lc_kernel_dx(t, lambda, p, m); }};
    const Complex psi = lc_kernel(x, lambda, p, m);

    if (k == 1) {
        const Complex lhs = lc_apply(kernel, x, p, m);
        return std::abs(lhs - eig * psi) / std::max(1.0, std::abs(psi));
    }
    // k = 2: outer application by central differences of the inner analytic one.
    const DifferentiableFunction once{
        [&kernel, &p, &m](double t) { return lc_apply(kernel, t, p, m); }, nullptr};
    const Complex lhs = lc_apply(once, x, p, m);
    const Complex rhs = eig * eig * psi;
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

double lc_eigen_residual(double x, double lambda, const LcjdtContext& ctx, int k) {
    return lc_eigen_residual(x, lambda, ctx.params(), ctx.matrix(), k);
}

SpectralFunction lc_forward(const SampledFunction& f, const std::vector<double>& lambdas,
                            const JacobiParams& p, const CanonicalMatrix& m, ForwardPath path) {
    check_spatial_decay(f, p);
    const std::size_t nx = f.grid.nodes.size();
    std::vector<double> aw(nx);
    for (std::size_t i = 0; i < nx; ++i) aw[i] = weight(f.grid.nodes[i], p) * f.grid.weights[i];

    SpectralFunction out;
    out.lambdas = lambdas;
    out.values.resize(lambdas.size());
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        const double lam = lambdas[j];
        Complex s(0.0, 0.0);
        if (path == ForwardPath::direct || m.c == 0.0) {
            for (std::size_t i = 0; i < nx; ++i)
                s += f.values[i] * lc_kernel(f.grid.nodes[i], lam, p, m) * aw[i];
        } else {
            const double eps = -lam / m.c;
            for (std::size_t i = 0; i < nx; ++i)
                s += chirp_at(f.grid.nodes[i], m) * f.values[i] * jd_kernel(f.grid.nodes[i], eps, p) *
                     aw[i];
            s *= phase_at(lam, m);
        }
        out.values[j] = s;
    }
    return out;
}

SpectralFunction lc_forward(const SampledFunction& f, const std::vector<double>& lambdas,
                            const LcjdtContext& ctx, ForwardPath path) {
    return lc_forward(f, lambdas, ctx.params(), ctx.matrix(), path);
}

namespace {

// Grid forward without the decay precondition, for re-transforming
// synthesized data whose far tail is rounding dust (the A-weight amplifies
// that dust past any absolute bound; its effect is part of the reported
// residual instead).
SpectralFunction forward_grid_unchecked(const SampledFunction& f, const LcjdtContext& ctx,
                                        ForwardPath path);

}  // namespace

SpectralFunction lc_forward_grid(const SampledFunction& f, const LcjdtContext& ctx,
                                 ForwardPath path) {
    check_spatial_decay(f, ctx.params());
    return forward_grid_unchecked(f, ctx, path);
}

namespace {

SpectralFunction forward_grid_unchecked(const SampledFunction& f, const LcjdtContext& ctx,
                                        ForwardPath path) {
    const std::size_t nx = ctx.spatial().nodes.size();
    if (f.values.size() != nx)
        throw std::invalid_argument("lc_forward_grid: f is not sampled on the context grid");

    SpectralFunction out;
    out.lambdas = ctx.grid_lambdas();
    out.values.resize(out.lambdas.size());

    const auto& table = ctx.kernel_table();
    const auto& aw = ctx.node_measure();
    const auto& chirp = ctx.node_chirp();
    const auto& phase = ctx.lambda_phase();

    if (path == ForwardPath::modulation) {
        std::vector<Complex> h(nx);
        for (std::size_t i = 0; i < nx; ++i) h[i] = chirp[i] * f.values[i];
        out.values = ctx.jdt_forward(h);
        for (std::size_t j = 0; j < out.values.size(); ++j) out.values[j] *= phase[j];
    } else {
        for (std::size_t j = 0; j < out.values.size(); ++j) {
            const Complex* row = table.data() + j * nx;
            Complex s(0.0, 0.0);
            for (std::size_t i = 0; i < nx; ++i)
                s += f.values[i] * (phase[j] * chirp[i] * row[i]) * aw[i];
            out.values[j] = s;
        }
    }
    return out;
}

}  // namespace

SampledFunction lc_inverse(const SpectralFunction& F, const LcjdtContext& ctx,
                           bool check_spectral_tail) {
    require_on_grid(F, ctx);
    if (check_spectral_tail) check_spectral_decay(F);

    const std::size_t nx = ctx.spatial().nodes.size();
    const auto& table = ctx.kernel_table();
    const auto& wts = ctx.spectral().weights;
    const auto& chirp = ctx.node_chirp();
    const auto& phase = ctx.lambda_phase();

    // conj(Psi(x_i, lambda_j)) = conj(phase_j) conj(chirp_i) conj(psi_ji)
    std::vector<Complex> fp(F.values.size());
    for (std::size_t j = 0; j < fp.size(); ++j) fp[j] = F.values[j] * std::conj(phase[j]) * wts[j];

    SampledFunction out;
    out.grid = ctx.spatial();
    out.values.resize(nx);
    for (std::size_t i = 0; i < nx; ++i) {
        Complex s(0.0, 0.0);
        for (std::size_t j = 0; j < fp.size(); ++j) s += fp[j] * std::conj(table[j * nx + i]);
        out.values[i] = std::conj(chirp[i]) * s;
    }
    return out;
}

SampledFunction lc_inverse_at(const SpectralFunction& F, const std::vector<double>& xs,
                              const LcjdtContext& ctx) {
    require_on_grid(F, ctx);
    check_spectral_decay(F);
    const auto& wts = ctx.spectral().weights;

    SampledFunction out;
    out.grid.nodes = xs;
    out.values.resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Complex s(0.0, 0.0);
        for (std::size_t j = 0; j < F.values.size(); ++j)
            s += F.values[j] * std::conj(lc_kernel(xs[i], F.lambdas[j], ctx)) * wts[j];
        out.values[i] = s;
    }
    return out;
}

CheckReport parseval_report(const SampledFunction& f, const SampledFunction& h,
                            const LcjdtContext& ctx) {
    const auto& aw = ctx.node_measure();
    if (f.values.size() != aw.size() || h.values.size() != aw.size())
        throw std::invalid_argument("parseval_report: samples not on the context grid");

    Complex spatial(0.0, 0.0);
    for (std::size_t i = 0; i < aw.size(); ++i)
        spatial += f.values[i] * std::conj(h.values[i]) * aw[i];

    const SpectralFunction Ff = lc_forward_grid(f, ctx);
    const SpectralFunction Fh = lc_forward_grid(h, ctx);
    Complex spectral(0.0, 0.0);
    for (std::size_t j = 0; j < Ff.values.size(); ++j)
        spectral += Ff.values[j] * std::conj(Fh.values[j]) * ctx.spectral().weights[j];

    const double scale = std::max({std::abs(spatial), std::abs(spectral), 1e-30});
    const double residual = std::abs(spatial - spectral) / scale;
    std::ostringstream notes;
    notes << "spatial=" << spatial << " spectral=" << spectral;
    return make_report("parseval", residual, 5e-3, 7, notes.str());
}

CheckReport derivative_transform_report(const DifferentiableFunction& f,
                                        const std::vector<double>& lambdas,
                                        const LcjdtContext& ctx) {
    if (!f.deriv)
        throw std::invalid_argument("derivative_transform_report: analytic derivative required");
    const JacobiParams& p = ctx.params();
    const auto& nodes = ctx.spatial().nodes;
    const auto& glw = ctx.spatial().weights;

    double worst = 0.0;
    std::ostringstream notes;
    for (double lam : lambdas) {
        Complex lhs(0.0, 0.0);
        Complex rhs(0.0, 0.0);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double x = nodes[i];
            lhs += f.deriv(x) * lc_kernel(x, lam, ctx) * weight(x, p) * glw[i];
            const double hstep = 1e-5 * std::max(1.0, std::abs(x));
            const Complex dprod = (lc_kernel(x + hstep, lam, ctx) * weight(x + hstep, p) -
                                   lc_kernel(x - hstep, lam, ctx) * weight(x - hstep, p)) /
                                  (2.0 * hstep);
            rhs -= f.value(x) * dprod * glw[i];
        }
        const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
        const double res = std::abs(lhs - rhs) / scale;
        worst = std::max(worst, res);
        notes << "lambda=" << lam << " residual=" << res << "; ";
    }
    return make_report("differentiation", worst, 1e-5, 9, notes.str());
}

SampledFunction convolve_spectral(const SampledFunction& f, const SampledFunction& r,
                                  const LcjdtContext& ctx) {
    const SpectralFunction Ff = lc_forward_grid(f, ctx);
    const SpectralFunction Fr = lc_forward_grid(r, ctx);
    SpectralFunction prod;
    prod.lambdas = Ff.lambdas;
    prod.values.resize(Ff.values.size());
    for (std::size_t j = 0; j < prod.values.size(); ++j)
        prod.values[j] = Ff.values[j] * Fr.values[j];
    return lc_inverse(prod, ctx);
}

CheckReport convolution_factorization_report(const SampledFunction& f, const SampledFunction& r,
                                             const LcjdtContext& ctx) {
    const SpectralFunction Ff = lc_forward_grid(f, ctx);
    const SpectralFunction Fr = lc_forward_grid(r, ctx);
    SpectralFunction prod;
    prod.lambdas = Ff.lambdas;
    prod.values.resize(Ff.values.size());
    double peak = 0.0;
    for (std::size_t j = 0; j < prod.values.size(); ++j) {
        prod.values[j] = Ff.values[j] * Fr.values[j];
        peak = std::max(peak, std::abs(prod.values[j]));
    }
    const SampledFunction conv = lc_inverse(prod, ctx);
    const SpectralFunction retrans = forward_grid_unchecked(conv, ctx, ForwardPath::modulation);

    double worst = 0.0;
    for (std::size_t j = 0; j < prod.values.size(); ++j)
        worst = std::max(worst, std::abs(retrans.values[j] - prod.values[j]));
    return make_report("convolution-factorization", worst / std::max(peak, 1e-30), 1e-3, 10,
                       "max |forward(f*r) - forward(f) forward(r)| over the grid, "
                       "relative to the product peak (re-transform tail unchecked: the "
                       "synthesized tail is rounding dust)");
}

CheckReport even_odd_relation_report(const DifferentiableFunction& f,
                                     const std::vector<double>& mu_values,
                                     const LcjdtContext& ctx) {
    const JacobiParams& p = ctx.params();
    const JacobiParams shifted(p.alpha + 1.0, p.beta + 1.0);
    const CanonicalMatrix& m = ctx.matrix();
    const auto& nodes = ctx.spatial().nodes;
    const auto& glw = ctx.spatial().weights;
    const std::size_t h0 = ctx.half_offset();

    double worst = 0.0;
    double worst_stated = 0.0;
    for (double mu : mu_values) {
        if (!(mu > 0.0)) throw std::domain_error("even_odd_relation_report: requires mu > 0");
        const double lam = std::sqrt(mu * mu + p.rho * p.rho);

        // Full-line transform at spectral value lam, phase exp(-i(ax^2+d lam^2)/(2b)).
        Complex lhs(0.0, 0.0);
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const double x = nodes[i];
            const Complex phase =
                std::polar(1.0, -(m.a * x * x + m.d * lam * lam) / (2.0 * m.b));
            lhs += f.value(x) * phase * jd_kernel(x, lam, p) * weight(x, p) * glw[i];
        }

        // Half-line pieces: even part against phi_mu, odd part over sinh(2x)
        // against the parameter-shifted phi_mu.
        Complex t_even(0.0, 0.0);
        Complex t_odd(0.0, 0.0);
        for (std::size_t i = h0; i < nodes.size(); ++i) {
            const double x = nodes[i];
            const Complex phase =
                std::polar(1.0, -(m.a * x * x + m.d * lam * lam) / (2.0 * m.b));
            const Complex fe = 0.5 * (f.value(x) + f.value(-x));
            const Complex fo = 0.5 * (f.value(x) - f.value(-x));
            Complex ratio;
            if (std::abs(x) < 1e-6) {
                const Complex fo_d0 = f.deriv ? f.deriv(0.0)
                                              : (f.value(1e-5) - f.value(-1e-5)) / 2e-5;
                ratio = 0.5 * fo_d0;  // limit of f_o / sinh(2x)
            } else {
                ratio = fo / std::sinh(2.0 * x);
            }
            t_even += fe * phase * jacobi_phi(x, mu, p) * weight(x, p) * glw[i];
            t_odd += ratio * phase * jacobi_phi(x, mu, shifted) * weight(x, shifted) * glw[i];
        }

        const Complex odd_term = kI * lam / (8.0 * (p.alpha + 1.0)) * t_odd;
        const Complex rhs = 2.0 * t_even + odd_term;
        const Complex rhs_stated = 2.0 * t_even - odd_term;
        const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-30});
        worst = std::max(worst, std::abs(lhs - rhs) / scale);
        worst_stated = std::max(worst_stated, std::abs(lhs - rhs_stated) / scale);
    }

    std::ostringstream notes;
    notes << "odd-term sign +; residual under the opposite (stated) sign: " << worst_stated;
    return make_report("even-odd-split", worst, 1e-2, 11, notes.str());
}

double uncertainty_ratio(const SampledFunction& f, double gamma, double m, double n,
                         const LcjdtContext& ctx) {
    if (!(m > 0.0) || !(n > 0.0))
        throw std::invalid_argument("uncertainty_ratio: m, n must be positive");
    const auto& nodes = ctx.spatial().nodes;
    const auto& aw = ctx.node_measure();
    if (f.values.size() != nodes.size())
        throw std::invalid_argument("uncertainty_ratio: f is not sampled on the context grid");

    double num1 = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double xg = std::pow(std::abs(nodes[i]), gamma * m);
        num1 += xg * xg * std::norm(f.values[i]) * aw[i];
        den += std::norm(f.values[i]) * aw[i];
    }

    const SpectralFunction F = lc_forward_grid(f, ctx);
    double num2 = 0.0;
    for (std::size_t j = 0; j < F.values.size(); ++j) {
        const double lg = std::pow(std::abs(F.lambdas[j]), n);
        num2 += lg * lg * std::norm(F.values[j]) * ctx.spectral().weights[j];
    }

    const double ratio = std::pow(std::sqrt(num1), n / (m + n)) *
                         std::pow(std::sqrt(num2), m / (m + n)) / std::sqrt(den);
    if (!std::isfinite(ratio))
        throw std::overflow_error("uncertainty_ratio: overflow (gamma*m too large for the window)");
    return ratio;
}

}  // namespace lcjdt

#include "lcjdt/spectral.hpp"

#include <cmath>
#include <sstream>

#include "lcjdt/jd_core.hpp"

namespace lcjdt {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Chirp factor exp(-i a x^2 / (2b)); identity on the c = 0 branch, where the
// kernel carries no phase and the transform reduces to the plain one.
Complex forward_chirp(double x, const CanonicalMatrix& m) {
    if (m.c == 0.0) return Complex(1.0, 0.0);
    return std::polar(1.0, -m.a * x * x / (2.0 * m.b));
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be positive");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int k = 0; k < half; ++k) {
        // Newton iteration from the Chebyshev-angle initial guess.
        double x = std::cos(kPi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        nodes[k] = -x;
        nodes[n - 1 - k] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[k] = w;
        weights[n - 1 - k] = w;
    }
}

SpatialGrid build_spatial_grid(const SpatialGridSpec& spec,
                               const std::function<Complex(double)>& probe,
                               const JacobiParams& p) {
    if (!(spec.half_width > 0.0))
        throw std::invalid_argument("spatial grid: half_width must be positive");
    if (spec.points_per_unit < 1 || spec.panel_order < 1)
        throw std::invalid_argument("spatial grid: points_per_unit and panel_order must be positive");

    const int panels_per_side =
        std::max(1, static_cast<int>(std::ceil(spec.half_width * spec.points_per_unit /
                                               static_cast<double>(spec.panel_order))));
    const int n_side = panels_per_side * spec.panel_order;
    if (2 * n_side < 16) throw std::invalid_argument("spatial grid: fewer than 16 nodes");

    const double tail = std::abs(probe(spec.half_width)) * weight(spec.half_width, p);
    const double tail_neg = std::abs(probe(-spec.half_width)) * weight(-spec.half_width, p);
    if (!(std::max(tail, tail_neg) < 1e-12)) {
        std::ostringstream msg;
        msg << "spatial grid: |probe| A = " << std::max(tail, tail_neg) << " at |x| = "
            << spec.half_width
            << "; increase half_width (if the probe decays faster than A grows) or use "
               "faster-decaying data";
        throw TruncationError(msg.str());
    }

    std::vector<double> gl_x, gl_w;
    gauss_legendre(spec.panel_order, gl_x, gl_w);

    SpatialGrid grid;
    grid.nodes.reserve(2 * n_side);
    grid.weights.reserve(2 * n_side);
    const double h = spec.half_width / panels_per_side;
    for (int panel = -panels_per_side; panel < panels_per_side; ++panel) {
        const double lo = panel * h;
        for (int k = 0; k < spec.panel_order; ++k) {
            grid.nodes.push_back(lo + 0.5 * h * (gl_x[k] + 1.0));
            grid.weights.push_back(0.5 * h * gl_w[k]);
        }
    }
    return grid;
}

SpectralGrid build_spectral_grid(const SpectralGridSpec& spec, const JacobiParams& p,
                                 const CalibrationRecord* calibration) {
    if (!(spec.mu_max > 0.0)) throw std::invalid_argument("spectral grid: mu_max must be positive");
    if (spec.mu_points < 16) throw std::invalid_argument("spectral grid: mu_points must be >= 16");

    const int order = 16;
    const int panels = std::max(1, (spec.mu_points + order - 1) / order);
    std::vector<double> gl_x, gl_w;
    gauss_legendre(order, gl_x, gl_w);

    const double constant = calibration ? calibration->constant : 1.0;
    const double h = spec.mu_max / panels;

    std::vector<double> mu, wt, eps;
    for (int panel = 0; panel < panels; ++panel) {
        const double lo = panel * h;
        for (int k = 0; k < order; ++k) {
            const double m = lo + 0.5 * h * (gl_x[k] + 1.0);
            const double e = std::sqrt(m * m + p.rho * p.rho);
            const double jacobian = m / e;  // |d eps / d mu|
            mu.push_back(m);
            eps.push_back(e);
            wt.push_back(0.5 * h * gl_w[k] * spectral_density(e, p) * constant * jacobian);
        }
    }

    SpectralGrid grid;
    const std::size_t n = mu.size();
    if (spec.both_signs) {
        grid.epsilon.reserve(2 * n);
        grid.mu.reserve(2 * n);
        grid.weights.reserve(2 * n);
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t r = n - 1 - j;
            grid.epsilon.push_back(-eps[r]);
            grid.mu.push_back(mu[r]);
            grid.weights.push_back(wt[r]);
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        grid.epsilon.push_back(eps[j]);
        grid.mu.push_back(mu[j]);
        grid.weights.push_back(wt[j]);
    }
    return grid;
}

CalibrationRecord calibrate(const JacobiParams& p, const CanonicalMatrix& m,
                            const SpatialGrid& sgrid, const SpectralGrid& raw,
                            const std::vector<Complex>* kernel_table) {
    const std::size_t nx = sgrid.nodes.size();
    const std::size_t ne = raw.epsilon.size();

    std::vector<Complex> table;
    if (!kernel_table) {
        table = build_kernel_table(sgrid, raw, p);
        kernel_table = &table;
    }
    if (kernel_table->size() != nx * ne)
        throw std::invalid_argument("calibrate: kernel table does not match the grids");

    std::vector<double> aw(nx);
    std::vector<Complex> chirp(nx);
    for (std::size_t i = 0; i < nx; ++i) {
        aw[i] = weight(sgrid.nodes[i], p) * sgrid.weights[i];
        chirp[i] = forward_chirp(sgrid.nodes[i], m);
    }

    const std::function<Complex(double)> probes[] = {probe_gauss, probe_xgauss,
                                                     probe_shifted_gauss};
    double ratios[3];
    for (int k = 0; k < 3; ++k) {
        double spatial = 0.0;
        std::vector<Complex> h(nx);
        for (std::size_t i = 0; i < nx; ++i) {
            const Complex f = probes[k](sgrid.nodes[i]);
            spatial += std::norm(f) * aw[i];
            h[i] = chirp[i] * f;
        }
        double spectral = 0.0;
        for (std::size_t j = 0; j < ne; ++j) {
            const Complex* row = kernel_table->data() + j * nx;
            Complex s(0.0, 0.0);
            for (std::size_t i = 0; i < nx; ++i) s += h[i] * row[i] * aw[i];
            spectral += std::norm(s) * raw.weights[j];
        }
        if (!(spectral > 0.0)) throw CalibrationError("calibrate: vanishing spectral energy");
        ratios[k] = spatial / spectral;
    }

    CalibrationRecord rec;
    rec.constant = (ratios[0] + ratios[1] + ratios[2]) / 3.0;
    rec.spread = 0.0;
    for (double r : ratios)
        rec.spread = std::max(rec.spread, std::abs(r - rec.constant) / rec.constant);
    rec.flagged = rec.spread > 0.005;

    std::ostringstream fp;
    fp << "alpha=" << p.alpha << ";beta=" << p.beta << ";a=" << m.a << ";b=" << m.b
       << ";c=" << m.c << ";d=" << m.d;
    rec.fingerprint = fp.str();

    if (rec.spread > 0.05)
        throw CalibrationError("calibrate: cross-probe spread " + std::to_string(rec.spread) +
                               " exceeds 5%; grids inadequate or density wrong");
    return rec;
}

Complex probe_gauss(double x) { return Complex(std::exp(-x * x), 0.0); }

Complex probe_xgauss(double x) { return Complex(x * std::exp(-x * x), 0.0); }

Complex probe_shifted_gauss(double x) {
    return Complex(std::exp(-0.5 * (x - 1.0) * (x - 1.0)), 0.0);
}

std::function<Complex(double)> probe_by_name(const std::string& name) {
    if (name == "gauss") return probe_gauss;
    if (name == "xgauss") return probe_xgauss;
    if (name == "shifted-gauss") return probe_shifted_gauss;
    throw std::invalid_argument("unknown probe '" + name + "' (gauss, xgauss, shifted-gauss)");
}

std::vector<std::string> probe_names() { return {"gauss", "xgauss", "shifted-gauss"}; }

double weighted_norm(const SampledFunction& f, const JacobiParams& p) {
    if (f.grid.weights.size() != f.grid.nodes.size())
        throw std::invalid_argument("weighted_norm: sample carries no quadrature weights");
    double s = 0.0;
    for (std::size_t i = 0; i < f.grid.nodes.size(); ++i)
        s += std::norm(f.values[i]) * weight(f.grid.nodes[i], p) * f.grid.weights[i];
    return std::sqrt(s);
}

double relative_l2_error(const SampledFunction& approx, const SampledFunction& exact,
                         const JacobiParams& p) {
    if (approx.values.size() != exact.values.size())
        throw std::invalid_argument("relative_l2_error: size mismatch");
    SampledFunction diff = exact;
    for (std::size_t i = 0; i < diff.values.size(); ++i)
        diff.values[i] = approx.values[i] - exact.values[i];
    const double denom = weighted_norm(exact, p);
    if (denom == 0.0) throw std::invalid_argument("relative_l2_error: zero reference norm");
    return weighted_norm(diff, p) / denom;
}

}  // namespace lcjdt

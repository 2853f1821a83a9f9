#include "lcjdt/jd_core.hpp"

#include <cmath>

#include "lcjdt/specfun.hpp"

namespace lcjdt {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
const Complex kI(0.0, 1.0);

// log(sinh t) and log(cosh t) for t >= 0 without overflowing sinh/cosh.
double log_sinh(double t) {
    if (t > 30.0) return t - kLn2 + std::log1p(-std::exp(-2.0 * t));
    return std::log(std::sinh(t));
}

double log_cosh(double t) {
    if (t > 30.0) return t - kLn2 + std::log1p(std::exp(-2.0 * t));
    return std::log(std::cosh(t));
}

Complex central_difference(const std::function<Complex(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// 2F1 parameters of phi_mu: a = (rho + i mu)/2, b = (rho - i mu)/2, c = alpha+1.
struct PhiArgs {
    Complex a, b, c;
    double z;
};

PhiArgs phi_args(double x, Complex mu, const JacobiParams& p) {
    const Complex half_imu = 0.5 * kI * mu;
    const double sh = std::sinh(x);
    return {0.5 * p.rho + half_imu, 0.5 * p.rho - half_imu, Complex(p.alpha + 1.0, 0.0), -sh * sh};
}

// phi_mu(x) is exactly real when mu is real (conjugate parameter pair) or
// purely imaginary (real parameters); dropping the rounding dust in the
// imaginary part preserves the kernel's exact conjugation symmetries.
bool phi_is_real(Complex mu) { return mu.imag() == 0.0 || mu.real() == 0.0; }

}  // namespace

double weight(double x, const JacobiParams& p) {
    const double ax = std::abs(x);
    if (ax == 0.0) return 0.0;
    const double lw = 2.0 * p.rho * kLn2 + (2.0 * p.alpha + 1.0) * log_sinh(ax) +
                      (2.0 * p.beta + 1.0) * log_cosh(ax);
    if (lw > 709.0)
        throw std::overflow_error("weight: A(x) exceeds the double-precision range at |x| = " +
                                  std::to_string(ax));
    return std::exp(lw);
}

double weight_log_derivative(double x, const JacobiParams& p) {
    if (x == 0.0) throw std::domain_error("weight_log_derivative: singular at x = 0");
    const double ax = std::abs(x);
    const double sgn = x > 0.0 ? 1.0 : -1.0;
    return (2.0 * p.alpha + 1.0) * (std::cosh(ax) / std::sinh(ax)) * sgn +
           (2.0 * p.beta + 1.0) * std::tanh(x);
}

Complex jd_apply(const DifferentiableFunction& f, double x, const JacobiParams& p) {
    if (x == 0.0) {
        const Complex d0 = f.deriv ? f.deriv(0.0) : central_difference(f.value, 0.0, 1e-5);
        return (2.0 * p.alpha + 2.0) * d0;
    }
    if (std::abs(x) < 1e-8)
        throw std::domain_error("jd_apply: 0 < |x| < 1e-8; use the x = 0 branch");
    Complex df;
    if (f.deriv) {
        df = f.deriv(x);
    } else {
        const double h = 1e-5 * std::max(1.0, std::abs(x));
        if (std::abs(x) < h)
            throw std::domain_error("jd_apply: finite-difference step straddles the origin");
        df = central_difference(f.value, x, h);
    }
    return df + weight_log_derivative(x, p) * 0.5 * (f.value(x) - f.value(-x));
}

Complex jacobi_phi(double x, Complex mu, const JacobiParams& p) {
    const PhiArgs a = phi_args(x, mu, p);
    const Complex v = hyp2f1(a.a, a.b, a.c, a.z);
    return phi_is_real(mu) ? Complex(v.real(), 0.0) : v;
}

Complex jacobi_phi_dx(double x, Complex mu, const JacobiParams& p) {
    const PhiArgs a = phi_args(x, mu, p);
    const Complex v = hyp2f1_dz(a.a, a.b, a.c, a.z) * (-std::sinh(2.0 * x));
    return phi_is_real(mu) ? Complex(v.real(), 0.0) : v;
}

Complex jacobi_phi_dxx(double x, Complex mu, const JacobiParams& p) {
    const PhiArgs a = phi_args(x, mu, p);
    const Complex f1 = hyp2f1_dz(a.a, a.b, a.c, a.z);
    const Complex f2 = (a.a * a.b / a.c) * ((a.a + 1.0) * (a.b + 1.0) / (a.c + 1.0)) *
                       hyp2f1(a.a + 2.0, a.b + 2.0, a.c + 2.0, a.z);
    const double s2x = std::sinh(2.0 * x);
    const Complex v = f2 * s2x * s2x - f1 * 2.0 * std::cosh(2.0 * x);
    return phi_is_real(mu) ? Complex(v.real(), 0.0) : v;
}

Complex jd_kernel(double x, double lambda, const JacobiParams& p) {
    if (lambda == 0.0) return Complex(1.0, 0.0);
    const Complex mu = std::sqrt(Complex(lambda * lambda - p.rho * p.rho, 0.0));
    return jacobi_phi(x, mu, p) - (kI / lambda) * jacobi_phi_dx(x, mu, p);
}

Complex jd_kernel_dx(double x, double lambda, const JacobiParams& p) {
    if (lambda == 0.0) return Complex(0.0, 0.0);
    const Complex mu = std::sqrt(Complex(lambda * lambda - p.rho * p.rho, 0.0));
    return jacobi_phi_dx(x, mu, p) - (kI / lambda) * jacobi_phi_dxx(x, mu, p);
}

double jd_eigen_residual(double x, double lambda, const JacobiParams& p) {
    if (x == 0.0) throw std::domain_error("jd_eigen_residual: requires x != 0");
    const DifferentiableFunction kernel{
        [lambda, &p](double t) { return jd_kernel(t, lambda, p); },
        [lambda, &p](double t) { return jd_kernel_dx(t, lambda, p); }};
    const Complex lhs = jd_apply(kernel, x, p);
    const Complex k = jd_kernel(x, lambda, p);
    return std::abs(lhs - kI * lambda * k) / std::max(1.0, std::abs(k));
}

double c_function_abs2(double mu, const JacobiParams& p) {
    if (!(mu > 0.0)) throw std::domain_error("c_function_abs2: requires mu > 0");
    const Complex imu(0.0, mu);
    const Complex ln_c = (Complex(p.rho, 0.0) - imu) * kLn2 +
                         ln_gamma(Complex(p.alpha + 1.0, 0.0)) + ln_gamma(imu) -
                         ln_gamma(0.5 * (Complex(p.rho, 0.0) + imu)) -
                         ln_gamma(0.5 * (Complex(p.alpha - p.beta + 1.0, 0.0) + imu));
    return std::exp(2.0 * ln_c.real());
}

double spectral_density(double epsilon, const JacobiParams& p) {
    const double ae = std::abs(epsilon);
    if (!(ae > p.rho))
        throw std::domain_error("spectral_density: support is |epsilon| > rho");
    const double mu = std::sqrt(epsilon * epsilon - p.rho * p.rho);
    return ae / (mu * c_function_abs2(mu, p));
}

void check_spatial_decay(const SampledFunction& f, const JacobiParams& p) {
    if (f.grid.nodes.empty() || f.values.size() != f.grid.nodes.size())
        throw std::invalid_argument("sampled function: grid/value size mismatch");
    const double tail = std::max(std::abs(f.values.front()) * weight(f.grid.nodes.front(), p),
                                 std::abs(f.values.back()) * weight(f.grid.nodes.back(), p));
    if (!(tail < 1e-12))
        throw TruncationError("spatial decay precondition failed: |f| A = " + std::to_string(tail) +
                              " at the grid edge; enlarge the window or use faster-decaying data");
}

void check_spectral_decay(const SpectralFunction& F) {
    if (F.values.empty()) throw std::invalid_argument("spectral function: empty");
    const double tail = std::max(std::abs(F.values.front()), std::abs(F.values.back()));
    if (!(tail < 1e-10))
        throw TruncationError("spectral decay precondition failed: |F| = " + std::to_string(tail) +
                              " at the outer spectral edge; enlarge mu_max");
}

SpectralFunction jd_transform(const SampledFunction& f, const std::vector<double>& lambdas,
                              const JacobiParams& p) {
    check_spatial_decay(f, p);
    if (f.grid.weights.size() != f.grid.nodes.size())
        throw std::invalid_argument("jd_transform: input grid carries no quadrature weights");
    const std::size_t nx = f.grid.nodes.size();
    std::vector<double> aw(nx);
    for (std::size_t i = 0; i < nx; ++i)
        aw[i] = weight(f.grid.nodes[i], p) * f.grid.weights[i];

    SpectralFunction out;
    out.lambdas = lambdas;
    out.values.resize(lambdas.size());
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        Complex s(0.0, 0.0);
        for (std::size_t i = 0; i < nx; ++i)
            s += f.values[i] * jd_kernel(f.grid.nodes[i], lambdas[j], p) * aw[i];
        out.values[j] = s;
    }
    return out;
}

SampledFunction jd_inverse(const SpectralFunction& F, const SpatialGrid& target,
                           const SpectralGrid& sg, const JacobiParams& p) {
    if (F.values.size() != sg.epsilon.size())
        throw std::invalid_argument("jd_inverse: F is not sampled on the spectral grid");
    for (std::size_t j = 0; j < sg.epsilon.size(); ++j)
        if (std::abs(F.lambdas[j] - sg.epsilon[j]) > 1e-9)
            throw std::invalid_argument("jd_inverse: F abscissae do not match the spectral grid");
    check_spectral_decay(F);

    SampledFunction out;
    out.grid = target;
    out.values.resize(target.nodes.size());
    for (std::size_t i = 0; i < target.nodes.size(); ++i) {
        Complex s(0.0, 0.0);
        for (std::size_t j = 0; j < sg.epsilon.size(); ++j)
            s += F.values[j] * std::conj(jd_kernel(target.nodes[i], sg.epsilon[j], p)) * sg.weights[j];
        out.values[i] = s;
    }
    return out;
}

SampledFunction jd_inverse(const SpectralFunction& F, const std::vector<double>& xs,
                           const SpectralGrid& sg, const JacobiParams& p) {
    SpatialGrid g;
    g.nodes = xs;
    return jd_inverse(F, g, sg, p);
}

std::vector<Complex> build_kernel_table(const SpatialGrid& sgrid, const SpectralGrid& egrid,
                                        const JacobiParams& p) {
    const std::size_t nx = sgrid.nodes.size();
    const std::size_t ne = egrid.epsilon.size();
    std::vector<Complex> table(nx * ne);

    // psi_{-eps}(x) = conj(psi_eps(x)) and psi_eps(-x) = conj(psi_eps(x)) for
    // real eps, so only the (eps > 0, x >= 0) quadrant needs series work.
    std::vector<std::size_t> todo;  // spectral indices with eps > 0
    for (std::size_t j = 0; j < ne; ++j)
        if (egrid.epsilon[j] > 0.0) todo.push_back(j);

    for (std::size_t j : todo) {
        const double eps = egrid.epsilon[j];
        Complex* row = table.data() + j * nx;
        for (std::size_t i = 0; i < nx; ++i) {
            const double x = sgrid.nodes[i];
            if (x < 0.0) continue;
            row[i] = jd_kernel(x, eps, p);
        }
        for (std::size_t i = 0; i < nx; ++i)
            if (sgrid.nodes[i] < 0.0) {
                // mirrored node: grids are symmetric, node -x sits at nx-1-i
                row[i] = std::conj(row[nx - 1 - i]);
            }
    }
    for (std::size_t j = 0; j < ne; ++j) {
        if (egrid.epsilon[j] > 0.0) continue;
        // locate the mirrored positive-eps row (grids store -eps_N..-eps_1, eps_1..eps_N)
        const std::size_t mirror = ne - 1 - j;
        const Complex* src = table.data() + mirror * nx;
        Complex* row = table.data() + j * nx;
        for (std::size_t i = 0; i < nx; ++i) row[i] = std::conj(src[i]);
    }
    return table;
}

SampledFunction sample_function(const SpatialGrid& grid, const std::function<Complex(double)>& fn,
                                Symmetry symmetry) {
    if (grid.nodes.empty()) throw std::invalid_argument("sample_function: empty grid");
    for (std::size_t i = 1; i < grid.nodes.size(); ++i)
        if (!(grid.nodes[i] > grid.nodes[i - 1]))
            throw std::invalid_argument("sample_function: grid nodes must be strictly increasing");

    SampledFunction f;
    f.grid = grid;
    f.symmetry = symmetry;
    f.values.resize(grid.nodes.size());
    double peak = 0.0;
    for (std::size_t i = 0; i < grid.nodes.size(); ++i) {
        f.values[i] = fn(grid.nodes[i]);
        peak = std::max(peak, std::abs(f.values[i]));
    }
    if (symmetry != Symmetry::none) {
        const std::size_t n = grid.nodes.size();
        const double sgn = symmetry == Symmetry::even ? 1.0 : -1.0;
        for (std::size_t i = 0; i < n / 2; ++i) {
            if (std::abs(grid.nodes[i] + grid.nodes[n - 1 - i]) > 1e-12) continue;  // not mirrored
            if (std::abs(f.values[i] - sgn * f.values[n - 1 - i]) > 1e-10 * std::max(1.0, peak))
                throw std::invalid_argument("sample_function: samples violate the declared symmetry");
        }
    }
    return f;
}

}  // namespace lcjdt

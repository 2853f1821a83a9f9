#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lcjdt/jd_core.hpp"
#include "lcjdt/spectral.hpp"

using namespace lcjdt;

// At (alpha, beta) = (1/2, -1/2) everything has elementary closed forms:
//   A(x)      = 4 sinh^2 x
//   phi_mu(x) = sin(mu x) / (mu sinh x)
//   |c(mu)|^2 = 1 / mu^2
// These make strong independent oracles for the series machinery.

namespace {
const JacobiParams kP(0.5, -0.5);

double phi_closed(double x, double mu) { return std::sin(mu * x) / (mu * std::sinh(x)); }

double phi_dx_closed(double x, double mu) {
    const double sh = std::sinh(x);
    return (mu * std::cos(mu * x) * sh - std::sin(mu * x) * std::cosh(x)) / (mu * sh * sh);
}
}  // namespace

TEST_CASE("parameter admissibility") {
    CHECK_THROWS_AS(JacobiParams(-0.5, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(JacobiParams(0.5, -0.6), std::invalid_argument);
    CHECK_THROWS_AS(JacobiParams(0.25, 0.5), std::invalid_argument);
    CHECK(JacobiParams(1.25, 0.25).rho == doctest::Approx(2.5));
}

TEST_CASE("weight values and symmetry") {
    CHECK(weight(0.0, kP) == 0.0);
    CHECK(weight(-1.3, kP) == weight(1.3, kP));
    const double want = 4.0 * std::sinh(1.0) * std::sinh(1.0);
    CHECK(weight(1.0, kP) == doctest::Approx(want).epsilon(1e-12));
    CHECK_THROWS_AS(weight(400.0, kP), std::overflow_error);
    CHECK_THROWS_AS(weight_log_derivative(0.0, kP), std::domain_error);
}

TEST_CASE("operator application") {
    // identity-slope function at the origin
    DifferentiableFunction lin{[](double x) { return Complex(x, 0); },
                               [](double) { return Complex(1, 0); }};
    CHECK(std::abs(jd_apply(lin, 0.0, kP) - Complex(3.0, 0)) < 1e-14);

    // even function: the reflection difference vanishes
    DifferentiableFunction even{[](double x) { return Complex(std::cosh(x), 0); },
                                [](double x) { return Complex(std::sinh(x), 0); }};
    CHECK(std::abs(jd_apply(even, 1.0, kP) - Complex(std::sinh(1.0), 0)) < 1e-14);

    // hand-evaluated composition at x = 0.7 for f = sin
    DifferentiableFunction sine{[](double x) { return Complex(std::sin(x), 0); },
                                [](double x) { return Complex(std::cos(x), 0); }};
    const double want = std::cos(0.7) + 2.0 * (std::cosh(0.7) / std::sinh(0.7)) * std::sin(0.7);
    CHECK(std::abs(jd_apply(sine, 0.7, kP) - Complex(want, 0)) < 1e-13);

    // splitting guard near the origin
    CHECK_THROWS_AS(jd_apply(sine, 1e-9, kP), std::domain_error);

    // finite-difference fallback agrees with the analytic path
    DifferentiableFunction sine_fd{[](double x) { return Complex(std::sin(x), 0); }, nullptr};
    CHECK(std::abs(jd_apply(sine_fd, 0.7, kP) - jd_apply(sine, 0.7, kP)) < 1e-9);
}

TEST_CASE("jacobi function against the closed form") {
    CHECK(jacobi_phi(0.0, Complex(2.0, 0), kP) == Complex(1.0, 0.0));
    CHECK(jacobi_phi(-0.9, Complex(2.0, 0), kP) == jacobi_phi(0.9, Complex(2.0, 0), kP));
    CHECK(jacobi_phi(0.9, Complex(-2.0, -1.0), kP) == jacobi_phi(0.9, Complex(2.0, 1.0), kP));

    for (double mu : {0.3, 2.0, 7.0, 24.0})
        for (double x : {0.05, 0.9, 1.7, 6.0, 11.0}) {
            const Complex got = jacobi_phi(x, Complex(mu, 0), kP);
            const double want = phi_closed(x, mu);
            CHECK(std::abs(got - want) <= 1e-11 * std::max(1.0, std::abs(want)));
        }
}

TEST_CASE("jacobi function derivative") {
    CHECK(jacobi_phi_dx(0.0, Complex(3.0, 0), kP) == Complex(0.0, 0.0));
    CHECK(std::abs(jacobi_phi_dx(-0.6, Complex(3.0, 0), kP) +
                   jacobi_phi_dx(0.6, Complex(3.0, 0), kP)) < 1e-14);

    // finite-difference oracle at the stated point
    const double h = 1e-5;
    const Complex fd =
        (jacobi_phi(0.6 + h, Complex(3.0, 0), kP) - jacobi_phi(0.6 - h, Complex(3.0, 0), kP)) /
        (2.0 * h);
    CHECK(std::abs(jacobi_phi_dx(0.6, Complex(3.0, 0), kP) - fd) < 1e-7);

    for (double mu : {0.5, 4.0})
        for (double x : {0.4, 1.3, 5.0})
            CHECK(std::abs(jacobi_phi_dx(x, Complex(mu, 0), kP) - phi_dx_closed(x, mu)) < 1e-11);
}

TEST_CASE("kernel values") {
    CHECK(jd_kernel(1.7, 0.0, kP) == Complex(1.0, 0.0));
    CHECK(jd_kernel(0.0, 3.1, kP) == Complex(1.0, 0.0));
    CHECK(std::abs(jd_kernel(1.5, kP.rho + 2.0, kP)) <= 1.0 + 1e-12);
    // negative spectral parameter conjugates the kernel
    const Complex k = jd_kernel(1.1, 2.4, kP);
    CHECK(std::abs(jd_kernel(1.1, -2.4, kP) - std::conj(k)) < 1e-15);
    // derivative against finite differences
    const double h = 1e-6;
    const Complex fd = (jd_kernel(0.8 + h, 2.4, kP) - jd_kernel(0.8 - h, 2.4, kP)) / (2.0 * h);
    CHECK(std::abs(jd_kernel_dx(0.8, 2.4, kP) - fd) < 1e-8);
}

TEST_CASE("kernel eigen-equation residuals") {
    CHECK(jd_eigen_residual(0.8, kP.rho + 1.0, kP) < 1e-8);
    CHECK(jd_eigen_residual(2.0, -(kP.rho + 3.0), kP) < 1e-8);
    CHECK(jd_eigen_residual(1.3, 0.0, kP) == 0.0);  // constant kernel
    CHECK_THROWS_AS(jd_eigen_residual(0.0, 2.0, kP), std::domain_error);
}

TEST_CASE("spectral density") {
    CHECK_THROWS_AS(spectral_density(0.5 * kP.rho, kP), std::domain_error);
    CHECK_THROWS_AS(spectral_density(kP.rho, kP), std::domain_error);
    CHECK(spectral_density(-2.3, kP) == spectral_density(2.3, kP));
    // closed form |eps| sqrt(eps^2 - 1) at these parameters
    for (double eps : {1.2, 2.0, 9.0}) {
        const double want = eps * std::sqrt(eps * eps - 1.0);
        CHECK(spectral_density(eps, kP) == doctest::Approx(want).epsilon(1e-12));
    }
    for (double mu : {0.4, 1.0, 6.0})
        CHECK(c_function_abs2(mu, kP) == doctest::Approx(1.0 / (mu * mu)).epsilon(1e-12));
}

namespace {
// test-only adaptive Simpson, independent of the production quadrature
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fb, double fm, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, fm, flm, eps / 2, depth - 1) +
           adaptive_simpson(f, m, b, fm, fb, frm, eps / 2, depth - 1);
}
}  // namespace

TEST_CASE("forward transform against independent quadrature") {
    SpatialGridSpec spec;
    spec.half_width = 8.0;
    const SpatialGrid grid = build_spatial_grid(spec, probe_gauss, kP);
    const SampledFunction f = sample_function(grid, probe_gauss, Symmetry::even);

    const SpectralFunction F = jd_transform(f, {0.0}, kP);
    // psi_0 = 1, so this is the plain weighted integral of the Gaussian:
    // adaptive-Simpson oracle plus the closed form 2 sqrt(pi) (e - 1).
    auto integrand = [](double x) { return std::exp(-x * x) * 4.0 * std::sinh(x) * std::sinh(x); };
    const double simpson = adaptive_simpson(integrand, -8.0, 8.0, integrand(-8.0), integrand(8.0),
                                            integrand(0.0), 1e-13, 40);
    const double closed = 2.0 * std::sqrt(3.14159265358979323846) * (std::exp(1.0) - 1.0);
    CHECK(F.values[0].real() == doctest::Approx(simpson).epsilon(1e-9));
    CHECK(F.values[0].real() == doctest::Approx(closed).epsilon(1e-12));
    CHECK(std::abs(F.values[0].imag()) < 1e-14);

    // zero input, zero output
    SampledFunction zero = f;
    for (auto& v : zero.values) v = 0.0;
    const SpectralFunction Z = jd_transform(zero, {0.0, 2.0, -3.0}, kP);
    for (const Complex& v : Z.values) CHECK(v == Complex(0.0, 0.0));
}

TEST_CASE("forward transform is linear") {
    SpatialGridSpec spec;
    spec.half_width = 9.0;
    const SpatialGrid grid = build_spatial_grid(spec, probe_gauss, kP);
    const SampledFunction f = sample_function(grid, probe_gauss);
    const SampledFunction g = sample_function(grid, probe_xgauss);
    SampledFunction combo = f;
    for (std::size_t i = 0; i < combo.values.size(); ++i)
        combo.values[i] = 2.0 * f.values[i] + 3.0 * g.values[i];

    const std::vector<double> lams = {1.5, 2.5, -4.0};
    const SpectralFunction Fc = jd_transform(combo, lams, kP);
    const SpectralFunction Ff = jd_transform(f, lams, kP);
    const SpectralFunction Fg = jd_transform(g, lams, kP);
    for (std::size_t j = 0; j < lams.size(); ++j) {
        const Complex want = 2.0 * Ff.values[j] + 3.0 * Fg.values[j];
        CHECK(std::abs(Fc.values[j] - want) <= 1e-10 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("transform rejects slowly decaying input") {
    SpatialGridSpec spec;
    CHECK_THROWS_AS(build_spatial_grid(spec, [](double x) { return Complex(std::exp(-std::abs(x)), 0); }, kP),
                    TruncationError);

    const SpatialGrid grid = build_spatial_grid(spec, probe_gauss, kP);
    const SampledFunction slow =
        sample_function(grid, [](double x) { return Complex(std::exp(-std::abs(x)), 0); });
    CHECK_THROWS_AS(jd_transform(slow, {1.5}, kP), TruncationError);
}

TEST_CASE("inverse transform round trip") {
    SpatialGridSpec sspec;
    SpectralGridSpec espec;
    espec.mu_max = 12.0;   // the Gaussian spectra are far below 1e-10 here
    espec.mu_points = 160;
    const SpatialGrid sgrid = build_spatial_grid(sspec, probe_gauss, kP);
    const SpectralGrid raw = build_spectral_grid(espec, kP, nullptr);
    const CanonicalMatrix plain(0, 1, -1, 0);
    const CalibrationRecord cal = calibrate(kP, plain, sgrid, raw);
    SpectralGrid sg = raw;
    for (double& w : sg.weights) w *= cal.constant;

    for (auto probe : {probe_gauss, probe_xgauss}) {
        const SampledFunction f = sample_function(sgrid, probe);
        const SpectralFunction F = jd_transform(f, sg.epsilon, kP);
        const SampledFunction back = jd_inverse(F, sgrid, sg, kP);
        CHECK(relative_l2_error(back, f, kP) < 1e-3);
    }

    // zero spectral data synthesizes to zero
    SpectralFunction zero;
    zero.lambdas = sg.epsilon;
    zero.values.assign(sg.epsilon.size(), Complex(0, 0));
    const SampledFunction z = jd_inverse(zero, std::vector<double>{0.3, 1.0}, sg, kP);
    for (const Complex& v : z.values) CHECK(v == Complex(0.0, 0.0));

    // abscissae must match the measure grid
    SpectralFunction off = zero;
    off.lambdas[3] += 0.1;
    CHECK_THROWS_AS(jd_inverse(off, std::vector<double>{0.5}, sg, kP), std::invalid_argument);
}

TEST_CASE("sampling validates symmetry tags") {
    SpatialGridSpec spec;
    spec.half_width = 8.0;
    spec.points_per_unit = 8;
    const SpatialGrid grid = build_spatial_grid(spec, probe_gauss, kP);
    CHECK_NOTHROW(sample_function(grid, probe_gauss, Symmetry::even));
    CHECK_NOTHROW(sample_function(grid, probe_xgauss, Symmetry::odd));
    CHECK_THROWS_AS(sample_function(grid, probe_shifted_gauss, Symmetry::even),
                    std::invalid_argument);
}

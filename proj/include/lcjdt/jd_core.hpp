#ifndef LCJDT_JD_CORE_HPP
#define LCJDT_JD_CORE_HPP

// Jacobi-Dunkl layer: the hyperbolic weight A(x), the first-order
// differential-difference operator, the Jacobi function phi_mu and its
// derivatives, the kernel psi_lambda, the spectral (Plancherel-type)
// density, and the transform/inverse pair.
//
//   A(x)      = 2^{2 rho} sinh^{2 alpha + 1}(|x|) cosh^{2 beta + 1}(x)
//   L f(x)    = f'(x) + (A'/A)(x) (f(x) - f(-x))/2          (x != 0)
//   L f(0)    = (2 alpha + 2) f'(0)
//   phi_mu(x) = 2F1((rho + i mu)/2, (rho - i mu)/2; alpha + 1; -sinh^2 x)
//   psi_l(x)  = phi_mu(x) - (i/l) phi_mu'(x),  mu^2 = l^2 - rho^2;  psi_0 = 1
//
// psi_lambda solves L f = i lambda f with f(0) = 1.

#include "lcjdt/types.hpp"

namespace lcjdt {

// A(x); even in x, zero at the origin. Throws std::overflow_error instead of
// silently returning Inf when |x| exceeds the double-precision budget.
double weight(double x, const JacobiParams& p);

// (ln A)'(x) = (2a+1) coth(|x|) sign(x) + (2b+1) tanh(x); singular at 0.
double weight_log_derivative(double x, const JacobiParams& p);

// Apply the differential-difference operator at x. Uses f.deriv when given,
// otherwise a central difference with step 1e-5 * max(1, |x|). Points with
// 0 < |x| < 1e-8 are rejected (the operator's definition splits at 0).
Complex jd_apply(const DifferentiableFunction& f, double x, const JacobiParams& p);

// Jacobi function and its first/second x-derivatives (chain rule through
// z = -sinh^2 x). Even in x and in mu.
Complex jacobi_phi(double x, Complex mu, const JacobiParams& p);
Complex jacobi_phi_dx(double x, Complex mu, const JacobiParams& p);
Complex jacobi_phi_dxx(double x, Complex mu, const JacobiParams& p);

// Kernel psi_lambda(x) and its x-derivative. The principal branch of
// mu = sqrt(lambda^2 - rho^2) is taken; the value is branch-independent
// because phi is even in mu.
Complex jd_kernel(double x, double lambda, const JacobiParams& p);
Complex jd_kernel_dx(double x, double lambda, const JacobiParams& p);

// |L psi_lambda(x) - i lambda psi_lambda(x)| / max(1, |psi_lambda(x)|),
// evaluated with analytic derivatives. Requires x != 0.
double jd_eigen_residual(double x, double lambda, const JacobiParams& p);

// |c(mu)|^2 for the Jacobi c-function
//   c(mu) = 2^{rho - i mu} G(alpha+1) G(i mu)
//           / (G((rho + i mu)/2) G((alpha - beta + 1 + i mu)/2)).
double c_function_abs2(double mu, const JacobiParams& p);

// Density of the spectral measure with respect to d epsilon on |eps| > rho:
//   |eps| / (sqrt(eps^2 - rho^2) |c(sqrt(eps^2 - rho^2))|^2),
// up to one global constant fixed later by calibration.
double spectral_density(double epsilon, const JacobiParams& p);

// Forward transform: quadrature of f(x) psi_lambda(x) A(x) over f's grid.
// Requires |f| A < 1e-12 at the grid ends (TruncationError otherwise).
SpectralFunction jd_transform(const SampledFunction& f, const std::vector<double>& lambdas,
                              const JacobiParams& p);

// Inverse transform: sum of F(eps) conj(psi_eps(x)) over the measure grid.
// F must be sampled on sg; |F| must be below 1e-10 at the outer edge.
SampledFunction jd_inverse(const SpectralFunction& F, const SpatialGrid& target,
                           const SpectralGrid& sg, const JacobiParams& p);
SampledFunction jd_inverse(const SpectralFunction& F, const std::vector<double>& xs,
                           const SpectralGrid& sg, const JacobiParams& p);

// Table of kernel values psi_{eps_j}(x_i), row-major in j. Exploits the
// symmetries psi_{-eps}(x) = conj(psi_eps(x)) and psi_eps(-x) = conj(psi_eps(x)).
std::vector<Complex> build_kernel_table(const SpatialGrid& sgrid, const SpectralGrid& egrid,
                                        const JacobiParams& p);

// Decay-precondition helpers shared with the canonical layer.
void check_spatial_decay(const SampledFunction& f, const JacobiParams& p);
void check_spectral_decay(const SpectralFunction& F);

}  // namespace lcjdt

#endif

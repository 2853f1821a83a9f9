#ifndef LCJDT_LCJDT_HPP
#define LCJDT_LCJDT_HPP

// Canonical layer: kernel Psi(x, lambda), operator, forward/inverse
// transforms, and the residual checkers for the identities the transform
// satisfies (intertwining, eigen-relations, Parseval, differentiation,
// convolution factorization, even/odd splitting, uncertainty ratio).
//
// Conventions, for a matrix (a b; c d) with det 1, b != 0, c != 0:
//   Psi(x, lambda) = exp(-i (a x^2 + d lambda^2) / (2b)) psi_{eps}(x),
//   eps = -lambda / c.  For c = 0, Psi = psi_lambda with no phase.
// Spectral grids are built in eps; grid abscissae map to lambda = -c eps.

#include "lcjdt/jd_core.hpp"
#include "lcjdt/spectral.hpp"
#include "lcjdt/types.hpp"

namespace lcjdt {

// Immutable bundle of parameters, grids, Parseval calibration, and the cached
// table of kernel values on (spatial x spectral) nodes. Construction performs
// the one-time calibration. Safe to share across threads once built.
class LcjdtContext {
public:
    LcjdtContext(const JacobiParams& params, const CanonicalMatrix& matrix,
                 const SpatialGridSpec& sspec = {}, const SpectralGridSpec& espec = {});

    const JacobiParams& params() const { return params_; }
    const CanonicalMatrix& matrix() const { return matrix_; }
    bool jdt_branch() const { return matrix_.c == 0.0; }

    const SpatialGrid& spatial() const { return spatial_; }
    const SpectralGrid& spectral() const { return spectral_; }  // calibrated weights
    const CalibrationRecord& calibration() const { return calibration_; }

    double lambda_of_epsilon(double eps) const { return jdt_branch() ? eps : -matrix_.c * eps; }
    double epsilon_of_lambda(double lambda) const {
        return jdt_branch() ? lambda : -lambda / matrix_.c;
    }
    const std::vector<double>& grid_lambdas() const { return grid_lambdas_; }

    // psi_{eps_j}(x_i), row-major in the spectral index.
    const std::vector<Complex>& kernel_table() const { return table_; }
    // A(x_i) * GL weight_i and the forward chirp exp(-i a x^2/(2b)) per node.
    const std::vector<double>& node_measure() const { return aw_; }
    const std::vector<Complex>& node_chirp() const { return chirp_; }
    // exp(-i d lambda_j^2/(2b)) per spectral node (1 on the c = 0 branch).
    const std::vector<Complex>& lambda_phase() const { return phase_; }

    // Plain transform of grid samples at every eps_j, through the table.
    std::vector<Complex> jdt_forward(const std::vector<Complex>& grid_values) const;

    // Positive-x half of the spatial grid, and the index of its first node.
    SpatialGrid half_spatial() const;
    std::size_t half_offset() const { return half_offset_; }

    SampledFunction sample(const std::function<Complex(double)>& fn,
                           Symmetry symmetry = Symmetry::none) const;

private:
    JacobiParams params_;
    CanonicalMatrix matrix_;
    SpatialGrid spatial_;
    SpectralGrid spectral_;
    CalibrationRecord calibration_;
    std::vector<Complex> table_;
    std::vector<double> aw_;
    std::vector<Complex> chirp_;
    std::vector<Complex> phase_;
    std::vector<double> grid_lambdas_;
    std::size_t half_offset_ = 0;
};

// Pointwise operations need no grids; each has a parameter-direct overload
// and a context convenience wrapper.

// Operator: L^M f = L f + i (a/b) x f.
Complex lc_apply(const DifferentiableFunction& f, double x, const JacobiParams& p,
                 const CanonicalMatrix& m);
Complex lc_apply(const DifferentiableFunction& f, double x, const LcjdtContext& ctx);

// |U L^M (U^{-1} f) - L f| at x, U = exp(i a x^2 / (2b)).
double intertwining_residual(const DifferentiableFunction& f, double x, const JacobiParams& p,
                             const CanonicalMatrix& m);
double intertwining_residual(const DifferentiableFunction& f, double x, const LcjdtContext& ctx);

// Kernel and its x-derivative.
Complex lc_kernel(double x, double lambda, const JacobiParams& p, const CanonicalMatrix& m);
Complex lc_kernel_dx(double x, double lambda, const JacobiParams& p, const CanonicalMatrix& m);
Complex lc_kernel(double x, double lambda, const LcjdtContext& ctx);
Complex lc_kernel_dx(double x, double lambda, const LcjdtContext& ctx);

// Relative residual of (L^M)^k Psi = (-i lambda / c)^k Psi; analytic
// derivatives for k = 1, nested numerical application for k = 2.
// Throws std::domain_error on the c = 0 branch.
double lc_eigen_residual(double x, double lambda, const JacobiParams& p, const CanonicalMatrix& m,
                         int k = 1);
double lc_eigen_residual(double x, double lambda, const LcjdtContext& ctx, int k = 1);

enum class ForwardPath { modulation, direct };

// Forward transform at arbitrary abscissae (kernels evaluated afresh).
SpectralFunction lc_forward(const SampledFunction& f, const std::vector<double>& lambdas,
                            const JacobiParams& p, const CanonicalMatrix& m,
                            ForwardPath path = ForwardPath::modulation);
SpectralFunction lc_forward(const SampledFunction& f, const std::vector<double>& lambdas,
                            const LcjdtContext& ctx, ForwardPath path = ForwardPath::modulation);

// Forward transform on the context's spectral grid, through the cached table.
SpectralFunction lc_forward_grid(const SampledFunction& f, const LcjdtContext& ctx,
                                 ForwardPath path = ForwardPath::modulation);

// Inverse transform of grid-sampled spectral data, onto the spatial grid or
// at arbitrary points. `check_spectral_tail = false` skips the outer-edge
// decay precondition; refinement diagnostics use it to push deliberately
// coarse data through (the tail noise is part of the error they measure).
SampledFunction lc_inverse(const SpectralFunction& F, const LcjdtContext& ctx,
                           bool check_spectral_tail = true);
SampledFunction lc_inverse_at(const SpectralFunction& F, const std::vector<double>& xs,
                              const LcjdtContext& ctx);

// Parseval pairing: spatial integral of f conj(h) A against the spectral sum.
CheckReport parseval_report(const SampledFunction& f, const SampledFunction& h,
                            const LcjdtContext& ctx);

// Transform of f' by direct quadrature against -∫ f d/dx[Psi A] dx (inner
// derivative by central differences of the product).
CheckReport derivative_transform_report(const DifferentiableFunction& f,
                                        const std::vector<double>& lambdas,
                                        const LcjdtContext& ctx);

// Operational convolution: inverse of the product of forward transforms.
SampledFunction convolve_spectral(const SampledFunction& f, const SampledFunction& r,
                                  const LcjdtContext& ctx);

// Residual of forward(f * r) = forward(f) forward(r) on the spectral grid,
// normalized by the product's peak.
CheckReport convolution_factorization_report(const SampledFunction& f, const SampledFunction& r,
                                             const LcjdtContext& ctx);

// Splitting identity at lambda = sqrt(mu^2 + rho^2): the full-line transform
// against 2x the even half-line part plus the parameter-shifted odd part.
// The notes record the residual under the opposite sign of the odd term.
CheckReport even_odd_relation_report(const DifferentiableFunction& f,
                                     const std::vector<double>& mu_values,
                                     const LcjdtContext& ctx);

// [ || |x|^{gamma m} f ||^{n/(m+n)} * || |lambda|^n Lf ||_sigma^{m/(m+n)} ] / ||f||.
// Reported, never asserted against a specific constant.
double uncertainty_ratio(const SampledFunction& f, double gamma, double m, double n,
                         const LcjdtContext& ctx);

}  // namespace lcjdt

#endif

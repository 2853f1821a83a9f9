#ifndef LCJDT_TYPES_HPP
#define LCJDT_TYPES_HPP

// Shared value types: parameter sets, grids, sampled/spectral functions,
// and the report record emitted by every verification routine.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcjdt {

using Complex = std::complex<double>;

// A quadrature window is too small (or too large) for the requested integrand.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A series failed to reach tolerance within its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Calibration produced an unusable record (cross-probe spread too large).
class CalibrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Jacobi parameter pair with rho = alpha + beta + 1.
// Admissible range: alpha > -1/2, beta >= -1/2, alpha > beta.
struct JacobiParams {
    double alpha;
    double beta;
    double rho;

    JacobiParams(double alpha_, double beta_)
        : alpha(alpha_), beta(beta_), rho(alpha_ + beta_ + 1.0) {
        if (!(alpha > -0.5)) throw std::invalid_argument("JacobiParams: require alpha > -1/2");
        if (!(beta >= -0.5)) throw std::invalid_argument("JacobiParams: require beta >= -1/2");
        if (!(alpha > beta)) throw std::invalid_argument("JacobiParams: require alpha > beta");
    }
};

// Unimodular 2x2 parameter matrix (a b; c d) of the canonical transform.
// The b = 0 (delta-kernel) branch is not admissible here; c = 0 selects the
// plain Jacobi-Dunkl branch of the kernel.
struct CanonicalMatrix {
    double a, b, c, d;

    CanonicalMatrix(double a_, double b_, double c_, double d_)
        : a(a_), b(b_), c(c_), d(d_) {
        if (std::abs(a * d - b * c - 1.0) > 1e-12)
            throw std::invalid_argument("CanonicalMatrix: determinant must equal 1");
        if (b == 0.0)
            throw std::invalid_argument("CanonicalMatrix: b = 0 branch not supported");
    }
};

enum class Symmetry { none, even, odd };

// Composite quadrature grid on a symmetric spatial interval. `weights` may be
// empty for synthesized outputs that carry no quadrature rule of their own.
struct SpatialGrid {
    std::vector<double> nodes;    // strictly increasing
    std::vector<double> weights;  // Gauss-Legendre weights, same length or empty
};

// Complex samples of a function on a spatial grid.
struct SampledFunction {
    SpatialGrid grid;
    std::vector<Complex> values;
    Symmetry symmetry = Symmetry::none;
};

// Sample a callable on a grid. When a symmetry tag is given, the samples are
// checked against it at mirrored nodes (tolerance 1e-10 relative to the peak).
SampledFunction sample_function(const SpatialGrid& grid,
                                const std::function<Complex(double)>& fn,
                                Symmetry symmetry = Symmetry::none);

// Discretization of the spectral measure. Nodes live on |epsilon| >= rho and
// are parametrized by mu = sqrt(epsilon^2 - rho^2) > 0; `weights` carry the
// quadrature weight times the measure density (and, once calibrated, the
// global normalization constant).
struct SpectralGrid {
    std::vector<double> epsilon;  // ascending
    std::vector<double> mu;       // mu_j = sqrt(eps_j^2 - rho^2)
    std::vector<double> weights;  // positive measure weights
};

// Transform values sampled at spectral abscissae. For the canonical branch
// the abscissa is lambda = -c * epsilon; for c = 0 it is epsilon itself.
struct SpectralFunction {
    std::vector<double> lambdas;
    std::vector<Complex> values;
};

// Complex-valued function of a real variable with an optional analytic
// derivative. Consumers fall back to a central difference with step
// 1e-5 * max(1, |x|) when `deriv` is absent.
struct DifferentiableFunction {
    std::function<Complex(double)> value;
    std::function<Complex(double)> deriv;  // may be empty
};

// One verification outcome: the identity checked, its residual, and the
// tolerance it was held to. `criterion` groups reports for the acceptance
// suite (0 = auxiliary).
struct CheckReport {
    std::string id;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool skipped = false;
    int criterion = 0;
    std::string notes;
};

inline CheckReport make_report(std::string id, double residual, double tolerance,
                               int criterion = 0, std::string notes = {}) {
    CheckReport r;
    r.id = std::move(id);
    r.residual = residual;
    r.tolerance = tolerance;
    r.pass = residual <= tolerance;
    r.criterion = criterion;
    r.notes = std::move(notes);
    return r;
}

inline CheckReport make_skipped(std::string id, std::string notes, int criterion = 0) {
    CheckReport r;
    r.id = std::move(id);
    r.pass = true;
    r.skipped = true;
    r.criterion = criterion;
    r.notes = std::move(notes);
    return r;
}

}  // namespace lcjdt

#endif

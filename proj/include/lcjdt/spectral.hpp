#ifndef LCJDT_SPECTRAL_HPP
#define LCJDT_SPECTRAL_HPP

// Quadrature and grid engineering shared by the transform layers: composite
// Gauss-Legendre panels, spatial truncation policy, spectral grids in the
// mu = sqrt(eps^2 - rho^2) variable, and the one-time Parseval calibration
// that pins the global constant of the spectral measure.

#include "lcjdt/types.hpp"

namespace lcjdt {

struct SpatialGridSpec {
    double half_width = 12.0;  // window [-X, X]
    int points_per_unit = 64;
    int panel_order = 16;
};

struct SpectralGridSpec {
    double mu_max = 25.0;
    int mu_points = 400;
    bool both_signs = true;  // include the eps <= -rho branch
};

// Result of enforcing Parseval on the built-in probe family. `spread` is the
// maximal relative deviation of the per-probe constants from their mean;
// spreads above 0.5% flag the record, above 5% calibration throws.
struct CalibrationRecord {
    double constant = 1.0;
    double spread = 0.0;
    bool flagged = false;
    std::string fingerprint;
};

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

// Composite Gauss-Legendre panels on [-X, X], panel boundaries meeting at 0.
// Fails with TruncationError when |probe(±X)| A(±X) >= 1e-12.
SpatialGrid build_spatial_grid(const SpatialGridSpec& spec,
                               const std::function<Complex(double)>& probe,
                               const JacobiParams& p);

// Spectral grid: GL panels in mu on (0, mu_max], mapped to eps = ±sqrt(mu^2 + rho^2);
// weight = GL weight x spectral_density(eps) x constant x |d eps / d mu|.
// Pass nullptr to defer calibration (constant 1).
SpectralGrid build_spectral_grid(const SpectralGridSpec& spec, const JacobiParams& p,
                                 const CalibrationRecord* calibration);

// One-time Parseval calibration over the probes {gauss, xgauss, shifted-gauss}.
// `raw` must be an uncalibrated grid. A precomputed kernel table for
// (sgrid, raw) may be supplied to avoid recomputing the series.
CalibrationRecord calibrate(const JacobiParams& p, const CanonicalMatrix& m,
                            const SpatialGrid& sgrid, const SpectralGrid& raw,
                            const std::vector<Complex>* kernel_table = nullptr);

// Built-in probe family.
Complex probe_gauss(double x);          // exp(-x^2)
Complex probe_xgauss(double x);         // x exp(-x^2)
Complex probe_shifted_gauss(double x);  // exp(-(x-1)^2/2)
std::function<Complex(double)> probe_by_name(const std::string& name);
std::vector<std::string> probe_names();

// A-weighted L2 norm over the sample's own quadrature grid, and the relative
// L2 distance between two samples on the same grid.
double weighted_norm(const SampledFunction& f, const JacobiParams& p);
double relative_l2_error(const SampledFunction& approx, const SampledFunction& exact,
                         const JacobiParams& p);

}  // namespace lcjdt

#endif

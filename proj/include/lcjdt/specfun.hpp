#ifndef LCJDT_SPECFUN_HPP
#define LCJDT_SPECFUN_HPP

// Complex-parameter special functions backing the hyperbolic kernels:
// log-gamma and the Gauss hypergeometric function 2F1 on the real-argument
// slice z <= 0.95 (the kernels only ever need z = -sinh^2 x <= 0).

#include "lcjdt/types.hpp"

namespace lcjdt {

struct HypergeometricArgs {
    Complex a, b, c;
    double z;
};

// Principal-branch log-gamma (Lanczos approximation; reflection for
// Re z < 1/2). exp(ln_gamma(z)) matches Gamma(z) to at least 12 significant
// digits for |z| <= 50. Throws std::domain_error at the poles.
Complex ln_gamma(Complex z);

// 2F1(a,b;c;z) for real z <= 0.95. See specfun.cpp for the evaluation paths.
// Throws std::invalid_argument when c sits within 1e-10 of a non-positive
// integer, std::domain_error for unsupported z, ConvergenceError when a
// series exhausts its term cap.
Complex hyp2f1(Complex a, Complex b, Complex c, double z);
Complex hyp2f1(const HypergeometricArgs& args);

// d/dz 2F1(a,b;c;z) via the contiguous relation (ab/c) 2F1(a+1,b+1;c+1;z).
Complex hyp2f1_dz(Complex a, Complex b, Complex c, double z);
Complex hyp2f1_dz(const HypergeometricArgs& args);

}  // namespace lcjdt

#endif

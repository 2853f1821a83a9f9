#ifndef LCJDT_CHECK_SUITE_HPP
#define LCJDT_CHECK_SUITE_HPP

// Full verification suite: every identity the transform is expected to
// satisfy, run at configured grids and reported as CheckReport records.
// The CLI `check` subcommand and the acceptance harness share this code.

#include <iosfwd>

#include "lcjdt/lcjdt.hpp"

namespace lcjdt {

struct CheckOptions {
    double alpha = 0.5;
    double beta = -0.5;
    double mat_a = 1.0, mat_b = 1.0, mat_c = 1.0, mat_d = 2.0;
    SpatialGridSpec spatial{};
    SpectralGridSpec spectral{};
    int tau_per_unit = 200;
    double heat_fd_dt = 0.01;  // time step for the heat-residual difference
};

// Runs every check; individual failures are isolated (a throwing check
// becomes a failed report, the suite continues).
std::vector<CheckReport> run_check_suite(const CheckOptions& opts);

// Plain-text report: one line per check plus the standing caveats.
void write_report(std::ostream& out, const std::vector<CheckReport>& reports,
                  bool with_caveats = true);

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace lcjdt

#endif

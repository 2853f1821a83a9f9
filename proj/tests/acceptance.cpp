// Acceptance harness: runs the full verification suite at the default
// configuration (alpha = 0.5, beta = -0.5, matrix (1,1;1,2), default grids)
// and prints one PASS/FAIL line per criterion, with the individual residuals
// underneath. Exits nonzero when any criterion fails.

#include <cstdio>
#include <map>

#include "lcjdt/check_suite.hpp"

using namespace lcjdt;

namespace {

const char* kCriterionTitles[] = {
    nullptr,
    "1.  special-function oracles (closed-form 2F1, gamma recurrence)",
    "2.  kernel eigen-equations (plain, canonical, iterated)",
    "3.  intertwining relation",
    "4.  reduction to the plain transform at M = (0,1;-1,0)",
    "5.  kernel bound |Psi| <= 1 on the spectrum",
    "6.  weight asymptotics (exponential growth, power-law origin)",
    "7.  Parseval identity after one-time calibration",
    "8.  inversion round trips and refinement gain",
    "9.  linearity, differentiation identity, path agreement",
    "10. convolution factorization and commutativity",
    "11. even/odd splitting identity",
    "12. uncertainty ratio (positivity, homogeneity)",
    "13. homogeneous heat evolution (recovery, energy, residual)",
    "14. nonhomogeneous heat evolution (Duhamel)",
};

}  // namespace

int main() {
    CheckOptions opts;  // spec defaults
    const std::vector<CheckReport> reports = run_check_suite(opts);

    std::map<int, std::vector<const CheckReport*>> by_criterion;
    for (const CheckReport& r : reports) by_criterion[r.criterion].push_back(&r);

    bool ok = true;
    for (int crit = 1; crit <= 14; ++crit) {
        const auto it = by_criterion.find(crit);
        bool pass = it != by_criterion.end();
        if (it != by_criterion.end())
            for (const CheckReport* r : it->second) pass = pass && r->pass;
        ok = ok && pass;
        std::printf("[%s] %s\n", pass ? "PASS" : "FAIL", kCriterionTitles[crit]);
        if (it != by_criterion.end())
            for (const CheckReport* r : it->second) {
                if (r->skipped)
                    std::printf("         - %-32s skipped (%s)\n", r->id.c_str(),
                                r->notes.c_str());
                else if (r->pass)
                    std::printf("         - %-32s residual %.3e  tol %.0e\n", r->id.c_str(),
                                r->residual, r->tolerance);
                else
                    std::printf("         - %-32s residual %.3e  tol %.0e  <-- FAIL (%s)\n",
                                r->id.c_str(), r->residual, r->tolerance, r->notes.c_str());
            }
        else
            std::printf("         - no reports produced\n");
    }
    std::printf("%s\n", ok ? "acceptance: all criteria passed" : "acceptance: FAILURES present");
    return ok ? 0 : 1;
}

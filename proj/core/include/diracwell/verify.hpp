#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diracwell/well.hpp"

namespace diracwell {

// Knobs for the verification battery. tol_scale multiplies every check
// threshold (the failure floors of inverted checks included), perturb_beta
// injects a relative distortion into the interior component ratio so tests
// can prove the battery notices broken physics, and row/samples scope the
// ODE-integration check to one zone row with a chosen number of energies.
struct VerifyOptions {
    double tol_scale = 1.0;
    double perturb_beta = 0.0;
    int row = 0;       // 0 = full battery; 1..7 = only that row's ODE check
    int samples = 3;   // energies per row in the ODE check
    std::uint64_t seed = 20260817;
};

struct CheckResult {
    std::string name;
    bool passed;
    double worst;      // worst observed figure of merit for the check
    double tolerance;  // threshold it was held against (after scaling)
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_passed;
};

// Runs the full property battery against the given well (checks that
// probe a limiting regime pin their own canonical parameters and say so
// in their detail line). Checks, in order:
//   1 klein_spectrum_closed_form_vs_bisection
//   2 depth_independence
//   3 nmax_root_count
//   4 nonrelativistic_limit
//   5 unitarity_random_energies
//   6 bound_state_flux_and_quench
//   7 wall_relation_selection
//   8 closed_form_vs_generic_solve
//   9 ode_oracle_rows
//  10 analytic_residuals
//  11 current_conservation
// Wells without a trapped zone (V <= 2m) pass the trapped-zone checks
// vacuously, with the detail saying so.
VerificationReport run_verification(const WellParams& params,
                                    const VerifyOptions& opts = {});

}  // namespace diracwell

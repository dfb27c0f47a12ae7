#pragma once

#include <vector>

#include "diracwell/matching.hpp"
#include "diracwell/spinor.hpp"

namespace diracwell {

// Probability current J = 2 Im(conj(psi+) psi-). Stationary solutions
// carry a globally constant J; evanescent families carry none.
double current(const Spinor& psi);

// Probability density |psi+|^2 + |psi-|^2.
double density(const Spinor& psi);

struct CurrentSample {
    double x;
    double density;
    double current;
};

// Current and density sampled over [-2a, 3a]. region values are taken at
// interior representative points; the deviations quantify how constant the
// current is within regions and across the walls.
struct CurrentProfile {
    std::vector<CurrentSample> samples;
    double left_value;
    double inside_value;
    double right_value;
    double max_region_deviation;  // max |J(x) - region value|, absolute
    double wall_jump_left;        // |J| mismatch of the two expansions at x = 0
    double wall_jump_right;       // same at x = a
};

// Sample the solution's current profile with n points (default 1001, which
// places both walls exactly on the grid).
CurrentProfile current_profile(const SolutionSet& sol, int n = 1001);

// Natural current scale of a two-sided superposition's interior:
// max(|A_total|^2, |B_total|^2) * 2 beta / (1 + beta^2).
double inside_flux_scale(const SolutionSet& sol);

// Region currents of a two-sided superposition and whether they agree
// within 1e-10 of the interior flux scale. A identically zero field counts
// as balanced. Throws WrongRegimeError unless the solution carries the
// superposition coefficients A_total/B_total.
struct FluxBalance {
    double left_current;
    double inside_current;
    double right_current;
    double scale;
    bool balanced;
};
FluxBalance flux_balance(const SolutionSet& sol);

// Current magnitude at the two walls relative to the interior flux scale.
// Quenched walls (residual < 1e-10) are the signature that the
// superposition has collapsed onto a bound state: the interior amplitudes
// then satisfy |A_total| = |B_total| and no probability crosses x = 0 or
// x = a. Throws WrongRegimeError for non-superposition input.
struct WallQuench {
    double current_at_0;
    double current_at_a;
    double scale;
    double residual;  // max wall |J| / scale
    bool quenched;
};
WallQuench wall_current_quench(const SolutionSet& sol);

// sqrt of the full-line integral of the density, evaluated in closed form
// piece by piece. Defined for decaying-outside solutions (|E| < m) only;
// scattering and two-sided states are not normalizable and throw
// WrongRegimeError.
double l2_norm(const SolutionSet& sol);

}  // namespace diracwell

#pragma once

#include <string>
#include <vector>

#include "diracwell/matching.hpp"
#include "diracwell/well.hpp"

namespace diracwell {

// One solution object for any non-edge energy, dispatched by zone:
//  - scattering zones: the left-incidence solve,
//  - trapped zone (oscillatory outside and inside, E < -m): the two-sided
//    superposition carrying both incidence solves,
//  - one-sided-decay zone (|E| < m): the homogeneous wall solve.
// Edge energies propagate EdgeEnergyError.
SolutionSet full_solution(double E, const WellParams& params);

// Human-readable expansion of the piecewise wave, one term per basis
// family with its coefficient label, pieces joined by " | ", e.g.
//   "Cθ⁻₊↓ | Aφ⁺₊↑+Bφ⁺₋↑ | Dθ⁻₋↓"
std::string ansatz_string(const SolutionSet& sol);

// One row of an energy sweep. Quantities that do not exist in the zone
// hold NaN: scattering magnitudes exist where an incident wave does,
// the trapped-zone condition value only between -V+m and -m, and the
// wall-determinant surrogate only for |E| < m.
struct SweepPoint {
    double E;      // possibly nudged off an edge
    bool nudged;
    int row_index;
    std::string regime;
    double R2;
    double T2;
    double klein_condition_value;
    double determinant_surrogate;
};

struct SweepResult {
    WellParams params;
    double E_min;
    double E_max;
    int n_points;
    int n_nudged;   // grid points moved off an edge by half a step
    int n_dropped;  // pathological points that stayed on an edge after nudging
    std::vector<SweepPoint> points;
};

// Uniform energy grid over [E_min, E_max] with n_points >= 2. Grid points
// within edge tolerance are nudged by half a step (+ for all but the last
// point, - for the last) and flagged. Energies come out strictly
// increasing; evaluation order is the grid order, so identical inputs give
// bit-identical results.
SweepResult sweep(const WellParams& params, double E_min, double E_max,
                  int n_points);

}  // namespace diracwell

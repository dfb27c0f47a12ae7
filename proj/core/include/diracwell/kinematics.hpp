#pragma once

#include "diracwell/well.hpp"

namespace diracwell {

// Wave numbers and spinor amplitude ratios for energy E in the well
// described by params. With W = E + V the energy relative to the well floor:
//
//   k = sqrt(|E^2 - m^2|)      outside wave number
//   p = sqrt(|W^2 - m^2|)      inside wave number
//   alpha = sqrt(|(|E| - m) / (|E| + m)|)   outside amplitude ratio
//   beta  = sqrt(|(|W| - m) / (|W| + m)|)   inside amplitude ratio
//
// The ratios are even in the energy: alpha(E) = alpha(-E). For E < -m this
// makes alpha^2 * (E - m) = E + m, so the same alpha serves both signs of
// the spectrum.
struct Kinematics {
    double E;
    double k;
    double p;
    double alpha;
    double beta;
    bool osc_outside;  // |E| > m: propagating outside, else evanescent
    bool osc_inside;   // |E + V| > m: propagating inside, else evanescent
    bool up_outside;   // E >= 0 selects the upper-component-major family outside
    bool up_inside;    // E + V >= 0 selects it inside
};

// Compute kinematics for E. Throws EdgeEnergyError iff ||E| - m| <= tol or
// ||E + V| - m| <= tol with tol = 1e-12 * m, where a wave number vanishes.
Kinematics kinematics(double E, const WellParams& params);

}  // namespace diracwell

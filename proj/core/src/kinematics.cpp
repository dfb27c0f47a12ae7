#include "diracwell/kinematics.hpp"

#include <cmath>
#include <string>

#include "diracwell/errors.hpp"

namespace diracwell {

namespace {

// sqrt(|(|w| - m) / (|w| + m)|); even in w, so one form covers both signs
// of the spectrum.
double amplitude_ratio(double w, double m) {
    const double aw = std::fabs(w);
    return std::sqrt(std::fabs((aw - m) / (aw + m)));
}

}  // namespace

Kinematics kinematics(double E, const WellParams& params) {
    const double m = params.m;
    const double tol = 1e-12 * m;
    const double W = E + params.V;

    if (std::fabs(std::fabs(E) - m) <= tol) {
        throw EdgeEnergyError("kinematics: |E| = m within tolerance, outside wave number vanishes (E = " +
                              std::to_string(E) + ")");
    }
    if (std::fabs(std::fabs(W) - m) <= tol) {
        throw EdgeEnergyError("kinematics: |E + V| = m within tolerance, inside wave number vanishes (E = " +
                              std::to_string(E) + ")");
    }

    Kinematics kin;
    kin.E = E;
    kin.k = std::sqrt(std::fabs(E * E - m * m));
    kin.p = std::sqrt(std::fabs(W * W - m * m));
    kin.alpha = amplitude_ratio(E, m);
    kin.beta = amplitude_ratio(W, m);
    kin.osc_outside = std::fabs(E) > m;
    kin.osc_inside = std::fabs(W) > m;
    kin.up_outside = E >= 0.0;
    kin.up_inside = W >= 0.0;
    return kin;
}

}  // namespace diracwell

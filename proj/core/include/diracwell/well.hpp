#pragma once

#include <stdexcept>

namespace diracwell {

// Square-well potential in natural units (hbar = c = 1):
//
//   V(x) = -V  for 0 <= x <= a,   V(x) = 0  elsewhere,   V > 0.
//
// The particle mass is m. Energies are measured on the same scale as m.
struct WellParams {
    double m;  // mass, > 0
    double V;  // well depth (the potential inside is -V), > 0
    double a;  // well width, > 0

    WellParams(double mass, double depth, double width)
        : m(mass), V(depth), a(width) {
        if (!(m > 0.0)) throw std::invalid_argument("WellParams: m must be > 0");
        if (!(V > 0.0)) throw std::invalid_argument("WellParams: V must be > 0");
        if (!(a > 0.0)) throw std::invalid_argument("WellParams: a must be > 0");
    }

    // True when the depth opens the zone -V + m < E < -m where oscillatory
    // transmission through the well coexists with exponential decay outside.
    bool has_klein_zone() const { return V > 2.0 * m; }

    // Potential value at position x.
    double potential(double x) const { return (x >= 0.0 && x <= a) ? -V : 0.0; }

    // Local energy offset E - V(x) that enters every kinematic relation.
    double local_energy(double E, double x) const { return E - potential(x); }
};

}  // namespace diracwell

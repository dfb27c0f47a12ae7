#pragma once

#include <string>

#include "diracwell/well.hpp"

namespace diracwell {

// The seven energy zones of the square well, ordered from the top of the
// spectrum down, plus Edge for energies pinned to a zone boundary.
//
// Writing W = E + V for the energy relative to the well floor:
//
//   ScatterAbove            E > m                 oscillatory everywhere
//   BoundUpper              0 < E < m             decaying outside, oscillatory inside
//   BoundLower              -m < E < 0            decaying outside, oscillatory inside
//   KleinZone               -V + m < E < -m       oscillatory everywhere (needs V > 2m)
//   EvanescentInside        -V < E < -V + m, E < -m   decaying inside, osc. outside
//   EvanescentInsideLower   -V - m < E < -V       decaying inside, osc. outside
//   ScatterBelow            E < -V - m            oscillatory everywhere
//
// The boundaries are E in {m, 0, -m, -V + m, -V, -V - m}. For V <= 2m the
// Klein zone is empty and the interval (-V + m, -m) vanishes; the remaining
// zones cover the line with the same ordering.
enum class Zone {
    ScatterAbove,
    BoundUpper,
    BoundLower,
    KleinZone,
    EvanescentInside,
    EvanescentInsideLower,
    ScatterBelow,
    Edge,
};

struct EnergyRegime {
    Zone zone;
    // For Zone::Edge, the boundary energy the input matched; otherwise 0.
    double edge_value = 0.0;

    // 1..7 for the zones in the order listed above; 0 for Edge.
    int row_index() const;

    // Stable lowercase identifier: "scatter_above", "bound_upper",
    // "bound_lower", "klein_zone", "evanescent_inside",
    // "evanescent_inside_lower", "scatter_below", "edge".
    std::string name() const;
};

// Classify E into a zone. Total: every finite E maps to exactly one zone or
// to Edge. E counts as Edge when it lies within 1e-12 * m of any boundary
// energy; the nearest boundary wins.
EnergyRegime classify(double E, const WellParams& params);

}  // namespace diracwell

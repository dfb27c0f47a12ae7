#include "diracwell/regime.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace diracwell {

int EnergyRegime::row_index() const {
    switch (zone) {
        case Zone::ScatterAbove: return 1;
        case Zone::BoundUpper: return 2;
        case Zone::BoundLower: return 3;
        case Zone::KleinZone: return 4;
        case Zone::EvanescentInside: return 5;
        case Zone::EvanescentInsideLower: return 6;
        case Zone::ScatterBelow: return 7;
        case Zone::Edge: return 0;
    }
    return 0;
}

std::string EnergyRegime::name() const {
    switch (zone) {
        case Zone::ScatterAbove: return "scatter_above";
        case Zone::BoundUpper: return "bound_upper";
        case Zone::BoundLower: return "bound_lower";
        case Zone::KleinZone: return "klein_zone";
        case Zone::EvanescentInside: return "evanescent_inside";
        case Zone::EvanescentInsideLower: return "evanescent_inside_lower";
        case Zone::ScatterBelow: return "scatter_below";
        case Zone::Edge: return "edge";
    }
    return "edge";
}

EnergyRegime classify(double E, const WellParams& params) {
    const double m = params.m;
    const double V = params.V;
    const double tol = 1e-12 * m;

    // Zone boundaries. For V <= 2m some of them coincide or reorder; the
    // nearest one decides the Edge label, first match breaking exact ties.
    const std::array<double, 6> boundaries = {m, 0.0, -m, -V + m, -V, -V - m};
    double nearest = boundaries[0];
    double nearest_dist = std::numeric_limits<double>::infinity();
    for (double b : boundaries) {
        const double d = std::fabs(E - b);
        if (d < nearest_dist) {
            nearest_dist = d;
            nearest = b;
        }
    }
    if (nearest_dist <= tol) return {Zone::Edge, nearest};

    // First-match cascade from the top of the spectrum. For V <= 2m the
    // KleinZone branch is unreachable: its test requires E > -V + m >= -m,
    // already consumed above it.
    if (E > m) return {Zone::ScatterAbove, 0.0};
    if (E > 0.0) return {Zone::BoundUpper, 0.0};
    if (E > -m) return {Zone::BoundLower, 0.0};
    if (E > -V + m) return {Zone::KleinZone, 0.0};
    if (E > -V) return {Zone::EvanescentInside, 0.0};
    if (E > -V - m) return {Zone::EvanescentInsideLower, 0.0};
    return {Zone::ScatterBelow, 0.0};
}

}  // namespace diracwell

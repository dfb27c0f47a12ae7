#include "diracwell/sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "diracwell/basis.hpp"
#include "diracwell/errors.hpp"
#include "diracwell/regime.hpp"
#include "diracwell/spectrum.hpp"

namespace diracwell {

namespace {

bool is_scattering(Zone z) {
    return z == Zone::ScatterAbove || z == Zone::KleinZone ||
           z == Zone::EvanescentInside || z == Zone::EvanescentInsideLower ||
           z == Zone::ScatterBelow;
}

std::string piece_string(const std::vector<WaveTerm>& terms) {
    std::string out;
    for (const WaveTerm& t : terms) {
        if (!out.empty()) out += "+";
        out += t.label;
        out += kind_label(t.kind);
    }
    return out;
}

}  // namespace

SolutionSet full_solution(double E, const WellParams& params) {
    const EnergyRegime regime = classify(E, params);
    switch (regime.zone) {
        case Zone::BoundUpper:
        case Zone::BoundLower:
            return solve_regime(E, params);
        case Zone::KleinZone:
            return superpose(solve_left_incidence(E, params),
                             solve_right_incidence(E, params));
        case Zone::ScatterAbove:
        case Zone::EvanescentInside:
        case Zone::EvanescentInsideLower:
        case Zone::ScatterBelow:
            return solve_left_incidence(E, params);
        case Zone::Edge:
            break;
    }
    throw EdgeEnergyError("full_solution: energy sits on a zone boundary");
}

std::string ansatz_string(const SolutionSet& sol) {
    return piece_string(sol.wave.left) + " | " + piece_string(sol.wave.inside) +
           " | " + piece_string(sol.wave.right);
}

SweepResult sweep(const WellParams& params, double E_min, double E_max,
                  int n_points) {
    if (!(E_min < E_max)) throw std::invalid_argument("sweep: needs E_min < E_max");
    if (n_points < 2) throw std::invalid_argument("sweep: needs n_points >= 2");

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    const double step = (E_max - E_min) / (n_points - 1);

    SweepResult out{params, E_min, E_max, n_points, 0, 0, {}};
    out.points.reserve(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        double E = E_min + i * step;
        bool nudged = false;
        if (classify(E, params).zone == Zone::Edge) {
            E += (i == n_points - 1) ? -0.5 * step : 0.5 * step;
            nudged = true;
            ++out.n_nudged;
            if (classify(E, params).zone == Zone::Edge) {
                ++out.n_dropped;  // a half step could not clear the edge
                continue;
            }
        }
        const EnergyRegime regime = classify(E, params);
        SweepPoint pt{E, nudged, regime.row_index(), regime.name(),
                      nan, nan, nan, nan};
        if (is_scattering(regime.zone)) {
            const SolutionSet sol = solve_left_incidence(E, params);
            pt.R2 = std::norm(sol.coefficients.at("R"));
            pt.T2 = std::norm(sol.coefficients.at("T"));
            if (regime.zone == Zone::KleinZone) {
                pt.klein_condition_value = klein_condition(E, params);
            }
        } else {
            pt.determinant_surrogate = bound_determinant_surrogate(E, params);
        }
        out.points.push_back(std::move(pt));
    }
    return out;
}

}  // namespace diracwell

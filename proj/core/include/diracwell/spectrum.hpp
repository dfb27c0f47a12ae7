#pragma once

#include <string>
#include <vector>

#include "diracwell/matching.hpp"
#include "diracwell/well.hpp"

namespace diracwell {

// Which quantization condition produced a bound state.
//
// In the zone -V + m < E < -m (V > 2m) the bound condition factorizes into
// sin(p a) sin(k a) = 0, giving two independent branches:
//   KleinKa:  k a = n pi  ->  E_n = -m sqrt(1 + (n pi / (m a))^2), depth-free
//   KleinPa:  p a = n pi  ->  E_n = -V + m sqrt(1 + (n pi / (m a))^2)
// Conventional states live in |E| < m, where the wall-continuity
// determinant of the decaying ansatz must vanish.
enum class Branch { KleinKa, KleinPa, Conventional };

// Relation connecting the two wall values of a bound state:
//   Sigma3:   Psi(a) = sign * diag(1, -1) Psi(0)
//   Identity: Psi(a) = sign * Psi(0)
enum class WallRelation { Sigma3, Identity };

struct BoundState {
    int n;            // branch quantization integer (inside phase count for
                      // Conventional with an oscillatory interior, else 0)
    double E;
    Branch branch;
    int parity_sign;  // predicted sign in the wall relation
    double k;         // outside wave number, computed arithmetically
    double p;         // inside wave number, computed arithmetically
    bool edge;        // pinned to a zone boundary (the n = 0 states)
    bool coincident;  // another branch produces the same energy

    // Wall relation the branch predicts: KleinKa and Conventional satisfy
    // Sigma3, KleinPa satisfies Identity.
    WallRelation wall_relation() const;

    // Stable identifier of the selection mechanism: "sigma3_wall_relation",
    // "identity_wall_relation", or "continuity_determinant".
    std::string selected_by() const;
};

// Quantization function whose zeros are the bound energies in the zone
// -V + m < E < -m: cos((p + k) a) - cos((p - k) a) = -2 sin(p a) sin(k a).
// Defined arithmetically for any E; meaningful inside that zone.
double klein_condition(double E, const WellParams& params);

// Number of interior states per branch in -V + m < E < -m:
// floor((m a / pi) sqrt((V/m - 1)^2 - 1)). Throws NoKleinZoneError when
// V <= 2m.
int klein_n_max(const WellParams& params);

// Closed-form spectrum of both branches, n = 0..n_max each, sorted by
// energy. The n = 0 states sit exactly on the zone boundaries and carry
// edge = true; energies shared by both branches carry coincident = true.
// Throws NoKleinZoneError when V <= 2m.
std::vector<BoundState> klein_spectrum(const WellParams& params);

// Root found by scanning; a merged entry within 1e-10 * m of both factors
// sets both flags.
struct KleinRoot {
    double E;
    bool from_ka;
    bool from_pa;
};

// Independent root finder for the same zone: separate sign scans of
// sin(k a) and sin(p a) (each factor is strictly monotone in E there),
// bisected to 1e-12 * m and merged. Interior roots only; the scan window
// stays 1e-9 * m away from the zone boundaries.
std::vector<KleinRoot> scan_klein_roots(const WellParams& params);

// Spectrum in |E| < m from sign scans of the continuity-determinant
// surrogate, bisected to 1e-12 * m. The scan splits at the energies where
// the ansatz changes character (E = 0, -V, m - V when inside the window)
// and keeps 1e-6 * m clear of every subinterval end, so roots pinned to
// those lines are excluded by construction.
std::vector<BoundState> conventional_spectrum(const WellParams& params);

// Residual of the wall relation Psi(a) = sign * S Psi(0) for the wave,
// component-wise and relative to the largest wall component.
double wall_relation_residual(const PiecewiseWave& wave, WallRelation relation,
                              int sign);

// Result of probing both relations and both signs at one energy.
struct BoundaryCheck {
    WallRelation relation;  // combination with the smallest residual
    int sign;
    double residual;
    double residual_sigma3_plus;
    double residual_sigma3_minus;
    double residual_identity_plus;
    double residual_identity_minus;
    bool passed;  // residual < 1e-9
};

// Build the energy's natural two-wall state and test the wall relations.
// In -V + m < E < -m the state is the superposition of the left- and
// right-incidence scattering solutions; in |E| < m it is the null-space
// wave of the wall system. Only at spectral energies does any relation
// hold; elsewhere every combination fails by a wide margin. Throws
// WrongRegimeError outside the bound-capable zones.
BoundaryCheck verify_boundary_condition(double E, const WellParams& params);

// Comparison of a state's binding energy against the nonrelativistic
// infinite-well level (n pi / a)^2 / (2m). Binding is measured from the
// branch's own threshold: |E| - m on the depth-free branch, E + V - m
// otherwise. rel_error is 0 for n = 0.
struct NonrelComparison {
    int n;
    double E;
    double binding;
    double nonrel_binding;
    double rel_error;
};
NonrelComparison nonrelativistic_limit(const BoundState& state,
                                       const WellParams& params);

}  // namespace diracwell

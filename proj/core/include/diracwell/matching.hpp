#pragma once

#include <map>
#include <string>
#include <vector>

#include "diracwell/basis.hpp"
#include "diracwell/kinematics.hpp"
#include "diracwell/regime.hpp"
#include "diracwell/spinor.hpp"
#include "diracwell/well.hpp"

namespace diracwell {

// One coefficient-weighted basis family inside a piecewise solution. label
// is the coefficient's display name; the unit-amplitude incident term uses
// an empty label.
struct WaveTerm {
    Complex coef;
    BasisKind kind;
    std::string label;
};

enum class Piece { Left, Inside, Right };

// Piecewise spinor wave on the three intervals x < 0, [0, a], x > a.
struct PiecewiseWave {
    Kinematics kin{};
    double a = 0.0;
    std::vector<WaveTerm> left;
    std::vector<WaveTerm> inside;
    std::vector<WaveTerm> right;

    // Evaluate one piece's expansion at x, even outside its interval.
    Spinor eval(Piece piece, double x) const;

    // Evaluate at x using the piece that owns it ([0, a] maps to Inside).
    Spinor operator()(double x) const;
};

// A complete stationary solution at one energy. For scattering solves the
// incident amplitude is fixed to 1 and coefficients hold the named wall
// amplitudes; for bound-type solves the coefficients hold the null-space
// vector of the wall-continuity system.
struct SolutionSet {
    EnergyRegime regime;
    double E;
    WellParams params;
    std::map<std::string, Complex> coefficients;
    PiecewiseWave wave;
    // det of the homogeneous wall system; 0 for scattering solves.
    Complex determinant{0.0, 0.0};
    // smallest/largest singular value of the wall system; 0 for scattering.
    double bound_residual = 0.0;
    bool is_bound_state = false;
};

// Scattering solve, incident wave of unit amplitude approaching the well
// from the left. Requires oscillatory outside behavior (|E| > m); the
// inside expansion follows the zone's kinematics. Coefficients: R, A, B, T.
// Throws WrongRegimeError when |E| < m and EdgeEnergyError on edges
// (via kinematics). The Kinematics overload solves with the caller's
// values verbatim. The two-kinematics overload assembles the far wall's
// continuity rows from far_kin instead; the result is physical only when
// both agree, and disagreeing values are the fault-injection seam the
// verification battery uses to prove its unitarity check can fail (a
// consistent distortion cannot break coefficient unitarity: any exactly
// matched solve conserves the current whatever the spinor ratios are).
SolutionSet solve_left_incidence(double E, const WellParams& params);
SolutionSet solve_left_incidence(const Kinematics& kin, const WellParams& params);
SolutionSet solve_left_incidence(const Kinematics& kin, const Kinematics& far_kin,
                                 const WellParams& params);

// Mirror solve with the incident wave approaching from the right.
// Coefficients: R_hat, A_hat, B_hat, T_hat.
SolutionSet solve_right_incidence(double E, const WellParams& params);
SolutionSet solve_right_incidence(const Kinematics& kin, const WellParams& params);

// Sum of a left-incidence and a right-incidence solution at the same
// energy and well. The inside expansions merge into A_total = A + A_hat,
// B_total = B + B_hat; the outside pieces concatenate. Throws
// MismatchedEnergyError when the energies differ by more than 1e-15
// relative, WrongRegimeError when the arguments are not a (left, right)
// scattering pair, and std::invalid_argument on different wells.
SolutionSet superpose(const SolutionSet& left, const SolutionSet& right);

// Bound-type solve for |E| < m: left piece C times the decaying family,
// inside pair with coefficients A and B, right piece D times the decaying
// family. The wall system is homogeneous; its determinant and the ratio
// sigma_min/sigma_max are reported on the result. When the ratio is below
// 1e-9 the null vector becomes the (unnormalized) bound-state coefficients
// and is_bound_state is set. Throws WrongRegimeError when |E| > m.
SolutionSet solve_regime(double E, const WellParams& params);

// Determinant of the homogeneous wall system used by solve_regime.
Complex bound_determinant(double E, const WellParams& params);

// Real scalar with the same zeros as the determinant: the determinant is
// purely imaginary when the inside is oscillatory and purely real when it
// is evanescent, so the appropriate part carries all sign information.
double bound_determinant_surrogate(double E, const WellParams& params);

// Closed-form coefficients for transmission through the barrier-like
// zone -V + m < E < -m (requires V > 2m). Returns A, B, A_hat, B_hat,
// A_total, B_total and the real ratio q = (alpha beta - 1)/(alpha beta + 1)
// stored as a complex entry. Throws WrongRegimeError outside that zone and
// SingularMatchingError when |exp(2ipa) q^2 - 1| < 1e-10.
std::map<std::string, Complex> klein_closed_form(double E, const WellParams& params);

// Solution scaled by c: every coefficient and wave term is multiplied.
// A scattering solution loses its unit-incident normalization.
SolutionSet rescaled(const SolutionSet& sol, Complex c);

}  // namespace diracwell

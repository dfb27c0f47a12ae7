#include "diracwell/matching.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "diracwell/errors.hpp"

namespace diracwell {

namespace {

using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

BasisKind outside_kind(const Kinematics& kin, int sign) {
    return {Region::Outside,
            kin.osc_outside ? Character::Oscillatory : Character::Evanescent,
            sign, kin.up_outside ? Arrow::Up : Arrow::Down};
}

BasisKind inside_kind(const Kinematics& kin, int sign) {
    return {Region::Inside,
            kin.osc_inside ? Character::Oscillatory : Character::Evanescent,
            sign, kin.up_inside ? Arrow::Up : Arrow::Down};
}

// Solve M u = rhs with a conditioning guard; the wall system is singular
// only at zone edges, which kinematics() already rejects.
Vector4c guarded_solve(const Matrix4c& M, const Vector4c& rhs) {
    Eigen::JacobiSVD<Matrix4c> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    if (!(sv(3) > 1e-13 * sv(0))) {
        throw SingularMatchingError("wall continuity system is numerically singular");
    }
    return svd.solve(rhs);
}

SolutionSet scatter_solve(const Kinematics& kin, const Kinematics& far_kin,
                          const WellParams& params, bool from_left) {
    if (!kin.osc_outside) {
        throw WrongRegimeError(
            "scattering solve requires oscillatory outside behavior (|E| > m)");
    }
    const double a = params.a;
    const int toward_plus = kin.up_outside ? 1 : -1;
    const BasisKind inc = outside_kind(kin, from_left ? toward_plus : -toward_plus);
    const BasisKind refl = outside_kind(kin, from_left ? -toward_plus : toward_plus);
    const BasisKind in_p = inside_kind(kin, 1);
    const BasisKind in_m = inside_kind(kin, -1);

    const double x_inc = from_left ? 0.0 : a;    // wall carrying the incident wave
    const double x_out = from_left ? a : 0.0;    // opposite wall

    const Spinor inc_i = basis_spinor(inc, kin, x_inc);
    const Spinor refl_i = basis_spinor(refl, kin, x_inc);
    const Spinor ip_i = basis_spinor(in_p, kin, x_inc);
    const Spinor im_i = basis_spinor(in_m, kin, x_inc);
    const Spinor ip_o = basis_spinor(in_p, far_kin, x_out);
    const Spinor im_o = basis_spinor(in_m, far_kin, x_out);
    const Spinor tr_o = basis_spinor(inc, far_kin, x_out);

    // unknowns u = (R, A, B, T); rows 0-1 match the incident wall
    Matrix4c M = Matrix4c::Zero();
    Vector4c rhs = Vector4c::Zero();
    const Complex rc[2] = {refl_i.upper, refl_i.lower};
    const Complex ii[2] = {inc_i.upper, inc_i.lower};
    const Complex pi_[2] = {ip_i.upper, ip_i.lower};
    const Complex mi[2] = {im_i.upper, im_i.lower};
    const Complex po[2] = {ip_o.upper, ip_o.lower};
    const Complex mo[2] = {im_o.upper, im_o.lower};
    const Complex to[2] = {tr_o.upper, tr_o.lower};
    for (int i = 0; i < 2; ++i) {
        M(i, 0) = rc[i];
        M(i, 1) = -pi_[i];
        M(i, 2) = -mi[i];
        rhs(i) = -ii[i];
        M(2 + i, 1) = po[i];
        M(2 + i, 2) = mo[i];
        M(2 + i, 3) = -to[i];
    }
    const Vector4c u = guarded_solve(M, rhs);

    const std::string suffix = from_left ? "" : "_hat";
    SolutionSet sol{classify(kin.E, params), kin.E, params, {}, {}, {0.0, 0.0}, 0.0, false};
    sol.coefficients["R" + suffix] = u(0);
    sol.coefficients["A" + suffix] = u(1);
    sol.coefficients["B" + suffix] = u(2);
    sol.coefficients["T" + suffix] = u(3);

    PiecewiseWave wave;
    wave.kin = kin;
    wave.a = a;
    std::vector<WaveTerm> incident_side = {{Complex(1.0, 0.0), inc, ""},
                                           {u(0), refl, "R" + suffix}};
    std::vector<WaveTerm> transmitted_side = {{u(3), inc, "T" + suffix}};
    wave.inside = {{u(1), in_p, "A" + suffix}, {u(2), in_m, "B" + suffix}};
    if (from_left) {
        wave.left = std::move(incident_side);
        wave.right = std::move(transmitted_side);
    } else {
        wave.right = std::move(incident_side);
        wave.left = std::move(transmitted_side);
    }
    sol.wave = std::move(wave);
    return sol;
}

// Homogeneous wall system for |E| < m with unknowns (C, A, B, D):
// rows 0-1: C theta_L(0) - A in+(0) - B in-(0) = 0,
// rows 2-3: A in+(a) + B in-(a) - D theta_R(a) = 0.
Matrix4c bound_matrix(const Kinematics& kin, const WellParams& params) {
    const double a = params.a;
    const BasisKind out_l = outside_kind(kin, 1);   // decays toward -inf
    const BasisKind out_r = outside_kind(kin, -1);  // decays toward +inf
    const BasisKind in_p = inside_kind(kin, 1);
    const BasisKind in_m = inside_kind(kin, -1);

    const Spinor thL0 = basis_spinor(out_l, kin, 0.0);
    const Spinor thRa = basis_spinor(out_r, kin, a);
    const Spinor ip0 = basis_spinor(in_p, kin, 0.0);
    const Spinor im0 = basis_spinor(in_m, kin, 0.0);
    const Spinor ipa = basis_spinor(in_p, kin, a);
    const Spinor ima = basis_spinor(in_m, kin, a);

    Matrix4c M = Matrix4c::Zero();
    const Complex l0[2] = {thL0.upper, thL0.lower};
    const Complex ra[2] = {thRa.upper, thRa.lower};
    const Complex p0[2] = {ip0.upper, ip0.lower};
    const Complex m0[2] = {im0.upper, im0.lower};
    const Complex pa[2] = {ipa.upper, ipa.lower};
    const Complex ma[2] = {ima.upper, ima.lower};
    for (int i = 0; i < 2; ++i) {
        M(i, 0) = l0[i];
        M(i, 1) = -p0[i];
        M(i, 2) = -m0[i];
        M(2 + i, 1) = pa[i];
        M(2 + i, 2) = ma[i];
        M(2 + i, 3) = -ra[i];
    }
    return M;
}

Kinematics bound_kinematics(double E, const WellParams& params) {
    const Kinematics kin = kinematics(E, params);
    if (kin.osc_outside) {
        throw WrongRegimeError(
            "bound-type solve requires evanescent outside behavior (|E| < m)");
    }
    return kin;
}

}  // namespace

Spinor PiecewiseWave::eval(Piece piece, double x) const {
    const std::vector<WaveTerm>* terms = &inside;
    if (piece == Piece::Left) terms = &left;
    if (piece == Piece::Right) terms = &right;
    Spinor sum;
    for (const WaveTerm& t : *terms) {
        sum += t.coef * basis_spinor(t.kind, kin, x);
    }
    return sum;
}

Spinor PiecewiseWave::operator()(double x) const {
    if (x < 0.0) return eval(Piece::Left, x);
    if (x > a) return eval(Piece::Right, x);
    return eval(Piece::Inside, x);
}

SolutionSet solve_left_incidence(double E, const WellParams& params) {
    const Kinematics kin = kinematics(E, params);
    return scatter_solve(kin, kin, params, true);
}

SolutionSet solve_left_incidence(const Kinematics& kin, const WellParams& params) {
    return scatter_solve(kin, kin, params, true);
}

SolutionSet solve_left_incidence(const Kinematics& kin, const Kinematics& far_kin,
                                 const WellParams& params) {
    return scatter_solve(kin, far_kin, params, true);
}

SolutionSet solve_right_incidence(double E, const WellParams& params) {
    const Kinematics kin = kinematics(E, params);
    return scatter_solve(kin, kin, params, false);
}

SolutionSet solve_right_incidence(const Kinematics& kin, const WellParams& params) {
    return scatter_solve(kin, kin, params, false);
}

SolutionSet superpose(const SolutionSet& left, const SolutionSet& right) {
    if (left.params.m != right.params.m || left.params.V != right.params.V ||
        left.params.a != right.params.a) {
        throw std::invalid_argument("superpose: solutions belong to different wells");
    }
    const double scale = std::max(std::fabs(left.E), std::fabs(right.E));
    if (std::fabs(left.E - right.E) > 1e-15 * scale) {
        throw MismatchedEnergyError("superpose: energies differ beyond 1e-15 relative");
    }
    if (!left.coefficients.count("R") || !right.coefficients.count("R_hat")) {
        throw WrongRegimeError(
            "superpose expects a left-incidence and a right-incidence scattering solution");
    }

    SolutionSet sum{left.regime, left.E, left.params, left.coefficients,
                    {},          {0.0, 0.0},          0.0,    false};
    for (const auto& [key, value] : right.coefficients) {
        sum.coefficients[key] = value;
    }
    const Complex a_total = left.coefficients.at("A") + right.coefficients.at("A_hat");
    const Complex b_total = left.coefficients.at("B") + right.coefficients.at("B_hat");
    sum.coefficients["A_total"] = a_total;
    sum.coefficients["B_total"] = b_total;

    PiecewiseWave wave;
    wave.kin = left.wave.kin;
    wave.a = left.wave.a;
    wave.left = left.wave.left;
    wave.left.insert(wave.left.end(), right.wave.left.begin(), right.wave.left.end());
    wave.right = left.wave.right;
    wave.right.insert(wave.right.end(), right.wave.right.begin(), right.wave.right.end());
    wave.inside = {{a_total, left.wave.inside.at(0).kind, "A_total"},
                   {b_total, left.wave.inside.at(1).kind, "B_total"}};
    sum.wave = std::move(wave);
    return sum;
}

SolutionSet solve_regime(double E, const WellParams& params) {
    const Kinematics kin = bound_kinematics(E, params);
    const Matrix4c M = bound_matrix(kin, params);

    Eigen::JacobiSVD<Matrix4c> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double residual = sv(3) / sv(0);

    SolutionSet sol{classify(E, params), E, params, {}, {}, M.determinant(), residual, false};
    sol.is_bound_state = residual < 1e-9;

    Vector4c u = svd.matrixV().col(3);
    // Fix the arbitrary null-vector phase: largest component real positive.
    int imax = 0;
    for (int i = 1; i < 4; ++i) {
        if (std::abs(u(i)) > std::abs(u(imax))) imax = i;
    }
    if (std::abs(u(imax)) > 0.0) {
        u *= std::conj(u(imax)) / std::abs(u(imax));
    }
    sol.coefficients["C"] = u(0);
    sol.coefficients["A"] = u(1);
    sol.coefficients["B"] = u(2);
    sol.coefficients["D"] = u(3);

    PiecewiseWave wave;
    wave.kin = kin;
    wave.a = params.a;
    wave.left = {{u(0), outside_kind(kin, 1), "C"}};
    wave.inside = {{u(1), inside_kind(kin, 1), "A"}, {u(2), inside_kind(kin, -1), "B"}};
    wave.right = {{u(3), outside_kind(kin, -1), "D"}};
    sol.wave = std::move(wave);
    return sol;
}

Complex bound_determinant(double E, const WellParams& params) {
    const Kinematics kin = bound_kinematics(E, params);
    return bound_matrix(kin, params).determinant();
}

double bound_determinant_surrogate(double E, const WellParams& params) {
    const Kinematics kin = bound_kinematics(E, params);
    const Complex det = bound_matrix(kin, params).determinant();
    return kin.osc_inside ? det.imag() : det.real();
}

std::map<std::string, Complex> klein_closed_form(double E, const WellParams& params) {
    if (classify(E, params).zone != Zone::KleinZone) {
        throw WrongRegimeError(
            "closed-form coefficients exist only for -V + m < E < -m with V > 2m");
    }
    const Kinematics kin = kinematics(E, params);
    const double alpha = kin.alpha;
    const double beta = kin.beta;
    const double q = (alpha * beta - 1.0) / (alpha * beta + 1.0);
    const Complex phase2 = std::exp(Complex(0.0, 2.0 * kin.p * params.a));
    const Complex den = phase2 * q * q - 1.0;
    if (std::abs(den) < 1e-10) {
        throw SingularMatchingError("closed-form denominator vanishes");
    }
    const Complex pref = Complex(0.0, 2.0 * alpha / (alpha * beta + 1.0)) *
                         std::sqrt((1.0 + beta * beta) / (1.0 + alpha * alpha));
    const Complex A = pref / den;
    const Complex B = q * phase2 * A;
    const Complex B_hat =
        -pref * std::exp(Complex(0.0, (kin.k + kin.p) * params.a)) / den;
    const Complex A_hat = q * B_hat;

    std::map<std::string, Complex> out;
    out["A"] = A;
    out["B"] = B;
    out["A_hat"] = A_hat;
    out["B_hat"] = B_hat;
    out["A_total"] = A + A_hat;
    out["B_total"] = B + B_hat;
    out["q"] = Complex(q, 0.0);
    return out;
}

SolutionSet rescaled(const SolutionSet& sol, Complex c) {
    SolutionSet out = sol;
    for (auto& [key, value] : out.coefficients) {
        (void)key;
        value *= c;
    }
    for (auto* piece : {&out.wave.left, &out.wave.inside, &out.wave.right}) {
        for (WaveTerm& t : *piece) t.coef *= c;
    }
    return out;
}

}  // namespace diracwell

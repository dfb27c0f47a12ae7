#include "diracwell/observables.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "diracwell/errors.hpp"

namespace diracwell {

namespace {

void require_superposition(const SolutionSet& sol, const char* what) {
    if (!sol.coefficients.count("A_total") || !sol.coefficients.count("B_total")) {
        throw WrongRegimeError(std::string(what) +
                               " is defined for two-sided superpositions only");
    }
}

}  // namespace

double current(const Spinor& psi) {
    return 2.0 * std::imag(std::conj(psi.upper) * psi.lower);
}

double density(const Spinor& psi) {
    return std::norm(psi.upper) + std::norm(psi.lower);
}

CurrentProfile current_profile(const SolutionSet& sol, int n) {
    if (n < 2) throw std::invalid_argument("current_profile needs at least 2 samples");
    const double a = sol.wave.a;
    const double lo = -2.0 * a;
    const double hi = 3.0 * a;

    CurrentProfile out;
    out.samples.reserve(static_cast<std::size_t>(n));
    out.left_value = current(sol.wave.eval(Piece::Left, -a));
    out.inside_value = current(sol.wave.eval(Piece::Inside, 0.5 * a));
    out.right_value = current(sol.wave.eval(Piece::Right, 2.0 * a));
    out.max_region_deviation = 0.0;

    for (int i = 0; i < n; ++i) {
        const double x = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
        const Spinor psi = sol.wave(x);
        const double J = current(psi);
        out.samples.push_back({x, density(psi), J});
        const double region_value = (x < 0.0)   ? out.left_value
                                    : (x > a)   ? out.right_value
                                                : out.inside_value;
        out.max_region_deviation =
            std::max(out.max_region_deviation, std::fabs(J - region_value));
    }
    out.wall_jump_left = std::fabs(current(sol.wave.eval(Piece::Left, 0.0)) -
                                   current(sol.wave.eval(Piece::Inside, 0.0)));
    out.wall_jump_right = std::fabs(current(sol.wave.eval(Piece::Inside, a)) -
                                    current(sol.wave.eval(Piece::Right, a)));
    return out;
}

double inside_flux_scale(const SolutionSet& sol) {
    require_superposition(sol, "inside flux scale");
    const double a2 = std::norm(sol.coefficients.at("A_total"));
    const double b2 = std::norm(sol.coefficients.at("B_total"));
    const double beta = sol.wave.kin.beta;
    return std::max(a2, b2) * 2.0 * beta / (1.0 + beta * beta);
}

FluxBalance flux_balance(const SolutionSet& sol) {
    require_superposition(sol, "flux balance");
    const double a = sol.wave.a;
    FluxBalance out;
    out.left_current = current(sol.wave.eval(Piece::Left, -0.5 * a));
    out.inside_current = current(sol.wave.eval(Piece::Inside, 0.5 * a));
    out.right_current = current(sol.wave.eval(Piece::Right, 1.5 * a));
    out.scale = inside_flux_scale(sol);
    if (out.scale == 0.0) {
        out.balanced = true;
        return out;
    }
    const double tol = 1e-10 * std::max(out.scale, std::fabs(out.inside_current));
    out.balanced = std::fabs(out.left_current - out.inside_current) < tol &&
                   std::fabs(out.right_current - out.inside_current) < tol;
    return out;
}

WallQuench wall_current_quench(const SolutionSet& sol) {
    require_superposition(sol, "wall current quench");
    WallQuench out;
    out.current_at_0 = current(sol.wave.eval(Piece::Inside, 0.0));
    out.current_at_a = current(sol.wave.eval(Piece::Inside, sol.wave.a));
    out.scale = inside_flux_scale(sol);
    if (out.scale == 0.0) {
        out.residual = 0.0;
        out.quenched = true;
        return out;
    }
    out.residual =
        std::max(std::fabs(out.current_at_0), std::fabs(out.current_at_a)) / out.scale;
    out.quenched = out.residual < 1e-10;
    return out;
}

double l2_norm(const SolutionSet& sol) {
    const Kinematics& kin = sol.wave.kin;
    if (kin.osc_outside) {
        throw WrongRegimeError(
            "the full-line norm exists only for decaying-outside solutions (|E| < m)");
    }
    if (sol.wave.left.size() != 1 || sol.wave.right.size() != 1 ||
        sol.wave.inside.size() != 2) {
        throw WrongRegimeError("the full-line norm expects a bound-type wave layout");
    }
    const double k = kin.k;
    const double p = kin.p;
    const double beta = kin.beta;
    const double a = sol.wave.a;

    // Decaying tails integrate exactly: |exp(+-kx)|^2 has unit envelope at
    // the wall it attaches to.
    const double left = std::norm(sol.wave.left[0].coef) / (2.0 * k);
    const double right =
        std::norm(sol.wave.right[0].coef) * std::exp(-2.0 * k * a) / (2.0 * k);

    const Complex A = sol.wave.inside[0].coef;
    const Complex B = sol.wave.inside[1].coef;
    const double cross_ratio = (1.0 - beta * beta) / (1.0 + beta * beta);
    double inside;
    if (kin.osc_inside) {
        const Complex osc_int =
            (std::exp(Complex(0.0, 2.0 * p * a)) - 1.0) / Complex(0.0, 2.0 * p);
        inside = (std::norm(A) + std::norm(B)) * a +
                 2.0 * std::real(A * std::conj(B) * cross_ratio * osc_int);
    } else {
        inside = std::norm(A) * (std::exp(2.0 * p * a) - 1.0) / (2.0 * p) +
                 std::norm(B) * (1.0 - std::exp(-2.0 * p * a)) / (2.0 * p) +
                 2.0 * std::real(A * std::conj(B)) * cross_ratio * a;
    }
    return std::sqrt(left + inside + right);
}

}  // namespace diracwell

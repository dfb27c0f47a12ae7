#include "diracwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "diracwell/basis.hpp"
#include "diracwell/errors.hpp"

namespace diracwell {

namespace {

// One RK4 step of psi' = M psi with piecewise-constant coefficients.
// M is constant along the step, so the stage evaluations share it.
Spinor rk4_step(const Spinor& psi, double h, double c_plus, double c_minus) {
    auto deriv = [&](const Spinor& y) {
        return Spinor{c_plus * y.lower, c_minus * y.upper};
    };
    const Spinor k1 = deriv(psi);
    const Spinor k2 = deriv(psi + (0.5 * h) * k1);
    const Spinor k3 = deriv(psi + (0.5 * h) * k2);
    const Spinor k4 = deriv(psi + h * k3);
    return psi + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

bool strictly_inside(double lo, double hi, double wall) {
    return lo < wall && wall < hi;
}

struct RunResult {
    Spinor endpoint;
    double max_error;
};

RunResult run_grid(double E, const WellParams& params, const Spinor& psi0,
                   double x0, double x1, int n_steps,
                   const std::optional<ReferenceField>& reference) {
    // Midpoint decides the region; the caller guarantees no wall crossing.
    const double v = params.potential(0.5 * (x0 + x1));
    const double c_plus = E - v + params.m;
    const double c_minus = v - E + params.m;
    const double h = (x1 - x0) / n_steps;

    RunResult out{psi0, 0.0};
    if (reference) {
        const Spinor ref = reference->eval(x0, reference->ctx);
        out.max_error = max_abs(out.endpoint - ref);
    }
    for (int i = 0; i < n_steps; ++i) {
        out.endpoint = rk4_step(out.endpoint, h, c_plus, c_minus);
        if (reference) {
            const double x = x0 + (i + 1) * h;
            const Spinor ref = reference->eval(x, reference->ctx);
            out.max_error = std::max(out.max_error, max_abs(out.endpoint - ref));
        }
    }
    return out;
}

}  // namespace

IntegrationReport integrate_dirac(double E, const WellParams& params,
                                  const Spinor& psi0, double x0, double x1,
                                  int n_steps,
                                  std::optional<ReferenceField> reference) {
    if (n_steps < 1) throw std::invalid_argument("integrate_dirac: n_steps must be >= 1");
    if (!(x0 < x1)) throw std::invalid_argument("integrate_dirac: needs x0 < x1");
    if (strictly_inside(x0, x1, 0.0) || strictly_inside(x0, x1, params.a)) {
        throw std::invalid_argument(
            "integrate_dirac: interval straddles a wall; integrate each region "
            "separately");
    }

    const RunResult coarse = run_grid(E, params, psi0, x0, x1, n_steps, reference);
    const RunResult fine = run_grid(E, params, psi0, x0, x1, 2 * n_steps, {});
    if (max_abs(coarse.endpoint - fine.endpoint) > 1e-8) {
        throw StepTooCoarseError(
            "integrate_dirac: halving the step moved the endpoint by more than "
            "1e-8; increase n_steps");
    }

    IntegrationReport report;
    report.endpoint_spinor = coarse.endpoint;
    report.max_component_error = coarse.max_error;
    report.step = (x1 - x0) / n_steps;
    report.n_steps = n_steps;
    return report;
}

double component_relation_residual(double E, const WellParams& params,
                                   const BasisKind& kind, double x,
                                   bool wrong_sign) {
    const Kinematics kin = kinematics(E, params);
    const Spinor psi = basis_spinor(kind, kin, x);
    const Spinor dpsi = basis_derivative(kind, kin, x);
    const double v = (kind.region == Region::Inside) ? -params.V : 0.0;
    const double w = E - v;
    const double sgn = wrong_sign ? -1.0 : 1.0;
    if (kind.arrow == Arrow::Up) {
        return std::abs(psi.lower - dpsi.upper / (params.m + sgn * w));
    }
    return std::abs(psi.upper - dpsi.lower / (params.m - sgn * w));
}

double second_order_residual(double E, const WellParams& params,
                             const BasisKind& kind, double x) {
    const Kinematics kin = kinematics(E, params);
    const Spinor psi = basis_spinor(kind, kin, x);
    const auto [q, osc] = [&] {
        if (kind.region == Region::Outside) return std::pair{kin.k, kin.osc_outside};
        return std::pair{kin.p, kin.osc_inside};
    }();
    // Exponential families obey psi'' = lambda^2 psi with lambda = (+-i)q,
    // so psi'' is just a scalar multiple of psi.
    const double lambda2 = osc ? -q * q : q * q;
    const double v = (kind.region == Region::Inside) ? -params.V : 0.0;
    const double w = E - v;
    const double coeff = w * w - params.m * params.m;
    const Spinor resid = (lambda2 + coeff) * psi;
    return max_abs(resid);
}

}  // namespace diracwell

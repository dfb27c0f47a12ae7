#include "diracwell/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "diracwell/errors.hpp"
#include "diracwell/kinematics.hpp"
#include "diracwell/regime.hpp"

namespace diracwell {

namespace {

constexpr double kPi = std::numbers::pi;

// Bracketing sign scan with bisection on each bracket. f must be finite on
// [lo, hi]; the grid spacing decides which roots are seen.
template <typename F>
std::vector<double> sign_scan_roots(const F& f, double lo, double hi, int n,
                                    double tol) {
    std::vector<double> roots;
    if (!(lo < hi) || n < 1) return roots;
    double x0 = lo;
    double f0 = f(x0);
    if (f0 == 0.0) roots.push_back(x0);
    for (int i = 1; i <= n; ++i) {
        const double x1 = lo + (hi - lo) * static_cast<double>(i) / n;
        const double f1 = f(x1);
        if (f1 == 0.0) {
            roots.push_back(x1);
        } else if (f0 != 0.0 && (f0 < 0.0) != (f1 < 0.0)) {
            double blo = x0;
            double bhi = x1;
            const bool neg_lo = f0 < 0.0;
            while (bhi - blo > tol) {
                const double mid = 0.5 * (blo + bhi);
                const double fm = f(mid);
                if (fm == 0.0) {
                    blo = mid;
                    bhi = mid;
                    break;
                }
                if ((fm < 0.0) == neg_lo) {
                    blo = mid;
                } else {
                    bhi = mid;
                }
            }
            roots.push_back(0.5 * (blo + bhi));
        }
        x0 = x1;
        f0 = f1;
    }
    return roots;
}

void require_klein_zone(const WellParams& params) {
    if (!params.has_klein_zone()) {
        throw NoKleinZoneError("the zone -V + m < E < -m is empty for V <= 2m");
    }
}

double branch_level(int n, const WellParams& params) {
    const double t = static_cast<double>(n) * kPi / (params.m * params.a);
    return params.m * std::sqrt(1.0 + t * t);
}

BoundState make_klein_state(int n, Branch branch, const WellParams& params) {
    BoundState st;
    st.n = n;
    st.branch = branch;
    // The depth-free branch never mentions V; keeping the expression free
    // of it is what makes the energies bit-identical across well depths.
    st.E = (branch == Branch::KleinKa) ? -branch_level(n, params)
                                       : -params.V + branch_level(n, params);
    st.parity_sign = ((branch == Branch::KleinKa ? n + 1 : n) % 2 == 0) ? 1 : -1;
    const double W = st.E + params.V;
    st.k = std::sqrt(std::fabs(st.E * st.E - params.m * params.m));
    st.p = std::sqrt(std::fabs(W * W - params.m * params.m));
    const double tol = 1e-12 * params.m;
    st.edge = std::fabs(st.E + params.m) <= tol ||
              std::fabs(st.E + params.V - params.m) <= tol;
    st.coincident = false;
    return st;
}

}  // namespace

WallRelation BoundState::wall_relation() const {
    return branch == Branch::KleinPa ? WallRelation::Identity : WallRelation::Sigma3;
}

std::string BoundState::selected_by() const {
    switch (branch) {
        case Branch::KleinKa: return "sigma3_wall_relation";
        case Branch::KleinPa: return "identity_wall_relation";
        case Branch::Conventional: return "continuity_determinant";
    }
    return "continuity_determinant";
}

double klein_condition(double E, const WellParams& params) {
    const double m = params.m;
    const double W = E + params.V;
    const double k = std::sqrt(std::fabs(E * E - m * m));
    const double p = std::sqrt(std::fabs(W * W - m * m));
    return std::cos((p + k) * params.a) - std::cos((p - k) * params.a);
}

int klein_n_max(const WellParams& params) {
    require_klein_zone(params);
    const double ratio = params.V / params.m - 1.0;
    const double arg = std::max(ratio * ratio - 1.0, 0.0);
    return static_cast<int>(
        std::floor(params.m * params.a / kPi * std::sqrt(arg)));
}

std::vector<BoundState> klein_spectrum(const WellParams& params) {
    require_klein_zone(params);
    const int n_max = klein_n_max(params);
    std::vector<BoundState> out;
    out.reserve(2 * (n_max + 1));
    for (int n = 0; n <= n_max; ++n) {
        out.push_back(make_klein_state(n, Branch::KleinKa, params));
        out.push_back(make_klein_state(n, Branch::KleinPa, params));
    }
    std::sort(out.begin(), out.end(), [](const BoundState& x, const BoundState& y) {
        if (x.E != y.E) return x.E < y.E;
        return x.branch < y.branch;
    });
    const double same = 1e-10 * params.m;
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].branch != out[i - 1].branch &&
            std::fabs(out[i].E - out[i - 1].E) <= same) {
            out[i].coincident = true;
            out[i - 1].coincident = true;
        }
    }
    return out;
}

std::vector<KleinRoot> scan_klein_roots(const WellParams& params) {
    require_klein_zone(params);
    const double m = params.m;
    const double V = params.V;
    const double a = params.a;
    const double margin = 1e-9 * m;
    const double lo = -V + m + margin;
    const double hi = -m - margin;
    std::vector<KleinRoot> out;
    if (!(lo < hi)) return out;

    // k and p both peak at sqrt((V - m)^2 - m^2) on this zone's closures.
    const double q_max = std::sqrt((V - m) * (V - m) - m * m);
    const int n = std::max(4001, static_cast<int>(std::ceil(
                                     40.0 * (1.0 + 2.0 * q_max * a / kPi))));
    const double tol = 0.5e-12 * m;

    const auto f_ka = [&](double E) {
        return std::sin(std::sqrt(std::fabs(E * E - m * m)) * a);
    };
    const auto f_pa = [&](double E) {
        const double W = E + V;
        return std::sin(std::sqrt(std::fabs(W * W - m * m)) * a);
    };
    const std::vector<double> ka_roots = sign_scan_roots(f_ka, lo, hi, n, tol);
    const std::vector<double> pa_roots = sign_scan_roots(f_pa, lo, hi, n, tol);

    out.reserve(ka_roots.size() + pa_roots.size());
    for (double E : ka_roots) out.push_back({E, true, false});
    const double same = 1e-10 * m;
    for (double E : pa_roots) {
        bool merged = false;
        for (KleinRoot& r : out) {
            if (std::fabs(r.E - E) <= same) {
                r.from_pa = true;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back({E, false, true});
    }
    std::sort(out.begin(), out.end(),
              [](const KleinRoot& x, const KleinRoot& y) { return x.E < y.E; });
    return out;
}

std::vector<BoundState> conventional_spectrum(const WellParams& params) {
    const double m = params.m;
    const double V = params.V;
    const double a = params.a;

    // Scan subintervals split where the decaying ansatz changes: outside
    // component order flips at E = 0, inside order at E = -V, inside
    // character at E = m - V.
    std::vector<double> pts = {-m, m};
    for (double s : {0.0, -V, m - V}) {
        if (s > -m && s < m) pts.push_back(s);
    }
    std::sort(pts.begin(), pts.end());

    const double p_max = std::sqrt((V + m) * (V + m) - m * m);
    const int n = std::max(
        256, static_cast<int>(std::ceil(25.0 * (1.0 + p_max * a / kPi))));
    const double margin = 1e-6 * m;
    const double tol = 0.5e-12 * m;

    const auto surrogate = [&](double E) {
        return bound_determinant_surrogate(E, params);
    };

    std::vector<double> roots;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const double lo = pts[i - 1] + margin;
        const double hi = pts[i] - margin;
        if (!(lo < hi)) continue;
        const std::vector<double> part = sign_scan_roots(surrogate, lo, hi, n, tol);
        roots.insert(roots.end(), part.begin(), part.end());
    }
    std::sort(roots.begin(), roots.end());
    const double same = 1e-10 * m;
    std::vector<double> unique_roots;
    for (double r : roots) {
        if (unique_roots.empty() || r - unique_roots.back() > same) {
            unique_roots.push_back(r);
        }
    }

    std::vector<BoundState> out;
    out.reserve(unique_roots.size());
    for (double E : unique_roots) {
        const Kinematics kin = kinematics(E, params);
        BoundState st;
        st.E = E;
        st.branch = Branch::Conventional;
        st.k = kin.k;
        st.p = kin.p;
        st.edge = false;
        st.coincident = false;
        if (kin.osc_inside) {
            // inside phase accumulated between the walls:
            //   E > 0:  p a = 2 atan(alpha / beta) + n pi
            //   E < 0:  p a = 2 atan(1 / (alpha beta)) + n pi
            const double offset = (E >= 0.0)
                                      ? 2.0 * std::atan(kin.alpha / kin.beta)
                                      : 2.0 * std::atan(1.0 / (kin.alpha * kin.beta));
            st.n = static_cast<int>(std::lround((kin.p * a - offset) / kPi));
            st.parity_sign = (st.n % 2 == 0) ? 1 : -1;
        } else {
            st.n = 0;
            st.parity_sign = 1;
        }
        out.push_back(st);
    }
    return out;
}

double wall_relation_residual(const PiecewiseWave& wave, WallRelation relation,
                              int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("wall relation sign must be +1 or -1");
    }
    const Spinor at0 = wave.eval(Piece::Inside, 0.0);
    const Spinor ata = wave.eval(Piece::Inside, wave.a);
    Spinor mapped = at0;
    if (relation == WallRelation::Sigma3) mapped.lower = -mapped.lower;
    mapped *= Complex(static_cast<double>(sign), 0.0);
    const double scale = std::max({max_abs(at0), max_abs(ata), 1e-300});
    return std::max(std::abs(ata.upper - mapped.upper),
                    std::abs(ata.lower - mapped.lower)) /
           scale;
}

BoundaryCheck verify_boundary_condition(double E, const WellParams& params) {
    const EnergyRegime regime = classify(E, params);
    PiecewiseWave wave;
    if (regime.zone == Zone::KleinZone) {
        wave = superpose(solve_left_incidence(E, params),
                         solve_right_incidence(E, params))
                   .wave;
    } else if (regime.zone == Zone::BoundUpper || regime.zone == Zone::BoundLower) {
        wave = solve_regime(E, params).wave;
    } else {
        throw WrongRegimeError(
            "wall-relation check requires |E| < m or -V + m < E < -m");
    }

    BoundaryCheck out{};
    out.residual_sigma3_plus = wall_relation_residual(wave, WallRelation::Sigma3, 1);
    out.residual_sigma3_minus = wall_relation_residual(wave, WallRelation::Sigma3, -1);
    out.residual_identity_plus = wall_relation_residual(wave, WallRelation::Identity, 1);
    out.residual_identity_minus = wall_relation_residual(wave, WallRelation::Identity, -1);

    out.relation = WallRelation::Sigma3;
    out.sign = 1;
    out.residual = out.residual_sigma3_plus;
    const struct {
        WallRelation relation;
        int sign;
        double residual;
    } rest[] = {
        {WallRelation::Sigma3, -1, out.residual_sigma3_minus},
        {WallRelation::Identity, 1, out.residual_identity_plus},
        {WallRelation::Identity, -1, out.residual_identity_minus},
    };
    for (const auto& c : rest) {
        if (c.residual < out.residual) {
            out.relation = c.relation;
            out.sign = c.sign;
            out.residual = c.residual;
        }
    }
    out.passed = out.residual < 1e-9;
    return out;
}

NonrelComparison nonrelativistic_limit(const BoundState& state,
                                       const WellParams& params) {
    const double level = static_cast<double>(state.n) * kPi / params.a;
    const double nonrel = level * level / (2.0 * params.m);
    const double binding = (state.branch == Branch::KleinKa)
                               ? std::fabs(state.E) - params.m
                               : state.E + params.V - params.m;
    const double rel_error =
        (state.n == 0) ? 0.0 : std::fabs(binding - nonrel) / nonrel;
    return {state.n, state.E, binding, nonrel, rel_error};
}

}  // namespace diracwell

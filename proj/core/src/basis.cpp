#include "diracwell/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace diracwell {

namespace {

void check_sign(int s) {
    if (s != 1 && s != -1) {
        throw std::invalid_argument("basis: direction_sign must be +1 or -1");
    }
}

struct RegionParams {
    double q;  // wave number
    double r;  // amplitude ratio
};

RegionParams region_params(const BasisKind& kind, const Kinematics& kin) {
    if (kind.region == Region::Outside) return {kin.k, kin.alpha};
    return {kin.p, kin.beta};
}

}  // namespace

Spinor basis_spinor(const BasisKind& kind, const Kinematics& kin, double x) {
    check_sign(kind.direction_sign);
    const auto [q, r] = region_params(kind, kin);
    const double s = static_cast<double>(kind.direction_sign);
    const double norm = std::sqrt(1.0 + r * r);

    Complex envelope;
    Complex minor;  // the secondary component's amplitude, sign folded in
    if (kind.character == Character::Oscillatory) {
        envelope = std::exp(Complex(0.0, s * q * x));
        minor = Complex(0.0, s * r);
    } else {
        envelope = Complex(std::exp(s * q * x), 0.0);
        minor = Complex(s * r, 0.0);
    }

    Spinor out;
    if (kind.arrow == Arrow::Up) {
        out.upper = envelope / norm;
        out.lower = minor * envelope / norm;
    } else {
        out.upper = minor * envelope / norm;
        out.lower = envelope / norm;
    }
    return out;
}

Spinor basis_derivative(const BasisKind& kind, const Kinematics& kin, double x) {
    const auto [q, r] = region_params(kind, kin);
    (void)r;
    const double s = static_cast<double>(kind.direction_sign);
    const Complex factor = (kind.character == Character::Oscillatory)
                               ? Complex(0.0, s * q)
                               : Complex(s * q, 0.0);
    return factor * basis_spinor(kind, kin, x);
}

int phase_velocity_direction(const BasisKind& kind) {
    check_sign(kind.direction_sign);
    if (kind.character == Character::Evanescent) return 0;
    return kind.arrow == Arrow::Up ? kind.direction_sign : -kind.direction_sign;
}

std::string kind_label(const BasisKind& kind) {
    check_sign(kind.direction_sign);
    std::string out = (kind.character == Character::Oscillatory) ? "φ" : "θ";
    out += (kind.region == Region::Outside) ? "⁻" : "⁺";
    out += (kind.direction_sign > 0) ? "₊" : "₋";
    out += (kind.arrow == Arrow::Up) ? "↑" : "↓";
    return out;
}

}  // namespace diracwell

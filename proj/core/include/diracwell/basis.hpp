#pragma once

#include <string>

#include "diracwell/kinematics.hpp"
#include "diracwell/spinor.hpp"

namespace diracwell {

// The solution basis consists of 16 spinor families: {outside, inside} x
// {oscillatory, evanescent} x {sign +, sign -} x {arrow up, arrow down}.
// With q and r the region's wave number and amplitude ratio (q = k,
// r = alpha outside; q = p, r = beta inside) and s the direction sign:
//
//   oscillatory up    (1, s*i*r)^T e^{s*i*q*x} / sqrt(1 + r^2)
//   oscillatory down  (s*i*r, 1)^T e^{s*i*q*x} / sqrt(1 + r^2)
//   evanescent  up    (1, s*r)^T   e^{s*q*x}   / sqrt(1 + r^2)
//   evanescent  down  (s*r, 1)^T   e^{s*q*x}   / sqrt(1 + r^2)
//
// Up families solve the coupled first-order system when the local energy
// E - V(x) is positive, down families when it is negative; both satisfy it
// exactly in either case only for their matching arrow, which is why zone
// dispatch selects the arrow from the sign of the local energy.

enum class Region { Outside, Inside };
enum class Character { Oscillatory, Evanescent };
enum class Arrow { Up, Down };

struct BasisKind {
    Region region;
    Character character;
    int direction_sign;  // +1 or -1
    Arrow arrow;
};

// Evaluate the family at x. Throws std::invalid_argument if direction_sign
// is not +1 or -1. kin must come from kinematics() for the same well.
Spinor basis_spinor(const BasisKind& kind, const Kinematics& kin, double x);

// Analytic x-derivative of basis_spinor: the same spinor scaled by
// s*i*q (oscillatory) or s*q (evanescent).
Spinor basis_derivative(const BasisKind& kind, const Kinematics& kin, double x);

// Direction of travel of the phase: +1 toward +x, -1 toward -x, 0 for
// evanescent families, which carry no phase velocity. Oscillatory up
// families travel along their direction sign; down families opposite it.
int phase_velocity_direction(const BasisKind& kind);

// Compact display label, e.g. the outside oscillatory +-sign up family.
// Region is marked by a superscript (- outside, + inside), the direction
// sign by a subscript, the arrow by itself.
std::string kind_label(const BasisKind& kind);

}  // namespace diracwell

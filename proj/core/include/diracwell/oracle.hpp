#pragma once

#include <optional>

#include "diracwell/matching.hpp"
#include "diracwell/spinor.hpp"
#include "diracwell/well.hpp"

namespace diracwell {

// Result of integrating the first-order system
//   psi+' = (E - V(x) + m) psi-,   psi-' = (V(x) - E + m) psi+
// across one region with classical fixed-step RK4.
struct IntegrationReport {
    Spinor endpoint_spinor;       // psi at x1
    double max_component_error;   // max |psi_RK4 - reference| over the grid,
                                  // 0 when no reference closure is supplied
    double step;                  // h actually used
    int n_steps;
    int method_order = 4;
};

// Reference closure type: the analytic field to compare against at each
// accepted grid point.
using SpinorField = Spinor (*)(double x, const void* ctx);

struct ReferenceField {
    SpinorField eval;
    const void* ctx;
};

// Integrate from x0 to x1 (x0 < x1) with n_steps RK4 steps. The interval
// must not straddle a wall (x = 0 or x = a): the coupling matrix is
// discontinuous there and stepping across it silently degrades the order.
// Bad intervals throw std::invalid_argument.
//
// A half-step rerun guards against too-coarse grids: if the two endpoint
// answers differ by more than 1e-8 (absolute, per component), the call
// throws StepTooCoarseError.
//
// When a reference field is given, max_component_error tracks the largest
// deviation from it over all grid points of the h run.
IntegrationReport integrate_dirac(double E, const WellParams& params,
                                  const Spinor& psi0, double x0, double x1,
                                  int n_steps = 10000,
                                  std::optional<ReferenceField> reference = {});

// First-order consistency residual of one basis family at x: each solution
// component determines the other through the local energy W = E - V.
//   Up   checks  |psi-  -  psi+' / (m + W)|
//   Down checks  |psi+  -  psi-' / (m - W)|
// Exact families give residuals at roundoff. wrong_sign flips the
// denominator within the same relation, which any genuine solution fails
// at O(1); it exists so tests can prove the residual is discriminating.
double component_relation_residual(double E, const WellParams& params,
                                   const BasisKind& kind, double x,
                                   bool wrong_sign = false);

// Second-order residual |psi'' + ((E - V)^2 - m^2) psi| of one basis
// family at x, component-wise maximum. Both components satisfy the same
// scalar equation, so one residual covers the pair.
double second_order_residual(double E, const WellParams& params,
                             const BasisKind& kind, double x);

}  // namespace diracwell

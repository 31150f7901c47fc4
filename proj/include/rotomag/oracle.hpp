#ifndef ROTOMAG_ORACLE_HPP
#define ROTOMAG_ORACLE_HPP

#include <vector>

#include "rotomag/phases.hpp"

namespace rotomag {

/// Brute-force integration record of i dpsi/dt = H(t) psi.
struct Trajectory {
  std::vector<double> times;   // ascending, times[0] = 0
  std::vector<Vector> states;  // one unit vector per time
  double step = 0.0;
};

/// Fixed-step classical 4th-order integration of the lab-frame equation,
/// evaluating H(t) at t, t + h/2, t + h each step. Requires a normalized
/// psi0 and steps >= 100; rejects steps with |H| h > 0.1 (stability guard).
Trajectory integrate_tdse(const Scenario& sc, const Vector& psi0, double t_end, int steps);

/// Dynamic phase -integral <psi(t)|H(t)|psi(t)> dt over the trajectory by
/// composite Simpson quadrature, reduced to (-pi, pi]. Requires an even
/// number of steps (pad the trajectory by one step otherwise).
double dynamic_phase_quadrature(const Trajectory& tr, const Scenario& sc);

/// Same quadrature without the principal-value reduction.
double dynamic_phase_quadrature_raw(const Trajectory& tr, const Scenario& sc);

/// Operator-norm distance between the analytic propagator U(t) and the
/// column-by-column integrated one.
double propagator_mismatch(const Scenario& sc, double t, int steps);

}  // namespace rotomag

#endif

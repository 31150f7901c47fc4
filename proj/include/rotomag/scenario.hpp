#ifndef ROTOMAG_SCENARIO_HPP
#define ROTOMAG_SCENARIO_HPP

#include <numbers>
#include <optional>
#include <utility>
#include <variant>

#include "rotomag/angular_momentum.hpp"

namespace rotomag {

/// Magnetic field of constant magnitude rotating about the z axis: direction
/// n(t) = (sin theta_b cos wt, sin theta_b sin wt, cos theta_b). hbar = 1
/// throughout; all couplings enter as frequencies.
struct RotatingField {
  double omega = 1.0;    // rotation rate, > 0
  double theta_b = 0.0;  // tilt angle in [0, pi]
  double period() const { return 2.0 * std::numbers::pi / omega; }
};

/// Valence electron in a strong rotating field: Zeeman coupling omega0 =
/// mu_B B / hbar, one fixed (n,l) shell with scalar shell energy epsilon_nl,
/// spin 1/2.
struct ScenarioA {
  RotatingField field;
  double omega0 = 1.0;
  int l = 0;
  double epsilon_nl = 0.0;
  static constexpr int two_s = 1;
};

/// Weak-field variant of ScenarioA: adds the shell-constant spin-orbit
/// coupling xi_nl * l.s.
struct ScenarioB : ScenarioA {
  double xi_nl = 0.0;
};

/// Free charged particle with arbitrary spin: cyclotron-like frequency
/// omega1 = |q|B/2Mc, spin coupling omega2 = |mu|B/(s hbar), charge and
/// moment signs, and a z box of length box_d. M = hbar = 1 internally.
struct ScenarioC {
  RotatingField field;
  int two_s = 1;
  int sign_q = +1;
  int sign_mu = +1;
  double omega1 = 1.0;
  double omega2 = 1.0;
  double box_d = 1.0;
};

using Scenario = std::variant<ScenarioA, ScenarioB, ScenarioC>;

/// One precession cone of the rotating-frame solution: effective frequency,
/// tilt angle against the rotation axis, the unit vector in the xz plane,
/// and the subtended solid angle 2 pi (1 - cos theta).
struct TiltedAxis {
  double omega = 0.0;
  double theta = 0.0;
  Vec3 n = Vec3(0, 0, 1);
  double solid_angle = 0.0;
};

/// Effective frame of the rotating-frame transformation. The orbital cone is
/// absent for ScenarioC, where the orbital tilt is theta_b itself at first
/// order.
struct DerivedFrame {
  std::optional<TiltedAxis> orbital;
  TiltedAxis spin;
  double solid_angle_field = 0.0;  // 2 pi (1 - cos theta_b)
};

/// Field direction n(t); always a unit vector.
Vec3 field_direction(const RotatingField& field, double t);

/// Orbital and spin cones for the strong-field electron. Throws
/// std::domain_error when omega_L or omega_S vanishes (tilt undefined).
DerivedFrame derive_frame_a(const ScenarioA& sc);

/// Spin cone for the free charged particle; orbital part left empty.
/// Throws std::domain_error when omega_S vanishes.
DerivedFrame derive_frame_c(const ScenarioC& sc);

/// (N_L, N_S) when omega_L/omega and omega_S/omega are both within tol of
/// positive integers, otherwise empty. Requires 0 < tol < 0.5.
std::optional<std::pair<int, int>> resonance_orders(const ScenarioA& sc, double tol = 1e-9);

}  // namespace rotomag

#endif

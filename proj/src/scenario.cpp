#include "rotomag/scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rotomag {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double solid_angle_of(double cos_theta) { return two_pi * (1.0 - cos_theta); }

/// Tilted cone from the unnormalized components (omega sin, omega cos).
/// Rejects a vanishing effective frequency, where the tilt is undefined.
TiltedAxis make_axis(double omega_sin, double omega_cos, double scale, const char* which) {
  const double omega_eff = std::hypot(omega_sin, omega_cos);
  if (omega_eff <= 1e-12 * scale)
    throw std::domain_error(std::string("derive_frame: effective frequency ") + which +
                            " vanishes; tilt angle undefined");
  TiltedAxis ax;
  ax.omega = omega_eff;
  ax.theta = std::atan2(omega_sin / omega_eff, omega_cos / omega_eff);
  ax.n = Vec3(omega_sin / omega_eff, 0.0, omega_cos / omega_eff);
  ax.solid_angle = solid_angle_of(omega_cos / omega_eff);
  return ax;
}

void validate_field(const RotatingField& f) {
  if (!(f.omega > 0)) throw std::invalid_argument("field: omega must be > 0");
  if (f.theta_b < 0 || f.theta_b > std::numbers::pi)
    throw std::invalid_argument("field: theta_b must lie in [0, pi]");
}

}  // namespace

Vec3 field_direction(const RotatingField& field, double t) {
  const double st = std::sin(field.theta_b);
  return Vec3(st * std::cos(field.omega * t), st * std::sin(field.omega * t),
              std::cos(field.theta_b));
}

DerivedFrame derive_frame_a(const ScenarioA& sc) {
  validate_field(sc.field);
  if (!(sc.omega0 > 0)) throw std::invalid_argument("scenario A: omega0 must be > 0");

  const double w = sc.field.omega, w0 = sc.omega0;
  const double sb = std::sin(sc.field.theta_b), cb = std::cos(sc.field.theta_b);
  const double scale = std::max(w, w0);

  DerivedFrame frame;
  // omega_L n_L = omega0 n0 - omega z, omega_S n_S = 2 omega0 n0 - omega z
  frame.orbital = make_axis(w0 * sb, w0 * cb - w, scale, "omega_L");
  frame.spin = make_axis(2.0 * w0 * sb, 2.0 * w0 * cb - w, scale, "omega_S");
  frame.solid_angle_field = solid_angle_of(cb);
  return frame;
}

DerivedFrame derive_frame_c(const ScenarioC& sc) {
  validate_field(sc.field);
  if (!(sc.omega1 > 0) || !(sc.omega2 > 0))
    throw std::invalid_argument("scenario C: omega1 and omega2 must be > 0");
  if (!(sc.box_d > 0)) throw std::invalid_argument("scenario C: box_d must be > 0");
  if (sc.two_s < 1) throw std::invalid_argument("scenario C: two_s must be >= 1");
  if (sc.sign_q * sc.sign_q != 1 || sc.sign_mu * sc.sign_mu != 1)
    throw std::invalid_argument("scenario C: sign_q and sign_mu must be +1 or -1");

  const double w = sc.field.omega, w2 = sc.omega2;
  const double sb = std::sin(sc.field.theta_b), cb = std::cos(sc.field.theta_b);

  DerivedFrame frame;
  // omega_S n_S = omega2 n0 + eps(mu) omega z
  frame.spin = make_axis(w2 * sb, w2 * cb + sc.sign_mu * w, std::max(w, w2), "omega_S");
  frame.solid_angle_field = solid_angle_of(cb);
  return frame;
}

std::optional<std::pair<int, int>> resonance_orders(const ScenarioA& sc, double tol) {
  if (!(tol > 0.0 && tol < 0.5))
    throw std::invalid_argument("resonance_orders: tol must lie in (0, 0.5)");
  const DerivedFrame frame = derive_frame_a(sc);

  const auto near_positive_integer = [tol](double ratio) -> std::optional<int> {
    const int n = static_cast<int>(std::lround(ratio));
    if (n >= 1 && std::abs(ratio - n) <= tol) return n;
    return std::nullopt;
  };

  const auto nl = near_positive_integer(frame.orbital->omega / sc.field.omega);
  const auto ns = near_positive_integer(frame.spin.omega / sc.field.omega);
  if (nl && ns) return std::make_pair(*nl, *ns);
  return std::nullopt;
}

}  // namespace rotomag

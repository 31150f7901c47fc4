#ifndef ROTOMAG_PHASES_HPP
#define ROTOMAG_PHASES_HPP

#include <span>
#include <vector>

#include "rotomag/propagator.hpp"

namespace rotomag {

/// Principal value of an angle, reduced into (-pi, pi].
double principal_value(double angle);

/// |principal_value(a - b)|: distance between two angles mod 2 pi.
double angle_distance(double a, double b);

/// Lab-frame Hamiltonian H(t) on the product basis. For ScenarioC only the
/// (decoupled) spin sector is materialized.
Matrix matrix_h_of_t(const Scenario& sc, double t);

/// Phase decomposition of one cyclic solution over a field period:
/// total delta, dynamic beta, geometric gamma = delta - beta, all reduced
/// to (-pi, pi]; raw (unreduced) values kept for debugging.
struct PhaseReport {
  std::optional<StateLabel> label;
  double energy = 0.0;
  double jz_expect = 0.0;
  double delta = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta_raw = 0.0;
  double beta_raw = 0.0;
  std::optional<double> gamma_closed_form;
  /// ScenarioC closed form only: the orbital solid-angle term is first-order
  /// approximate while the spin term is exact.
  bool closed_form_orbital_approximate = false;
};

/// Phase report for an eigenstate phi of the effective Hamiltonian. Throws
/// std::invalid_argument when phi is not an eigenstate (relative residual
/// above 1e-8): the cyclic decomposition presumes an eigenstate solution.
PhaseReport cyclic_phase_report(const Scenario& sc, const Vector& phi,
                                std::optional<StateLabel> label = std::nullopt);

/// Reports for every eigenstate: analytic states for A, numeric for B
/// (analytic when l = 0), tilted spin states for C's spin sector.
std::vector<PhaseReport> all_cyclic_phase_reports(const Scenario& sc);

/// Closed-form phase report for a full free-particle Landau state, using the
/// corrected spectrum and the precession-cone expectations m cos theta_b +
/// ms cos theta_s; the orbital part is first-order approximate.
PhaseReport landau_phase_report(const ScenarioC& sc, const LandauState& st);

struct PrecessionSample {
  double t = 0.0;
  Vec3 l_expect = Vec3::Zero();
  Vec3 s_expect = Vec3::Zero();
};

/// <l>(t) and <s>(t) along the evolved solution psi(t) = U(t) phi0, sampled
/// at the given times. phi0 must be an eigenstate of the effective
/// Hamiltonian. For ScenarioC the spin vector comes from the evolved spin
/// state and the orbital vector from the first-order cone formula with the
/// supplied m (the orbital sector has no finite matrix realization).
std::vector<PrecessionSample> angular_momentum_trace(const Scenario& sc, const Vector& phi0,
                                                     std::span<const double> times,
                                                     int orbital_m_for_c = 0);

struct CycleCheck {
  bool is_cyclic = false;
  double fidelity = 0.0;        // |<psi(0)|psi(T)>|
  double phase = 0.0;           // arg <psi(0)|psi(T)>, principal value
  std::optional<double> expected_phase;  // -eps_nl T - (N_S + 1) pi when resonant
  std::optional<std::pair<int, int>> orders;
};

/// Evolve a normalized superposition over the analytic eigenbasis of
/// ScenarioA through one period. At resonance (omega_L = N_L omega,
/// omega_S = N_S omega) every superposition is cyclic with a common phase;
/// off resonance the fidelity shortfall is reported.
CycleCheck superposition_cycle_check(const ScenarioA& sc, const Vector& coefficients,
                                     double tol = 1e-9);

}  // namespace rotomag

#endif

#ifndef ROTOMAG_HEFF_HPP
#define ROTOMAG_HEFF_HPP

#include <optional>
#include <vector>

#include "rotomag/scenario.hpp"

namespace rotomag {

enum class ScenarioTag { A, B, CSpin };

/// Time-independent generator of the rotated-frame evolution, together with
/// the product basis it acts on and the field rotation rate (needed to undo
/// the frame transformation).
struct EffectiveHamiltonian {
  Matrix matrix;
  ProductRep basis;
  ScenarioTag tag = ScenarioTag::A;
  double omega = 0.0;
};

/// (m, ms) quantum numbers of an analytically labelled eigenstate; ms is
/// stored doubled so half-integers stay exact.
struct StateLabel {
  int m = 0;
  int two_ms = 0;
  double ms() const { return 0.5 * two_ms; }
};

struct EigenSystem {
  Eigen::VectorXd energies;  // ascending
  Matrix states;             // orthonormal columns, states.col(k) <-> energies[k]
  std::vector<std::optional<StateLabel>> labels;
};

EffectiveHamiltonian build_heff_a(const ScenarioA& sc);
EffectiveHamiltonian build_heff_b(const ScenarioB& sc);
/// Spin sector of the free-particle effective Hamiltonian,
/// -eps(mu) omega2 s.n0 - omega sz = -eps(mu) omega_S s.n_S.
EffectiveHamiltonian build_heff_c_spin(const ScenarioC& sc);
EffectiveHamiltonian build_heff(const Scenario& sc);

/// Exact eigensystem of the strong-field Hamiltonian: tilted product states
/// with energies epsilon_nl + m omega_L + ms omega_S, sorted ascending and
/// labelled by (m, ms).
EigenSystem analytic_eigensystem_a(const ScenarioA& sc);

/// Exact l = 0 eigensystem of the weak-field Hamiltonian (spin-orbit term
/// vanishes): tilted spin states with energies epsilon_nl + ms omega_S.
/// Throws std::invalid_argument when sc.l != 0.
EigenSystem weakfield_l0_states(const ScenarioB& sc);

/// Exact spin-sector eigensystem for the free particle: energies
/// -eps(mu) ms omega_S, labelled by ms.
EigenSystem spin_eigensystem_c(const ScenarioC& sc);

/// Numerical eigensystem of a Hermitian matrix; throws std::invalid_argument
/// on non-Hermitian input.
EigenSystem eigensolve_hermitian(const Matrix& m);

/// Generalized Laguerre polynomial L_n^a(x) by the three-term recurrence.
double laguerre(int n, double a, double x);

/// Landau-level quantum numbers for the free-particle orbital (x) spin state.
struct LandauState {
  int n_rho = 0;  // radial node count, >= 0
  int n_z = 0;    // z momentum index, any integer
  int m = 0;      // orbital magnetic number, any integer
  int two_ms = 1; // twice the spin projection, |two_ms| <= two_s
};

/// alpha = sqrt(M omega1 / hbar) with M = hbar = 1.
double landau_alpha(const ScenarioC& sc);

/// Radial normalization N_{n_rho m} = alpha sqrt(2 n_rho! / (n_rho+|m|)!).
double landau_normalization(const ScenarioC& sc, const LandauState& st);

/// Unperturbed spectrum (2 n_rho + |m| + 1) omega1 + 2 n_z^2 pi^2 / d^2
/// - eps(q) m omega1 - eps(mu) ms omega_S. Throws on |ms| > s.
double landau_energy(const ScenarioC& sc, const LandauState& st);

/// First-order corrected spectrum: the -eps(q) m omega1 term becomes
/// -m [eps(q) omega1 + omega cos theta_b].
double landau_energy_corrected(const ScenarioC& sc, const LandauState& st);

/// Spatial amplitude of the Landau eigenfunction at cylindrical (rho, phi, z);
/// the spin factor is carried separately as a basis vector.
Complex landau_wavefunction(const LandauState& st, const ScenarioC& sc,
                            double rho, double phi, double z);

}  // namespace rotomag

#endif

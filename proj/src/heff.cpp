#include "rotomag/heff.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rotomag {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

bool approx_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

ProductRep basis_ab(int l) {
  if (l < 0) throw std::invalid_argument("scenario A/B: l must be >= 0");
  return tensor_embed(build_rep(2 * l), build_rep(1));
}

/// Sort energies ascending, permuting states and labels consistently.
EigenSystem sorted(Eigen::VectorXd energies, Matrix states,
                   std::vector<std::optional<StateLabel>> labels) {
  const int n = static_cast<int>(energies.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return energies(a) < energies(b); });

  EigenSystem sys;
  sys.energies.resize(n);
  sys.states.resize(states.rows(), n);
  sys.labels.resize(n);
  for (int k = 0; k < n; ++k) {
    sys.energies(k) = energies(order[k]);
    sys.states.col(k) = states.col(order[k]);
    sys.labels[k] = labels[order[k]];
  }
  return sys;
}

void validate_landau_state(const ScenarioC& sc, const LandauState& st) {
  if (st.n_rho < 0) throw std::invalid_argument("landau state: n_rho must be >= 0");
  if (std::abs(st.two_ms) > sc.two_s)
    throw std::invalid_argument("landau state: |ms| exceeds the spin s");
  if ((sc.two_s - st.two_ms) % 2 != 0)
    throw std::invalid_argument("landau state: ms must differ from s by an integer");
}

}  // namespace

EffectiveHamiltonian build_heff_a(const ScenarioA& sc) {
  const DerivedFrame frame = derive_frame_a(sc);
  EffectiveHamiltonian h;
  h.basis = basis_ab(sc.l);
  h.tag = ScenarioTag::A;
  h.omega = sc.field.omega;
  h.matrix = sc.epsilon_nl * Matrix::Identity(h.basis.dim, h.basis.dim) +
             frame.orbital->omega *
                 component_along(h.basis.lx, h.basis.ly, h.basis.lz, frame.orbital->n) +
             frame.spin.omega * component_along(h.basis.sx, h.basis.sy, h.basis.sz, frame.spin.n);
  return h;
}

EffectiveHamiltonian build_heff_b(const ScenarioB& sc) {
  EffectiveHamiltonian h = build_heff_a(sc);
  h.tag = ScenarioTag::B;
  const ProductRep& b = h.basis;
  h.matrix += sc.xi_nl * (b.lx * b.sx + b.ly * b.sy + b.lz * b.sz);
  return h;
}

EffectiveHamiltonian build_heff_c_spin(const ScenarioC& sc) {
  derive_frame_c(sc);  // validates, rejects the degenerate frame
  EffectiveHamiltonian h;
  h.basis = tensor_embed(build_rep(0), build_rep(sc.two_s));
  h.tag = ScenarioTag::CSpin;
  h.omega = sc.field.omega;
  const Vec3 n0 = field_direction(sc.field, 0.0);
  h.matrix = -static_cast<double>(sc.sign_mu) * sc.omega2 *
                 component_along(h.basis.sx, h.basis.sy, h.basis.sz, n0) -
             sc.field.omega * h.basis.sz;
  return h;
}

EffectiveHamiltonian build_heff(const Scenario& sc) {
  struct Dispatch {
    EffectiveHamiltonian operator()(const ScenarioA& s) const { return build_heff_a(s); }
    EffectiveHamiltonian operator()(const ScenarioB& s) const { return build_heff_b(s); }
    EffectiveHamiltonian operator()(const ScenarioC& s) const { return build_heff_c_spin(s); }
  };
  return std::visit(Dispatch{}, sc);
}

EigenSystem analytic_eigensystem_a(const ScenarioA& sc) {
  const DerivedFrame frame = derive_frame_a(sc);
  const ProductRep basis = basis_ab(sc.l);

  const Matrix rot_l = rotation_about_y(basis.l_rep, frame.orbital->theta);
  const Matrix rot_s = rotation_about_y(basis.s_rep, frame.spin.theta);

  Eigen::VectorXd energies(basis.dim);
  Matrix states(basis.dim, basis.dim);
  std::vector<std::optional<StateLabel>> labels(basis.dim);
  for (int m = sc.l; m >= -sc.l; --m) {
    for (int two_ms : {1, -1}) {
      const int k = basis.index_of(m, two_ms);
      energies(k) = sc.epsilon_nl + m * frame.orbital->omega + 0.5 * two_ms * frame.spin.omega;
      // phi = exp(-i theta_L ly - i theta_S sy) |m, ms>
      const Vector zeta = rot_l.col(basis.l_rep.index_of_two_m(2 * m));
      const Vector chi = rot_s.col(basis.s_rep.index_of_two_m(two_ms));
      for (int il = 0; il < basis.l_rep.dim; ++il)
        for (int is = 0; is < basis.s_rep.dim; ++is)
          states(il * basis.s_rep.dim + is, k) = zeta(il) * chi(is);
      labels[k] = StateLabel{m, two_ms};
    }
  }
  return sorted(std::move(energies), std::move(states), std::move(labels));
}

EigenSystem weakfield_l0_states(const ScenarioB& sc) {
  if (sc.l != 0)
    throw std::invalid_argument("weakfield_l0_states: closed form exists only for l = 0");
  const DerivedFrame frame = derive_frame_a(sc);
  const ProductRep basis = basis_ab(0);
  const Matrix rot_s = rotation_about_y(basis.s_rep, frame.spin.theta);

  Eigen::VectorXd energies(basis.dim);
  Matrix states(basis.dim, basis.dim);
  std::vector<std::optional<StateLabel>> labels(basis.dim);
  for (int two_ms : {1, -1}) {
    const int k = basis.index_of(0, two_ms);
    energies(k) = sc.epsilon_nl + 0.5 * two_ms * frame.spin.omega;
    states.col(k) = rot_s.col(basis.s_rep.index_of_two_m(two_ms));
    labels[k] = StateLabel{0, two_ms};
  }
  return sorted(std::move(energies), std::move(states), std::move(labels));
}

EigenSystem spin_eigensystem_c(const ScenarioC& sc) {
  const DerivedFrame frame = derive_frame_c(sc);
  const AngularMomentumRep s_rep = build_rep(sc.two_s);
  const Matrix rot_s = rotation_about_y(s_rep, frame.spin.theta);

  Eigen::VectorXd energies(s_rep.dim);
  Matrix states(s_rep.dim, s_rep.dim);
  std::vector<std::optional<StateLabel>> labels(s_rep.dim);
  for (int k = 0; k < s_rep.dim; ++k) {
    const int two_ms = sc.two_s - 2 * k;
    energies(k) = -sc.sign_mu * 0.5 * two_ms * frame.spin.omega;
    states.col(k) = rot_s.col(k);
    labels[k] = StateLabel{0, two_ms};
  }
  return sorted(std::move(energies), std::move(states), std::move(labels));
}

EigenSystem eigensolve_hermitian(const Matrix& m) {
  if (!approx_hermitian(m, 1e-10))
    throw std::invalid_argument("eigensolve_hermitian: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (m + m.adjoint()));
  EigenSystem sys;
  sys.energies = es.eigenvalues();
  sys.states = es.eigenvectors();
  sys.labels.assign(m.rows(), std::nullopt);
  return sys;
}

double laguerre(int n, double a, double x) {
  if (n < 0) throw std::invalid_argument("laguerre: n must be >= 0");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + a - x;
  for (int k = 2; k <= n; ++k) {
    const double next = ((2.0 * k - 1.0 + a - x) * cur - (k - 1.0 + a) * prev) / k;
    prev = cur;
    cur = next;
  }
  return cur;
}

double landau_alpha(const ScenarioC& sc) { return std::sqrt(sc.omega1); }

double landau_normalization(const ScenarioC& sc, const LandauState& st) {
  validate_landau_state(sc, st);
  const double log_ratio =
      std::lgamma(st.n_rho + 1.0) - std::lgamma(st.n_rho + std::abs(st.m) + 1.0);
  return landau_alpha(sc) * std::sqrt(2.0) * std::exp(0.5 * log_ratio);
}

double landau_energy(const ScenarioC& sc, const LandauState& st) {
  validate_landau_state(sc, st);
  const DerivedFrame frame = derive_frame_c(sc);
  return (2.0 * st.n_rho + std::abs(st.m) + 1.0) * sc.omega1 +
         2.0 * st.n_z * st.n_z * std::numbers::pi * std::numbers::pi / (sc.box_d * sc.box_d) -
         sc.sign_q * st.m * sc.omega1 - sc.sign_mu * 0.5 * st.two_ms * frame.spin.omega;
}

double landau_energy_corrected(const ScenarioC& sc, const LandauState& st) {
  return landau_energy(sc, st) -
         st.m * sc.field.omega * std::cos(sc.field.theta_b);
}

Complex landau_wavefunction(const LandauState& st, const ScenarioC& sc, double rho, double phi,
                            double z) {
  validate_landau_state(sc, st);
  const double alpha = landau_alpha(sc);
  const double x = alpha * rho;
  const double radial = landau_normalization(sc, st) * std::exp(-0.5 * x * x) *
                        std::pow(x, std::abs(st.m)) * laguerre(st.n_rho, std::abs(st.m), x * x);
  const Complex angular = std::exp(Complex(0, st.m * phi)) / std::sqrt(two_pi);
  const Complex axial =
      std::exp(Complex(0, two_pi * st.n_z * z / sc.box_d)) / std::sqrt(sc.box_d);
  return radial * angular * axial;
}

}  // namespace rotomag

#ifndef ROTOMAG_PROPAGATOR_HPP
#define ROTOMAG_PROPAGATOR_HPP

#include "rotomag/heff.hpp"

namespace rotomag {

/// Frame rotation W(t) = exp(-i omega t jz): diagonal with entries
/// exp(-i omega t (m + ms)).
Matrix w_matrix(const ProductRep& basis, double omega, double t);

/// exp(-i H t) for Hermitian H, via eigendecomposition. Throws
/// std::invalid_argument on non-Hermitian input.
Matrix expm_hermitian(const Matrix& h, double t);

/// Chronological-product-free evolution U(t) = W(t) exp(-i H_eff t).
/// The eigensystem of H_eff is decomposed once and cached; immutable after
/// construction, so concurrent t queries are safe.
class Propagator {
 public:
  explicit Propagator(EffectiveHamiltonian heff);

  Matrix u_eff(double t) const;
  Matrix u_full(double t) const;
  Vector apply(const Vector& psi0, double t) const;

  const EffectiveHamiltonian& heff() const { return heff_; }

 private:
  EffectiveHamiltonian heff_;
  Eigen::VectorXd evals_;
  Matrix evecs_;
};

}  // namespace rotomag

#endif

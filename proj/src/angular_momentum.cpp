#include "rotomag/angular_momentum.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace rotomag {

AngularMomentumRep build_rep(int two_j) {
  if (two_j < 0) throw std::invalid_argument("build_rep: two_j must be >= 0");
  const int dim = two_j + 1;
  const double j = 0.5 * two_j;

  Matrix jplus = Matrix::Zero(dim, dim);
  Matrix jz = Matrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const double m = j - i;
    jz(i, i) = m;
    if (i > 0) {
      // <m+1| j+ |m> = sqrt(j(j+1) - m(m+1)), raising index i -> i-1
      jplus(i - 1, i) = std::sqrt(j * (j + 1) - m * (m + 1));
    }
  }
  const Matrix jminus = jplus.adjoint();

  AngularMomentumRep rep;
  rep.two_j = two_j;
  rep.dim = dim;
  rep.jx = 0.5 * (jplus + jminus);
  rep.jy = Complex(0, -0.5) * (jplus - jminus);
  rep.jz = jz;
  return rep;
}

Matrix rotation_about_y(const AngularMomentumRep& rep, double theta) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rep.jy);
  const Eigen::VectorXd& ev = es.eigenvalues();
  Vector phase(rep.dim);
  for (int k = 0; k < rep.dim; ++k) phase(k) = std::exp(Complex(0, -theta * ev(k)));
  return es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
}

ProductRep tensor_embed(const AngularMomentumRep& l_rep, const AngularMomentumRep& s_rep) {
  ProductRep p;
  p.l_rep = l_rep;
  p.s_rep = s_rep;
  p.dim = l_rep.dim * s_rep.dim;

  const Matrix il = Matrix::Identity(l_rep.dim, l_rep.dim);
  const Matrix is = Matrix::Identity(s_rep.dim, s_rep.dim);
  p.lx = Eigen::kroneckerProduct(l_rep.jx, is);
  p.ly = Eigen::kroneckerProduct(l_rep.jy, is);
  p.lz = Eigen::kroneckerProduct(l_rep.jz, is);
  p.sx = Eigen::kroneckerProduct(il, s_rep.jx);
  p.sy = Eigen::kroneckerProduct(il, s_rep.jy);
  p.sz = Eigen::kroneckerProduct(il, s_rep.jz);
  p.jz = p.lz + p.sz;
  return p;
}

Matrix component_along(const Matrix& jx, const Matrix& jy, const Matrix& jz, const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("component_along: direction is not a unit vector");
  return n.x() * jx + n.y() * jy + n.z() * jz;
}

}  // namespace rotomag

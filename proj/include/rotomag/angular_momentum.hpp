#ifndef ROTOMAG_ANGULAR_MOMENTUM_HPP
#define ROTOMAG_ANGULAR_MOMENTUM_HPP

#include <complex>

#include <Eigen/Dense>

namespace rotomag {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Vec3 = Eigen::Vector3d;

/// Matrix representation of an angular momentum of quantum number j = two_j/2,
/// in units of hbar. Basis states are ordered by descending magnetic quantum
/// number m = j, j-1, ..., -j.
struct AngularMomentumRep {
  int two_j = 0;
  int dim = 1;
  Matrix jx, jy, jz;

  double j() const { return 0.5 * two_j; }
  /// m value of basis index i (i = 0 is m = +j).
  double m_of(int i) const { return 0.5 * two_j - i; }
  /// Basis index of the state with 2m = two_m.
  int index_of_two_m(int two_m) const { return (two_j - two_m) / 2; }
};

/// Ladder-operator construction of jx, jy, jz for arbitrary two_j >= 0.
AngularMomentumRep build_rep(int two_j);

/// exp(-i theta jy). Entries are the Wigner small-d functions d^j_{m'm}(theta);
/// the matrix is real orthogonal up to round-off.
Matrix rotation_about_y(const AngularMomentumRep& rep, double theta);

/// Orbit (x) spin product space with the orbital index major. Operators are
/// embedded as L = l (x) 1 and S = 1 (x) s; jz = Lz + Sz.
struct ProductRep {
  AngularMomentumRep l_rep, s_rep;
  int dim = 1;
  Matrix lx, ly, lz, sx, sy, sz, jz;

  /// Basis index of |l m> (x) |s ms>, ms given as two_ms = 2*ms.
  int index_of(int m, int two_ms) const {
    return (l_rep.two_j / 2 - m) * s_rep.dim + s_rep.index_of_two_m(two_ms);
  }
  int m_of(int i) const { return l_rep.two_j / 2 - i / s_rep.dim; }
  int two_ms_of(int i) const { return s_rep.two_j - 2 * (i % s_rep.dim); }
};

ProductRep tensor_embed(const AngularMomentumRep& l_rep, const AngularMomentumRep& s_rep);

/// n_x Jx + n_y Jy + n_z Jz for a unit vector n. Throws std::invalid_argument
/// if |n| deviates from 1 by more than 1e-12.
Matrix component_along(const Matrix& jx, const Matrix& jy, const Matrix& jz, const Vec3& n);

}  // namespace rotomag

#endif

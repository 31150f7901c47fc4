#ifndef ROTOMAG_QUADRATURE_HPP
#define ROTOMAG_QUADRATURE_HPP

#include <utility>
#include <vector>

#include "rotomag/heff.hpp"

namespace rotomag {

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
/// Legendre recurrence.
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n);

/// Nodes and weights mapped to [a, b].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double a, double b);

/// Radial overlap integral of two Landau states sharing m and n_z,
/// int f1(rho) f2(rho) rho drho on [0, 12/alpha] with >= 400 mapped
/// Gauss-Legendre nodes. The angular and z factors are exact by
/// orthogonality; states differing in m or n_z have overlap 0.
double landau_radial_overlap(const ScenarioC& sc, const LandauState& a, const LandauState& b,
                             int nodes = 400);

}  // namespace rotomag

#endif

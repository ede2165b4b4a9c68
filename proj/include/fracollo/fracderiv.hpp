#pragma once

#include "fracollo/bspline.hpp"
#include "fracollo/specfun.hpp"

namespace fracollo {

// Caputo derivative of the unit-step cardinal B-spline B_n, valid for the
// interior and right-edge translates:
//   D^gamma B_n(x) = Delta^{n+1} x_+^{n-gamma} / Gamma(n+1-gamma),  x >= 0.
// Zero for x <= 0. Requires gamma < n.
double caputo_interior(int n, const FractionalOrder& order, double x);

// Caputo derivative of the left-edge translate B_n(x - ell), ell in [-n, -1],
// with the differentiation terminal at x = 0 (unit knot spacing). The
// shifted interior rule is corrected by a double sum that removes the part
// of the memory integral that lies left of the origin.
double caputo_left_edge(int n, const FractionalOrder& order, int ell, double x);

// Caputo derivative of a refined basis function B_n(x/h - ell) on [0, L]:
// the unit-step kernel at the mapped argument, scaled by h^{-gamma}.
double caputo_basis(const UniformBasis& basis, const FractionalOrder& order, int ell, double x);

// Independent check on the closed-form rules above: evaluates the defining
// memory integral panel by panel with exact antiderivatives (the integrand
// restricted to a knot panel is a polynomial times (x - xi)^{k-gamma-1}, so
// every piece integrates in closed form). No quadrature is involved.
double caputo_oracle(const UniformBasis& basis, const FractionalOrder& order, int ell, double x);

} // namespace fracollo

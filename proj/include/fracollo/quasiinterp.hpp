#pragma once

#include "fracollo/bspline.hpp"
#include "fracollo/fracderiv.hpp"
#include "fracollo/specfun.hpp"

#include <functional>
#include <vector>

namespace fracollo {

// Spline in the refined basis; coefficients are indexed by the basis index
// ell in [-n, N_h]. Immutable after construction.
class SplineFunction {
public:
    SplineFunction(const UniformBasis& basis, std::vector<double> coefficients);

    const UniformBasis& basis() const { return basis_; }
    const std::vector<double>& coefficients() const { return coeffs_; }

    double coefficient(int ell) const { return coeffs_[static_cast<std::size_t>(ell - basis_.index_lo())]; }

private:
    UniformBasis basis_;
    std::vector<double> coeffs_;
};

// Schoenberg nodes h (ell + (n+1)/2) clamped into [0, L], one per basis
// index, nondecreasing. Clamping makes sampling possible for functions that
// are only defined on [0, L].
std::vector<double> schoenberg_nodes(const UniformBasis& basis);

// Unclamped Greville abscissae h (ell + (n+1)/2). Used as coefficients they
// reproduce the identity exactly on all of [0, L].
std::vector<double> greville_nodes(const UniformBasis& basis);

// Schoenberg-Bernstein operator: coefficient[ell] = y(node[ell]).
SplineFunction quasi_interpolate(const UniformBasis& basis, const std::function<double(double)>& y);

// Value of the spline at x in [0, L]; touches at most n+1 coefficients.
double eval_spline(const SplineFunction& s, double x);

// First derivative; right limit at x = 0, left limit at x = L.
double eval_spline_derivative(const SplineFunction& s, double x);

// Caputo derivative of the spline at x in (0, L]. Every index with
// h ell < x contributes: the fractional derivative is nonlocal, so there is
// no support shortcut on the left.
double eval_spline_caputo(const SplineFunction& s, const FractionalOrder& order, double x);

} // namespace fracollo

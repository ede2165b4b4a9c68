#pragma once

namespace fracollo {

// Which one-sided value to take at a breakpoint. The default convention is
// right-continuity (matching the truncated-power convention, B_0(0) = 1 and
// B_0(1) = 0); Side::left gives the limit from below, which the boundary
// rows need at the right endpoint of the interval.
enum class Side { right, left };

// Cardinal B-spline B_n on the integer knots, support [0, n+1].
// Evaluated by the Cox-de Boor recurrence.
double eval_cardinal(int n, double x, Side side = Side::right);

// m-th ordinary derivative of B_n for 0 <= m <= n-1 (m = 0 is the value).
// Computed as the m-th backward difference of B_{n-m}.
double eval_cardinal_derivative(int n, int m, double x, Side side = Side::right);

namespace detail {

// Same backward-difference evaluation but admitting m == n, where the
// result is the piecewise-constant a.e. derivative; used by the boundary
// rows and the Caputo oracle, which tolerate the one-sided convention.
double cardinal_derivative(int n, int m, double x, Side side);

} // namespace detail

enum class IndexClass { left_edge, interior, right_edge };

// Uniform degree-n B-spline basis on [0, L] with knot spacing h:
//   B_{h,l,n}(x) = B_n(x/h - l),  l = -n, ..., h^{-1}L - 1.
// h^{-1}L must be an exact integer >= n+1.
class UniformBasis {
public:
    int degree() const { return degree_; }
    double step() const { return step_; }
    int length() const { return length_; }

    int knot_count() const { return knots_; }     // h^{-1} L
    int index_lo() const { return -degree_; }
    int index_hi() const { return knots_ - 1; }   // N_h
    int size() const { return knots_ + degree_; } // number of basis functions

    bool contains_index(int ell) const { return ell >= index_lo() && ell <= index_hi(); }
    IndexClass classify(int ell) const;

private:
    UniformBasis(int degree, double step, int length, int knots)
        : degree_(degree), step_(step), length_(length), knots_(knots) {}
    friend UniformBasis make_basis(int degree, double step, int length);

    int degree_;
    double step_;
    int length_;
    int knots_;
};

UniformBasis make_basis(int degree, double step, int length);

// B_n(x/h - ell); zero outside [0, L]. Throws std::out_of_range for an
// index outside [-n, N_h].
double eval_basis(const UniformBasis& basis, int ell, double x);

} // namespace fracollo

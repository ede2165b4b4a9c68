#include "fracollo/quasiinterp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracollo {

SplineFunction::SplineFunction(const UniformBasis& basis, std::vector<double> coefficients)
    : basis_(basis), coeffs_(std::move(coefficients))
{
    if (static_cast<int>(coeffs_.size()) != basis_.size())
        throw std::invalid_argument("SplineFunction: expected " + std::to_string(basis_.size()) +
                                    " coefficients, got " + std::to_string(coeffs_.size()));
}

std::vector<double> greville_nodes(const UniformBasis& basis)
{
    std::vector<double> nodes;
    nodes.reserve(static_cast<std::size_t>(basis.size()));
    const double half_width = (basis.degree() + 1) / 2.0;
    for (int ell = basis.index_lo(); ell <= basis.index_hi(); ++ell)
        nodes.push_back(basis.step() * (ell + half_width));
    return nodes;
}

std::vector<double> schoenberg_nodes(const UniformBasis& basis)
{
    std::vector<double> nodes = greville_nodes(basis);
    const double length = static_cast<double>(basis.length());
    for (double& node : nodes)
        node = std::clamp(node, 0.0, length);
    return nodes;
}

SplineFunction quasi_interpolate(const UniformBasis& basis, const std::function<double(double)>& y)
{
    std::vector<double> coeffs = schoenberg_nodes(basis);
    for (double& c : coeffs)
        c = y(c);
    return SplineFunction(basis, std::move(coeffs));
}

namespace {

// Knot panel containing x, clamped so that the endpoints use the panels
// just inside [0, L].
int panel_index(const UniformBasis& basis, double t, Side side)
{
    int m = (side == Side::right) ? static_cast<int>(std::floor(t))
                                  : static_cast<int>(std::ceil(t)) - 1;
    return std::clamp(m, 0, basis.index_hi());
}

void check_domain(const char* who, const UniformBasis& basis, double x)
{
    if (x < 0.0 || x > static_cast<double>(basis.length()))
        throw std::domain_error(std::string(who) + ": x = " + std::to_string(x) +
                                " outside [0, " + std::to_string(basis.length()) + "]");
}

} // namespace

double eval_spline(const SplineFunction& s, double x)
{
    const UniformBasis& basis = s.basis();
    check_domain("eval_spline", basis, x);
    const int n = basis.degree();
    const double t = x / basis.step();
    const int m = panel_index(basis, t, Side::right);
    double sum = 0.0;
    for (int ell = m - n; ell <= m; ++ell)
        sum += s.coefficient(ell) * eval_cardinal(n, t - ell);
    return sum;
}

double eval_spline_derivative(const SplineFunction& s, double x)
{
    const UniformBasis& basis = s.basis();
    const int n = basis.degree();
    if (n == 0)
        throw std::invalid_argument("eval_spline_derivative: degree-0 splines have no derivative");
    check_domain("eval_spline_derivative", basis, x);
    const Side side = (x == static_cast<double>(basis.length())) ? Side::left : Side::right;
    const double t = x / basis.step();
    const int m = panel_index(basis, t, side);
    double sum = 0.0;
    for (int ell = m - n; ell <= m; ++ell)
        sum += s.coefficient(ell) * detail::cardinal_derivative(n, 1, t - ell, side);
    return sum / basis.step();
}

double eval_spline_caputo(const SplineFunction& s, const FractionalOrder& order, double x)
{
    const UniformBasis& basis = s.basis();
    check_domain("eval_spline_caputo", basis, x);
    const double t = x / basis.step();
    double sum = 0.0;
    for (int ell = basis.index_lo(); ell <= basis.index_hi() && ell < t; ++ell)
        sum += s.coefficient(ell) * caputo_basis(basis, order, ell, x);
    return sum;
}

} // namespace fracollo

#include "fracollo/bspline.hpp"

#include "fracollo/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracollo {

namespace {

constexpr int kMaxDegree = 60;

void check_degree(int n)
{
    if (n < 0 || n > kMaxDegree)
        throw std::invalid_argument("B-spline degree must be in [0, " +
                                    std::to_string(kMaxDegree) + "]");
}

} // namespace

double eval_cardinal(int n, double x, Side side)
{
    check_degree(n);

    // Panel of the base indicator: B_0 is 1 on [0,1) for the right-continuous
    // convention and on (0,1] for left limits.
    int j;
    if (side == Side::right) {
        if (x < 0.0 || x >= n + 1.0)
            return 0.0;
        j = static_cast<int>(std::floor(x));
    } else {
        if (x <= 0.0 || x > n + 1.0)
            return 0.0;
        j = static_cast<int>(std::ceil(x)) - 1;
    }
    if (j < 0 || j > n)
        return 0.0;

    // de Boor triangle: after pass d, v[m] = B_d((x - j) + m).
    std::array<double, kMaxDegree + 1> v{};
    v[0] = 1.0;
    for (int d = 1; d <= n; ++d) {
        for (int m = d; m >= 0; --m) {
            const double w = (x - j) + m;
            const double lower = (m <= d - 1) ? v[m] : 0.0;  // B_{d-1}(w)
            const double upper = (m >= 1) ? v[m - 1] : 0.0;  // B_{d-1}(w - 1)
            v[m] = (w * lower + (d + 1 - w) * upper) / d;
        }
    }
    return v[j];
}

namespace detail {

double cardinal_derivative(int n, int m, double x, Side side)
{
    check_degree(n);
    if (m < 0 || m > n)
        throw std::invalid_argument("cardinal_derivative: order must be in [0, n]");
    if (m == 0)
        return eval_cardinal(n, x, side);

    // B_n^{(m)}(x) = sum_{i=0}^{m} (-1)^i C(m,i) B_{n-m}(x - i)
    double sum = 0.0;
    for (int i = 0; i <= m; ++i) {
        const double term =
            static_cast<double>(binomial(m, i)) * eval_cardinal(n - m, x - i, side);
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

} // namespace detail

double eval_cardinal_derivative(int n, int m, double x, Side side)
{
    if (m >= n && m != 0)
        throw std::invalid_argument(
            "eval_cardinal_derivative: order " + std::to_string(m) +
            " too high for degree " + std::to_string(n));
    return detail::cardinal_derivative(n, m, x, side);
}

IndexClass UniformBasis::classify(int ell) const
{
    if (!contains_index(ell))
        throw std::out_of_range("UniformBasis::classify: index " + std::to_string(ell) +
                                " outside [" + std::to_string(index_lo()) + ", " +
                                std::to_string(index_hi()) + "]");
    if (ell < 0)
        return IndexClass::left_edge;
    if (ell <= knots_ - degree_ - 1)
        return IndexClass::interior;
    return IndexClass::right_edge;
}

UniformBasis make_basis(int degree, double step, int length)
{
    check_degree(degree);
    if (!(step > 0.0) || !std::isfinite(step))
        throw std::invalid_argument("make_basis: step must be positive");
    if (length < 1)
        throw std::invalid_argument("make_basis: length must be a positive integer");

    const double ratio = static_cast<double>(length) / step;
    const auto knots = static_cast<long long>(std::llround(ratio));
    if (std::fabs(ratio - static_cast<double>(knots)) > 1e-9 * std::max(1.0, ratio))
        throw std::invalid_argument("make_basis: h^{-1} L = " + std::to_string(ratio) +
                                    " is not an integer");
    if (knots < degree + 1)
        throw std::invalid_argument("make_basis: h^{-1} L = " + std::to_string(knots) +
                                    " < n + 1 = " + std::to_string(degree + 1) +
                                    "; no interior functions would exist");
    return UniformBasis(degree, step, length, static_cast<int>(knots));
}

double eval_basis(const UniformBasis& basis, int ell, double x)
{
    if (!basis.contains_index(ell))
        throw std::out_of_range("eval_basis: index " + std::to_string(ell) + " outside [" +
                                std::to_string(basis.index_lo()) + ", " +
                                std::to_string(basis.index_hi()) + "]");
    if (x < 0.0 || x > static_cast<double>(basis.length()))
        return 0.0;
    return eval_cardinal(basis.degree(), x / basis.step() - ell);
}

} // namespace fracollo

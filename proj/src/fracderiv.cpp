#include "fracollo/fracderiv.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracollo {

namespace {

// The backward-difference sums below cancel heavily when the argument is
// far to the right of the support (the memory tail of the operator), so all
// internal arithmetic runs in extended precision. On x86-64 this keeps the
// collocation entries accurate to ~1e-12 even at x/h ~ 100.

long double truncated_power_l(long double x, long double mu)
{
    if (x > 0.0L)
        return std::pow(x, mu);
    return (x == 0.0L && mu == 0.0L) ? 1.0L : 0.0L;
}

long double binomial_l(int n, int k)
{
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    return r;
}

long double factorial_l(int n)
{
    long double r = 1.0L;
    for (int i = 2; i <= n; ++i)
        r *= static_cast<long double>(i);
    return r;
}

long double int_pow_l(long double base, int e)
{
    long double r = 1.0L;
    for (int i = 0; i < e; ++i)
        r *= base;
    return r;
}

void check_order(const char* who, int n, const FractionalOrder& order)
{
    if (order.value() >= static_cast<double>(n))
        throw std::invalid_argument(std::string(who) + ": requires gamma < n, got gamma = " +
                                    std::to_string(order.value()) + ", n = " + std::to_string(n));
}

long double interior_kernel(int n, long double gamma, long double x)
{
    if (x <= 0.0L)
        return 0.0L;
    const long double mu = static_cast<long double>(n) - gamma;
    long double sum = 0.0L;
    for (int i = 0; i <= n + 1; ++i) {
        const long double term = binomial_l(n + 1, i) * truncated_power_l(x - i, mu);
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum / std::tgamma(static_cast<long double>(n + 1) - gamma);
}

} // namespace

double caputo_interior(int n, const FractionalOrder& order, double x)
{
    check_order("caputo_interior", n, order);
    return static_cast<double>(
        interior_kernel(n, static_cast<long double>(order.value()), static_cast<long double>(x)));
}

double caputo_left_edge(int n, const FractionalOrder& order, int ell, double x)
{
    if (ell < -n || ell > -1)
        throw std::invalid_argument("caputo_left_edge: index " + std::to_string(ell) +
                                    " outside [-n, -1]");
    check_order("caputo_left_edge", n, order);
    // at the lower terminal every term carries a positive power of x
    if (x <= 0.0)
        return 0.0;

    const int k = order.ceil_order();
    const long double g = static_cast<long double>(order.value());
    const long double t = static_cast<long double>(x);
    const long double gamma_top = std::tgamma(static_cast<long double>(n + 1) - g);

    // shifted interior rule; the correction below removes the contribution
    // of the memory integral over [ell, 0)
    long double value = interior_kernel(n, g, t - ell);
    for (int r = 0; r <= -ell - 1; ++r) {
        long double inner = 0.0L;
        for (int p = 0; p <= n - k; ++p) {
            inner += int_pow_l(static_cast<long double>(-ell - r), n - k - p) *
                     truncated_power_l(t, static_cast<long double>(k) - g + p) /
                     (factorial_l(n - k - p) *
                      std::tgamma(static_cast<long double>(k) - g + p + 1.0L));
        }
        const long double bracket =
            truncated_power_l(t - ell - r, static_cast<long double>(n) - g) / gamma_top - inner;
        const long double term = binomial_l(n + 1, r) * bracket;
        value -= (r % 2 == 0) ? term : -term;
    }
    return static_cast<double>(value);
}

double caputo_basis(const UniformBasis& basis, const FractionalOrder& order, int ell, double x)
{
    if (!basis.contains_index(ell))
        throw std::out_of_range("caputo_basis: index " + std::to_string(ell) + " outside [" +
                                std::to_string(basis.index_lo()) + ", " +
                                std::to_string(basis.index_hi()) + "]");
    const double h = basis.step();
    const double scale = std::pow(h, -order.value());
    if (ell < 0)
        return scale * caputo_left_edge(basis.degree(), order, ell, x / h);
    return scale * caputo_interior(basis.degree(), order, x / h - ell);
}

namespace {

constexpr int kOracleMaxPieceDegree = 60;

// M_j(b) = int_{s_lo}^{s_hi} (s - s_c)^j s^{b-1} ds, by parts:
//   M_j(b) = [(s - s_c)^j s^b / b]_{s_lo}^{s_hi} - (j/b) M_{j-1}(b+1).
// s_c is the image of the panel midpoint, so |s - s_c| <= 1/2 and the
// boundary terms stay O(s^b); no large-power cancellation builds up.
long double panel_moment(int j, long double b, long double s_lo, long double s_hi,
                         long double s_c)
{
    if (j == 0)
        return (std::pow(s_hi, b) - std::pow(s_lo, b)) / b;
    const long double boundary =
        (int_pow_l(s_hi - s_c, j) * std::pow(s_hi, b) -
         int_pow_l(s_lo - s_c, j) * std::pow(s_lo, b)) / b;
    return boundary - static_cast<long double>(j) / b * panel_moment(j - 1, b + 1.0L, s_lo, s_hi, s_c);
}

} // namespace

double caputo_oracle(const UniformBasis& basis, const FractionalOrder& order, int ell, double x)
{
    const int n = basis.degree();
    check_order("caputo_oracle", n, order);
    if (!basis.contains_index(ell))
        throw std::out_of_range("caputo_oracle: index " + std::to_string(ell) + " outside [" +
                                std::to_string(basis.index_lo()) + ", " +
                                std::to_string(basis.index_hi()) + "]");

    const int k = order.ceil_order();
    const long double g = static_cast<long double>(order.value());
    const long double beta = static_cast<long double>(k) - g; // in (0, 1)
    const long double h = static_cast<long double>(basis.step());

    // Work in the unit-knot variable tau = xi/h - ell. The integral over
    // xi in [0, x] becomes the integral over tau in [-ell, t_x] of
    // B_n^{(k)}(tau) (t_x - tau)^{beta-1}, up to the h^{-gamma} scaling.
    const long double t_x = static_cast<long double>(x) / h - ell;
    if (t_x <= 0.0L)
        return 0.0;
    const long double t_lo = std::max<long double>(0.0L, static_cast<long double>(-ell));
    const long double t_hi = std::min<long double>(t_x, static_cast<long double>(n + 1));
    if (!(t_hi > t_lo))
        return 0.0;

    const int d = n - k; // degree of the pieces of B_n^{(k)}
    long double total = 0.0L;
    const int m_first = static_cast<int>(std::floor(static_cast<double>(t_lo)));
    const int m_last = static_cast<int>(std::ceil(static_cast<double>(t_hi))) - 1;
    for (int m = m_first; m <= m_last; ++m) {
        const long double u = std::max<long double>(m, t_lo);
        const long double v = std::min<long double>(m + 1, t_hi);
        if (!(v > u))
            continue;

        // Taylor coefficients of the panel piece about the panel midpoint
        const long double t_c = 0.5L * (u + v);
        long double coeff[kOracleMaxPieceDegree + 1];
        long double fact = 1.0L;
        for (int j = 0; j <= d; ++j) {
            coeff[j] = static_cast<long double>(
                           detail::cardinal_derivative(n, k + j, static_cast<double>(t_c), Side::right)) /
                       fact;
            fact *= static_cast<long double>(j + 1);
        }

        const long double s_lo = t_x - v;
        const long double s_hi = t_x - u;
        const long double s_c = t_x - t_c;
        for (int j = 0; j <= d; ++j) {
            if (coeff[j] == 0.0L)
                continue;
            const long double moment = panel_moment(j, beta, s_lo, s_hi, s_c);
            total += (j % 2 == 0) ? coeff[j] * moment : -coeff[j] * moment;
        }
    }
    return static_cast<double>(std::pow(h, -g) * total / std::tgamma(beta));
}

} // namespace fracollo

#pragma once

#include <cstdint>

namespace fracollo {

// Fractional differentiation order together with its integer neighbours.
// The order must lie strictly between floor(gamma) and ceil(gamma);
// integer orders are rejected (classical solvers handle those).
class FractionalOrder {
public:
    explicit FractionalOrder(double gamma);

    double value() const { return gamma_; }
    int ceil_order() const { return ceil_; }
    int floor_order() const { return ceil_ - 1; }

private:
    double gamma_;
    int ceil_;
};

// Euler gamma function for z > 0 (Lanczos approximation, g = 7, 9 terms).
double gamma_fn(double z);

// One-parameter Mittag-Leffler function E_gamma(x), summed term by term
// with Kahan compensation. Requires gamma > 0 and |x| <= 10; throws if the
// series does not meet the stopping tolerance within 500 terms.
double mittag_leffler(double gamma, double x);

// x^mu for x > 0, 0 for x < 0. At x = 0 the value is 0 for mu > 0 and 1
// for mu = 0, so every power is right-continuous at the origin.
double truncated_power(double x, double mu);

// Exact binomial coefficient; 0 outside 0 <= k <= n. Throws std::overflow_error
// when the value (or an intermediate product) exceeds the 64-bit range.
std::uint64_t binomial(int n, int k);

// n-th backward finite difference with unit step:
//   sum_{l=0}^{n} (-1)^l C(n,l) f(x - l).
// f is evaluated at the exact lattice offsets x - l.
template <typename F>
double backward_diff(F&& f, int n, double x)
{
    double sum = 0.0;
    for (int l = 0; l <= n; ++l) {
        const double term = static_cast<double>(binomial(n, l)) * f(x - static_cast<double>(l));
        sum += (l % 2 == 0) ? term : -term;
    }
    return sum;
}

} // namespace fracollo

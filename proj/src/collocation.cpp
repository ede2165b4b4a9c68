#include "fracollo/collocation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fracollo {

namespace {

long long exact_divisions(const char* who, double spacing, int length)
{
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw std::invalid_argument(std::string(who) + ": spacing must be positive");
    const double ratio = static_cast<double>(length) / spacing;
    const long long count = std::llround(ratio);
    if (std::fabs(ratio - static_cast<double>(count)) > 1e-9 * std::max(1.0, ratio))
        throw std::invalid_argument(std::string(who) + ": spacing^{-1} L = " +
                                    std::to_string(ratio) + " is not an integer");
    return count;
}

// First derivative of B_ell at x, with the one-sided convention chosen by
// the caller (left limits at x = L).
double basis_derivative(const UniformBasis& basis, int ell, double x, Side side)
{
    return detail::cardinal_derivative(basis.degree(), 1, x / basis.step() - ell, side) /
           basis.step();
}

} // namespace

void validate_problem(const BvpProblem& problem)
{
    if (problem.length < 1)
        throw std::invalid_argument("problem: L must be a positive integer");
    if (!problem.f || !problem.g)
        throw std::invalid_argument("problem: f and g must both be set");
    const int k = problem.order.ceil_order();
    if (static_cast<int>(problem.boundary.size()) != k)
        throw std::invalid_argument("problem: expected ceil(gamma) = " + std::to_string(k) +
                                    " boundary rows, got " +
                                    std::to_string(problem.boundary.size()));
    // Row independence: the k x 4 coefficient block must have full row rank.
    DenseMatrix coeffs(4, k);
    for (int r = 0; r < k; ++r) {
        coeffs(0, r) = problem.boundary[static_cast<std::size_t>(r)].rho0;
        coeffs(1, r) = problem.boundary[static_cast<std::size_t>(r)].rho1;
        coeffs(2, r) = problem.boundary[static_cast<std::size_t>(r)].zeta0;
        coeffs(3, r) = problem.boundary[static_cast<std::size_t>(r)].zeta1;
    }
    try {
        condition_number(coeffs);
    } catch (const std::exception&) {
        throw std::invalid_argument("problem: boundary rows are not linearly independent");
    }
}

std::vector<double> collocation_points(int length, int s)
{
    if (length < 1)
        throw std::invalid_argument("collocation_points: length must be positive");
    if (s < 0)
        throw std::invalid_argument("collocation_points: s must be nonnegative");
    const double delta = std::ldexp(1.0, -s); // 2^{-s}
    const long long count = static_cast<long long>(length) << s;
    std::vector<double> points(static_cast<std::size_t>(count) + 1);
    for (long long r = 0; r <= count; ++r)
        points[static_cast<std::size_t>(r)] = delta * static_cast<double>(r);
    return points;
}

SolvabilityReport check_solvability(const UniformBasis& basis, const FractionalOrder& order,
                                    double delta)
{
    const long long n_delta = exact_divisions("check_solvability", delta, basis.length());
    SolvabilityReport report;
    report.equations = n_delta - 1 + order.ceil_order();
    report.unknowns = basis.size(); // N_h + n + 1
    report.satisfied = report.equations >= report.unknowns;
    report.strict = report.equations > report.unknowns;
    return report;
}

CollocationSystem assemble(const BvpProblem& problem, const UniformBasis& basis, double delta,
                           ExecPolicy policy, double boundary_weight)
{
    validate_problem(problem);
    if (!(boundary_weight > 0.0))
        throw std::invalid_argument("assemble: boundary weight must be positive");
    if (basis.length() != problem.length)
        throw std::invalid_argument("assemble: basis interval does not match the problem");
    if (problem.order.value() >= static_cast<double>(basis.degree()))
        throw std::invalid_argument("assemble: requires gamma < n, got gamma = " +
                                    std::to_string(problem.order.value()) + ", n = " +
                                    std::to_string(basis.degree()));
    const SolvabilityReport report = check_solvability(basis, problem.order, delta);
    if (!report)
        throw std::invalid_argument(
            "assemble: solvability violated: N_delta - 1 + ceil(gamma) = " +
            std::to_string(report.equations) + " < " + std::to_string(report.unknowns) +
            " = N_h + n + 1");

    const int n_delta = static_cast<int>(exact_divisions("assemble", delta, basis.length()));
    const int interior = n_delta - 1;
    const int nb = problem.order.ceil_order();
    const int cols = basis.size();
    const int lo = basis.index_lo();

    CollocationSystem sys{DenseMatrix(interior + nb, cols),
                          std::vector<double>(static_cast<std::size_t>(interior + nb)),
                          delta,
                          std::vector<double>(static_cast<std::size_t>(n_delta) + 1),
                          interior,
                          nb};
    for (int r = 0; r <= n_delta; ++r)
        sys.collocation_points[static_cast<std::size_t>(r)] = delta * r;

    const auto fill_row = [&](int r) { // r = 1..N_delta-1
        const double xr = delta * r;
        const double fx = problem.f(xr);
        double* row = sys.matrix.row(r - 1);
        for (int ell = lo; ell <= basis.index_hi(); ++ell)
            row[ell - lo] = caputo_basis(basis, problem.order, ell, xr) +
                            fx * eval_basis(basis, ell, xr);
        sys.rhs[static_cast<std::size_t>(r - 1)] = problem.g(xr);
    };

    if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(static)
        for (int r = 1; r <= interior; ++r)
            fill_row(r);
    } else {
        for (int r = 1; r <= interior; ++r)
            fill_row(r);
    }

    const double length = static_cast<double>(basis.length());
    for (int b = 0; b < nb; ++b) {
        const BoundaryRow& bc = problem.boundary[static_cast<std::size_t>(b)];
        double* row = sys.matrix.row(interior + b);
        for (int ell = lo; ell <= basis.index_hi(); ++ell) {
            double entry = 0.0;
            if (bc.rho0 != 0.0)
                entry += bc.rho0 * eval_basis(basis, ell, 0.0);
            if (bc.rho1 != 0.0)
                entry += bc.rho1 * basis_derivative(basis, ell, 0.0, Side::right);
            if (bc.zeta0 != 0.0)
                entry += bc.zeta0 * eval_basis(basis, ell, length);
            if (bc.zeta1 != 0.0)
                entry += bc.zeta1 * basis_derivative(basis, ell, length, Side::left);
            row[ell - lo] = boundary_weight * entry;
        }
        sys.rhs[static_cast<std::size_t>(interior + b)] = boundary_weight * bc.c;
    }
    return sys;
}

SplineFunction solve(const BvpProblem& problem, const UniformBasis& basis, double delta,
                     ExecPolicy policy, double boundary_weight)
{
    const CollocationSystem sys = assemble(problem, basis, delta, policy, boundary_weight);
    return SplineFunction(basis, least_squares(sys.matrix, sys.rhs));
}

double error_inf_norm(const SplineFunction& s, const std::function<double(double)>& exact,
                      double delta, int eta, ExecPolicy policy)
{
    if (eta < 1)
        throw std::invalid_argument("error_inf_norm: eta must be >= 1");
    const UniformBasis& basis = s.basis();
    const long long n_delta = exact_divisions("error_inf_norm", delta, basis.length());
    const long long count = eta * n_delta;
    const double length = static_cast<double>(basis.length());

    double worst = 0.0;
    if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(static) reduction(max : worst)
        for (long long r = 0; r <= count; ++r) {
            const double x = std::min(delta * static_cast<double>(r) / eta, length);
            worst = std::max(worst, std::fabs(exact(x) - eval_spline(s, x)));
        }
    } else {
        for (long long r = 0; r <= count; ++r) {
            const double x = std::min(delta * static_cast<double>(r) / eta, length);
            worst = std::max(worst, std::fabs(exact(x) - eval_spline(s, x)));
        }
    }
    return worst;
}

std::vector<ConvergenceRow> convergence_study(const BvpProblem& problem, int degree,
                                              const std::vector<double>& h_list,
                                              double delta_ratio, int eta)
{
    if (!problem.exact_solution)
        throw std::invalid_argument("convergence_study: the problem has no exact solution");
    if (!(delta_ratio > 0.0))
        throw std::invalid_argument("convergence_study: delta ratio must be positive");

    std::vector<ConvergenceRow> rows;
    rows.reserve(h_list.size());
    for (double h : h_list) {
        const UniformBasis basis = make_basis(degree, h, problem.length);
        const double delta = delta_ratio * h;
        const CollocationSystem sys = assemble(problem, basis, delta);
        const SplineFunction spline(basis, least_squares(sys.matrix, sys.rhs));

        ConvergenceRow row;
        row.h = h;
        row.error = error_inf_norm(spline, *problem.exact_solution, delta, eta);
        row.kappa = condition_number(sys.matrix);
        if (!rows.empty() && rows.back().error > 0.0 && row.error > 0.0 && rows.back().h != h)
            row.order = std::log(rows.back().error / row.error) / std::log(rows.back().h / h);
        rows.push_back(row);
    }
    return rows;
}

} // namespace fracollo

#pragma once

#include "fracollo/linalg.hpp"
#include "fracollo/quasiinterp.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace fracollo {

// One boundary condition of the problem:
//   rho0 y(0) + rho1 y'(0) + zeta0 y(L) + zeta1 y'(L) = c.
struct BoundaryRow {
    double rho0 = 0.0;
    double rho1 = 0.0;
    double zeta0 = 0.0;
    double zeta1 = 0.0;
    double c = 0.0;
};

// Linear boundary value problem D^gamma y + f y = g on (0, L) with
// ceil(gamma) boundary rows. exact_solution, when present, enables error
// measurements and convergence studies.
struct BvpProblem {
    FractionalOrder order;
    int length = 1;
    std::function<double(double)> f;
    std::function<double(double)> g;
    std::vector<BoundaryRow> boundary;
    std::optional<std::function<double(double)>> exact_solution;
};

// Throws std::invalid_argument when the boundary block is malformed:
// wrong row count or linearly dependent rows.
void validate_problem(const BvpProblem& problem);

// Equidistant collocation nodes {delta r, 0 <= r <= N_delta} with
// delta = 2^{-s}.
std::vector<double> collocation_points(int length, int s);

struct SolvabilityReport {
    bool satisfied = false;
    bool strict = false; // the preferable strictly-overdetermined regime
    long equations = 0;  // N_delta - 1 + ceil(gamma)
    long unknowns = 0;   // N_h + n + 1
    explicit operator bool() const { return satisfied; }
};

// Checks N_delta - 1 + ceil(gamma) >= N_h + n + 1. delta^{-1} L must be an
// integer.
SolvabilityReport check_solvability(const UniformBasis& basis, const FractionalOrder& order,
                                    double delta);

// Row assembly is embarrassingly parallel; the serial path is the reference
// the parallel one is tested against (results are bit-identical).
enum class ExecPolicy { serial, parallel };

struct CollocationSystem {
    DenseMatrix matrix;
    std::vector<double> rhs;
    double delta = 0.0;
    std::vector<double> collocation_points;
    int interior_rows = 0; // N_delta - 1
    int boundary_rows = 0; // ceil(gamma)
};

// Stacks the interior rows
//   entry(r, ell) = D^gamma B_ell(x_r) + f(x_r) B_ell(x_r),  rhs = g(x_r)
// for r = 1..N_delta-1, followed by the ceil(gamma) boundary rows. The
// boundary rows enter the least-squares stack scaled by boundary_weight
// (1.0 reproduces the plain stacking).
CollocationSystem assemble(const BvpProblem& problem, const UniformBasis& basis, double delta,
                           ExecPolicy policy = ExecPolicy::parallel,
                           double boundary_weight = 1.0);

// Least-squares solution of the assembled system.
SplineFunction solve(const BvpProblem& problem, const UniformBasis& basis, double delta,
                     ExecPolicy policy = ExecPolicy::parallel, double boundary_weight = 1.0);

// max_{0 <= r <= eta N_delta} |exact(x_r) - s(x_r)| on the refined grid
// x_r = delta r / eta.
double error_inf_norm(const SplineFunction& s, const std::function<double(double)>& exact,
                      double delta, int eta, ExecPolicy policy = ExecPolicy::parallel);

struct ConvergenceRow {
    double h = 0.0;
    double error = 0.0;
    double kappa = 0.0;
    std::optional<double> order; // empirical order from the previous row
};

// One solve per h with delta = delta_ratio * h; reports the error norm, the
// condition number of the stacked matrix and the empirical order
// log(e_prev/e) / log(h_prev/h).
std::vector<ConvergenceRow> convergence_study(const BvpProblem& problem, int degree,
                                              const std::vector<double>& h_list,
                                              double delta_ratio, int eta);

} // namespace fracollo

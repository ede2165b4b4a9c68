#pragma once

#include "fracollo/collocation.hpp"

#include <string>

namespace fracollo {

// Built-in benchmark problems with known exact solutions, emitted in the
// same JSON schema as user problem files and loaded through the same code
// path. The text is deterministic for a given (which, gamma) pair.
//
//   1: D^g y + sqrt(x) y = g(x) on (0,1), y(0)+y(1) = 2, exact y = 2x;
//      g in (0, 1).
//   2: D^g y + y = g(x) on (0,1), y(0) = 0, y(1) = 1, exact y = x^2.5;
//      g in (1, 2).
//   3: D^g y + y = 0 on (0,1), y(0) = 1, y(1) = E_g(-1),
//      exact y = E_g(-x^g); g in (1, 2).
std::string example_problem_json(int which, double gamma);

BvpProblem load_example_problem(int which, double gamma);

// The gamma each example uses when none is given: 0.5 for example 1,
// 1.5 for examples 2 and 3.
double example_default_gamma(int which);

} // namespace fracollo

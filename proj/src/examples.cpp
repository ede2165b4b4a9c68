#include "fracollo/examples.hpp"

#include "fracollo/problemio.hpp"
#include "fracollo/specfun.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace fracollo {

namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void require_open_interval(int which, double gamma, double lo, double hi)
{
    if (!(gamma > lo) || !(gamma < hi) || gamma == std::floor(gamma))
        throw std::invalid_argument("example " + std::to_string(which) +
                                    ": gamma must lie strictly in (" + num(lo) + ", " + num(hi) +
                                    "), got " + num(gamma));
}

} // namespace

double example_default_gamma(int which)
{
    switch (which) {
    case 1: return 0.5;
    case 2:
    case 3: return 1.5;
    default: throw std::invalid_argument("example number must be 1, 2 or 3");
    }
}

std::string example_problem_json(int which, double gamma)
{
    const std::string g = num(gamma);
    switch (which) {
    case 1:
        require_open_interval(which, gamma, 0.0, 1.0);
        return "{\n"
               "  \"gamma\": " + g + ",\n"
               "  \"L\": 1,\n"
               "  \"f\": \"x^0.5\",\n"
               "  \"g\": \"2/gamma(2-" + g + ")*x^(1-" + g + ") + 2*x^1.5\",\n"
               "  \"boundary\": [{\"rho0\": 1, \"rho1\": 0, \"zeta0\": 1, \"zeta1\": 0, \"c\": 2}],\n"
               "  \"exact\": \"2*x\"\n"
               "}\n";
    case 2:
        require_open_interval(which, gamma, 1.0, 2.0);
        return "{\n"
               "  \"gamma\": " + g + ",\n"
               "  \"L\": 1,\n"
               "  \"f\": \"1\",\n"
               "  \"g\": \"gamma(3.5)/gamma(3.5-" + g + ")*x^(2.5-" + g + ") + x^2.5\",\n"
               "  \"boundary\": [{\"rho0\": 1, \"rho1\": 0, \"zeta0\": 0, \"zeta1\": 0, \"c\": 0},\n"
               "                 {\"rho0\": 0, \"rho1\": 0, \"zeta0\": 1, \"zeta1\": 0, \"c\": 1}],\n"
               "  \"exact\": \"x^2.5\"\n"
               "}\n";
    case 3: {
        require_open_interval(which, gamma, 1.0, 2.0);
        const std::string y1 = num(mittag_leffler(gamma, -1.0));
        return "{\n"
               "  \"gamma\": " + g + ",\n"
               "  \"L\": 1,\n"
               "  \"f\": \"1\",\n"
               "  \"g\": \"0\",\n"
               "  \"boundary\": [{\"rho0\": 1, \"rho1\": 0, \"zeta0\": 0, \"zeta1\": 0, \"c\": 1},\n"
               "                 {\"rho0\": 0, \"rho1\": 0, \"zeta0\": 1, \"zeta1\": 0, \"c\": " + y1 + "}],\n"
               "  \"exact\": \"mlf(" + g + ", -x^" + g + ")\"\n"
               "}\n";
    }
    default:
        throw std::invalid_argument("example number must be 1, 2 or 3");
    }
}

BvpProblem load_example_problem(int which, double gamma)
{
    return load_problem_text(example_problem_json(which, gamma));
}

} // namespace fracollo

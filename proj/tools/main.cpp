// fracollo command line: solve fractional boundary value problems, run
// convergence sweeps, dump basis/derivative tables, and replay the built-in
// example problems.
//
// Exit codes: 0 success, 1 I/O failure, 2 validation or solvability failure.

#include "fracollo/collocation.hpp"
#include "fracollo/examples.hpp"
#include "fracollo/problemio.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace fracollo;

std::string fmt17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Step sizes may be written as a decimal ("0.125"), a fraction ("1/8") or a
// dyadic power ("2^-3").
double parse_step(const std::string& text)
{
    try {
        std::size_t used = 0;
        if (const auto slash = text.find('/'); slash != std::string::npos) {
            const double a = std::stod(text.substr(0, slash));
            const double b = std::stod(text.substr(slash + 1), &used);
            if (used != text.size() - slash - 1 || b == 0.0)
                throw std::invalid_argument(text);
            return a / b;
        }
        if (const auto caret = text.find('^'); caret != std::string::npos) {
            const double base = std::stod(text.substr(0, caret));
            const double exponent = std::stod(text.substr(caret + 1), &used);
            if (used != text.size() - caret - 1)
                throw std::invalid_argument(text);
            return std::pow(base, exponent);
        }
        const double v = std::stod(text, &used);
        if (used != text.size())
            throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw ValidationError("cannot parse step value '" + text + "'");
    }
}

std::vector<double> parse_step_list(const std::string& text)
{
    std::vector<double> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ','))
        if (!item.empty())
            values.push_back(parse_step(item));
    if (values.empty())
        throw ValidationError("empty h list");
    return values;
}

// Output sink: a file when a path is given, stdout otherwise. File errors
// surface as IoError (exit code 1).
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw IoError("cannot open output file: " + path);
            path_ = path;
        }
    }
    std::ostream& stream() { return path_.empty() ? std::cout : file_; }
    bool to_file() const { return !path_.empty(); }
    void finish()
    {
        if (!path_.empty()) {
            file_.flush();
            if (!file_)
                throw IoError("I/O failure while writing: " + path_);
        }
    }

private:
    std::ofstream file_;
    std::string path_;
};

struct SolveOptions {
    std::string problem_path;
    int degree = 3;
    std::string h_text;
    std::string delta_text;
    int eta = 4;
    double boundary_weight = 1.0;
    bool condition = false;
    std::string out_path;
};

void write_solution_csv(std::ostream& os, const SplineFunction& spline, const BvpProblem& problem,
                        double delta, int eta)
{
    const bool have_exact = problem.exact_solution.has_value();
    os << (have_exact ? "x,y_approx,y_exact,abs_err\n" : "x,y_approx\n");
    const double length = static_cast<double>(problem.length);
    const auto count = static_cast<long long>(std::llround(length / delta)) * eta;
    for (long long r = 0; r <= count; ++r) {
        const double x = std::min(delta * static_cast<double>(r) / eta, length);
        const double approx = eval_spline(spline, x);
        os << fmt17(x) << ',' << fmt17(approx);
        if (have_exact) {
            const double exact = (*problem.exact_solution)(x);
            os << ',' << fmt17(exact) << ',' << fmt17(std::fabs(exact - approx));
        }
        os << '\n';
    }
}

void run_solve_configured(const BvpProblem& problem, const SolveOptions& opt)
{
    const double h = parse_step(opt.h_text);
    const double delta = parse_step(opt.delta_text);
    const UniformBasis basis = make_basis(opt.degree, h, problem.length);

    const CollocationSystem sys = assemble(problem, basis, delta, ExecPolicy::parallel,
                                           opt.boundary_weight);
    const SplineFunction spline(basis, least_squares(sys.matrix, sys.rhs));

    Sink sink(opt.out_path);
    write_solution_csv(sink.stream(), spline, problem, delta, opt.eta);
    sink.finish();

    // keep the CSV stream clean when it goes to stdout
    std::ostream& report = sink.to_file() ? std::cout : std::cerr;
    if (problem.exact_solution)
        report << "error_inf = "
               << fmt17(error_inf_norm(spline, *problem.exact_solution, delta, opt.eta)) << '\n';
    if (opt.condition)
        report << "kappa = " << fmt17(condition_number(sys.matrix)) << '\n';
}

void run_solve(const SolveOptions& opt)
{
    run_solve_configured(load_problem(opt.problem_path), opt);
}

struct ConvergenceOptions {
    std::string problem_path;
    int degree = 4;
    std::string h_list_text;
    double delta_ratio = 0.5;
    int eta = 4;
    std::string format = "csv";
    std::string out_path;
};

void write_convergence_table(std::ostream& os, const std::vector<ConvergenceRow>& rows,
                             const std::string& format)
{
    if (format == "md") {
        os << "| h | error_inf | kappa | order |\n|---|---|---|---|\n";
        for (const auto& row : rows) {
            os << "| " << fmt17(row.h) << " | " << fmt17(row.error) << " | " << fmt17(row.kappa)
               << " | " << (row.order ? fmt17(*row.order) : std::string()) << " |\n";
        }
    } else {
        os << "h,error_inf,kappa,order\n";
        for (const auto& row : rows) {
            os << fmt17(row.h) << ',' << fmt17(row.error) << ',' << fmt17(row.kappa) << ','
               << (row.order ? fmt17(*row.order) : std::string()) << '\n';
        }
    }
}

void run_convergence_configured(const BvpProblem& problem, const ConvergenceOptions& opt)
{
    if (!problem.exact_solution)
        throw ValidationError("convergence study requires the problem to carry an "
                              "'exact' solution");
    const std::vector<double> h_list = parse_step_list(opt.h_list_text);
    const auto rows = convergence_study(problem, opt.degree, h_list, opt.delta_ratio, opt.eta);
    Sink sink(opt.out_path);
    write_convergence_table(sink.stream(), rows, opt.format);
    sink.finish();
}

void run_convergence(const ConvergenceOptions& opt)
{
    run_convergence_configured(load_problem(opt.problem_path), opt);
}

struct BasisDumpOptions {
    int degree = 3;
    std::string h_text;
    int length = 1;
    double gamma = 0.5;
    std::string grid_text;
    std::optional<int> ell;
    std::string out_path;
};

void run_basis_dump(const BasisDumpOptions& opt)
{
    const double h = parse_step(opt.h_text);
    const double grid_step = parse_step(opt.grid_text);
    if (!(grid_step > 0.0))
        throw ValidationError("grid step must be positive");
    const FractionalOrder order(opt.gamma);
    if (opt.gamma >= static_cast<double>(opt.degree))
        throw ValidationError("basis-dump requires gamma < degree");
    const UniformBasis basis = make_basis(opt.degree, h, opt.length);
    int ell_lo = basis.index_lo();
    int ell_hi = basis.index_hi();
    if (opt.ell) {
        if (!basis.contains_index(*opt.ell))
            throw ValidationError("index " + std::to_string(*opt.ell) + " outside [" +
                                  std::to_string(basis.index_lo()) + ", " +
                                  std::to_string(basis.index_hi()) + "]");
        ell_lo = ell_hi = *opt.ell;
    }

    Sink sink(opt.out_path);
    std::ostream& os = sink.stream();
    os << "ell,x,B,dB,DgammaB,DgammaB_oracle\n";
    const double length = static_cast<double>(opt.length);
    const auto count = static_cast<long long>(std::floor(length / grid_step + 1e-9));
    for (int ell = ell_lo; ell <= ell_hi; ++ell) {
        for (long long r = 0; r <= count; ++r) {
            const double x = std::min(grid_step * static_cast<double>(r), length);
            const Side side = (x == length) ? Side::left : Side::right;
            const double value = eval_basis(basis, ell, x);
            const double deriv =
                detail::cardinal_derivative(opt.degree, 1, x / h - ell, side) / h;
            const double frac = caputo_basis(basis, order, ell, x);
            const double oracle = caputo_oracle(basis, order, ell, x);
            os << ell << ',' << fmt17(x) << ',' << fmt17(value) << ',' << fmt17(deriv) << ','
               << fmt17(frac) << ',' << fmt17(oracle) << '\n';
        }
    }
    sink.finish();
}

struct ExampleOptions {
    int which = 1;
    std::optional<double> gamma;
    std::optional<int> degree;
    std::string h_text;
    std::string delta_text;
    std::string h_list_text;
    double delta_ratio = 0.5;
    int eta = 4;
    std::string format = "md";
    std::string out_path;
};

void run_example(const ExampleOptions& opt)
{
    const double gamma = opt.gamma.value_or(example_default_gamma(opt.which));
    const BvpProblem problem = load_example_problem(opt.which, gamma);

    const bool sweep = (opt.which != 1) || !opt.h_list_text.empty();
    if (sweep) {
        ConvergenceOptions copt;
        copt.degree = opt.degree.value_or(4);
        copt.h_list_text = opt.h_list_text.empty() ? "2^-3,2^-4,2^-5,2^-6" : opt.h_list_text;
        copt.delta_ratio = opt.delta_ratio;
        copt.eta = opt.eta;
        copt.format = opt.format;
        copt.out_path = opt.out_path;
        std::cout << "example " << opt.which << ", gamma = " << fmt17(gamma) << ", degree = "
                  << copt.degree << ", delta = " << fmt17(copt.delta_ratio) << " h\n";
        run_convergence_configured(problem, copt);
        return;
    }

    SolveOptions sopt;
    sopt.degree = opt.degree.value_or(3);
    sopt.h_text = opt.h_text.empty() ? "1/8" : opt.h_text;
    sopt.delta_text = opt.delta_text.empty() ? "1/16" : opt.delta_text;
    sopt.eta = opt.eta;
    sopt.condition = true;
    sopt.out_path = opt.out_path;
    std::cout << "example 1, gamma = " << fmt17(gamma) << ", degree = " << sopt.degree
              << ", h = " << sopt.h_text << ", delta = " << sopt.delta_text << '\n';
    run_solve_configured(problem, sopt);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Spline quasi-interpolant collocation solver for linear boundary value "
                 "problems with a Caputo space-fractional derivative"};
    // --h is a spacing option here, so help is long-form only
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    SolveOptions solve_opt;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve a problem file and emit the "
                                                      "sampled solution as CSV");
    solve_cmd->add_option("problem", solve_opt.problem_path, "problem JSON file")->required();
    solve_cmd->add_option("--degree", solve_opt.degree, "spline degree n")->required();
    solve_cmd->add_option("--h", solve_opt.h_text, "knot spacing (e.g. 1/8, 2^-3, 0.125)")
        ->required();
    solve_cmd->add_option("--delta", solve_opt.delta_text, "collocation spacing")->required();
    solve_cmd->add_option("--eta", solve_opt.eta, "error-grid refinement (default 4)");
    solve_cmd->add_option("--boundary-weight", solve_opt.boundary_weight,
                          "least-squares weight of the boundary rows (default 1)");
    solve_cmd->add_flag("--condition", solve_opt.condition,
                        "also report the condition number of the stacked matrix");
    solve_cmd->add_option("--out", solve_opt.out_path, "CSV output path (default: stdout)");
    solve_cmd->callback([&] { run_solve(solve_opt); });

    ConvergenceOptions conv_opt;
    CLI::App* conv_cmd = app.add_subcommand("convergence", "Error/condition table over a list "
                                                           "of knot spacings");
    conv_cmd->add_option("problem", conv_opt.problem_path, "problem JSON file")->required();
    conv_cmd->add_option("--degree", conv_opt.degree, "spline degree n")->required();
    conv_cmd->add_option("--h-list", conv_opt.h_list_text, "comma-separated knot spacings")
        ->required();
    conv_cmd->add_option("--delta-ratio", conv_opt.delta_ratio,
                         "collocation spacing as a fraction of h (default 0.5)");
    conv_cmd->add_option("--eta", conv_opt.eta, "error-grid refinement (default 4)");
    conv_cmd->add_option("--format", conv_opt.format, "table format: csv or md")
        ->check(CLI::IsMember({"csv", "md"}));
    conv_cmd->add_option("--out", conv_opt.out_path, "output path (default: stdout)");
    conv_cmd->callback([&] { run_convergence(conv_opt); });

    BasisDumpOptions dump_opt;
    CLI::App* dump_cmd = app.add_subcommand("basis-dump", "Tabulate basis functions, their "
                                                          "derivatives and both fractional-"
                                                          "derivative routes");
    dump_cmd->add_option("--degree", dump_opt.degree, "spline degree n")->required();
    dump_cmd->add_option("--h", dump_opt.h_text, "knot spacing")->required();
    dump_cmd->add_option("--L", dump_opt.length, "interval length (positive integer)")
        ->required();
    dump_cmd->add_option("--gamma", dump_opt.gamma, "fractional order")->required();
    dump_cmd->add_option("--grid-step", dump_opt.grid_text, "sampling step")->required();
    int ell_arg = 0;
    CLI::Option* ell_opt =
        dump_cmd->add_option("--ell", ell_arg, "dump a single basis index (default: all)");
    dump_cmd->add_option("--out", dump_opt.out_path, "CSV output path (default: stdout)");
    dump_cmd->callback([&] {
        if (*ell_opt)
            dump_opt.ell = ell_arg;
        run_basis_dump(dump_opt);
    });

    ExampleOptions ex_opt;
    CLI::App* ex_cmd = app.add_subcommand("example", "Replay a built-in example problem");
    ex_cmd->add_option("which", ex_opt.which, "example number (1, 2 or 3)")
        ->required()
        ->check(CLI::Range(1, 3));
    double gamma_arg = 0.0;
    CLI::Option* gamma_opt =
        ex_cmd->add_option("--gamma", gamma_arg, "fractional order override");
    int degree_arg = 0;
    CLI::Option* degree_opt = ex_cmd->add_option("--degree", degree_arg, "spline degree");
    ex_cmd->add_option("--h", ex_opt.h_text, "knot spacing (example 1)");
    ex_cmd->add_option("--delta", ex_opt.delta_text, "collocation spacing (example 1)");
    ex_cmd->add_option("--h-list", ex_opt.h_list_text, "run a sweep over these spacings");
    ex_cmd->add_option("--delta-ratio", ex_opt.delta_ratio, "sweep delta/h ratio (default 0.5)");
    ex_cmd->add_option("--eta", ex_opt.eta, "error-grid refinement (default 4)");
    ex_cmd->add_option("--format", ex_opt.format, "sweep table format: csv or md")
        ->check(CLI::IsMember({"csv", "md"}));
    ex_cmd->add_option("--out", ex_opt.out_path, "output path (default: stdout)");
    ex_cmd->callback([&] {
        if (*gamma_opt)
            ex_opt.gamma = gamma_arg;
        if (*degree_opt)
            ex_opt.degree = degree_arg;
        run_example(ex_opt);
    });

    for (CLI::App* sub : {solve_cmd, conv_cmd, dump_cmd, ex_cmd})
        sub->set_help_flag("--help", "print this help message and exit");

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

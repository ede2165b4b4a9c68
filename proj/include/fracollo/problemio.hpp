#pragma once

#include "fracollo/collocation.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fracollo {

// Error taxonomy for problem files. The CLI maps IoError to exit code 1 and
// everything else to exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset_)
        : std::runtime_error(what), offset(offset_) {}
    std::size_t offset;
};

struct EvalError : std::runtime_error {
    EvalError(const std::string& what, std::size_t offset_)
        : std::runtime_error(what), offset(offset_) {}
    std::size_t offset;
};

// Compiled arithmetic expression in the variable x. Grammar: real literals,
// x, binary + - * / ^ (with ^ right-associative and binding tighter than
// unary minus, so -x^2 is -(x^2)), unary minus, the functions sin cos exp
// ln sqrt abs gamma mlf, and the constants pi and e. Immutable and
// shareable across threads.
class Expression {
public:
    double operator()(double x) const;

    struct Node;

private:
    explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    friend Expression parse_expression(std::string_view src);
    friend double eval_expression(const Expression& e, double x);
    friend std::string unparse(const Expression& e);

    std::shared_ptr<const Node> root_;
};

// Parses src or throws ParseError with the byte offset of the failure.
Expression parse_expression(std::string_view src);

// IEEE double evaluation; throws EvalError (with the offending
// sub-expression offset) when an argument leaves a function's domain.
double eval_expression(const Expression& e, double x);

// Fully parenthesised text form; parsing it back yields a structurally
// identical tree.
std::string unparse(const Expression& e);

// Reads a JSON problem file:
//   { "gamma": num, "L": int, "f": str, "g": str,
//     "boundary": [{"rho0":num,"rho1":num,"zeta0":num,"zeta1":num,"c":num}, ...],
//     "exact": str (optional) }
// boundary must hold exactly ceil(gamma) rows and they must be linearly
// independent. Unknown or missing fields are schema errors.
BvpProblem load_problem(const std::string& path);

// Same checks, starting from in-memory JSON text.
BvpProblem load_problem_text(const std::string& json_text);

} // namespace fracollo

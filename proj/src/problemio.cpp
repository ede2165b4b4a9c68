#include "fracollo/problemio.hpp"

#include "fracollo/specfun.hpp"

#include <json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <utility>
#include <vector>

namespace fracollo {

namespace {

enum class Op { number, variable, add, sub, mul, div, pow, neg, call };

enum class Func { sin, cos, exp, ln, sqrt, abs, gamma, mlf };

const char* func_name(Func f)
{
    switch (f) {
    case Func::sin: return "sin";
    case Func::cos: return "cos";
    case Func::exp: return "exp";
    case Func::ln: return "ln";
    case Func::sqrt: return "sqrt";
    case Func::abs: return "abs";
    case Func::gamma: return "gamma";
    case Func::mlf: return "mlf";
    }
    return "?";
}

int func_arity(Func f)
{
    return f == Func::mlf ? 2 : 1;
}

} // namespace

struct Expression::Node {
    Op op = Op::number;
    double number = 0.0;
    Func func = Func::sin;
    std::size_t offset = 0;
    std::vector<Node> kids;
};

namespace {

using Node = Expression::Node;

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Node run()
    {
        Node root = parse_expr();
        skip_space();
        if (pos_ != src_.size())
            fail("unexpected trailing input");
        return root;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " + what, pos_);
    }

    void skip_space()
    {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    char peek()
    {
        skip_space();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    // expr := term (('+'|'-') term)*
    Node parse_expr()
    {
        Node lhs = parse_term();
        for (;;) {
            const std::size_t at = pos_;
            if (accept('+'))
                lhs = binary(Op::add, at, std::move(lhs), parse_term());
            else if (accept('-'))
                lhs = binary(Op::sub, at, std::move(lhs), parse_term());
            else
                return lhs;
        }
    }

    // term := unary (('*'|'/') unary)*
    Node parse_term()
    {
        Node lhs = parse_unary();
        for (;;) {
            const std::size_t at = pos_;
            if (accept('*'))
                lhs = binary(Op::mul, at, std::move(lhs), parse_unary());
            else if (accept('/'))
                lhs = binary(Op::div, at, std::move(lhs), parse_unary());
            else
                return lhs;
        }
    }

    // unary := '-' unary | power.  The recursion puts '^' above unary
    // minus, so -x^2 parses as -(x^2).
    Node parse_unary()
    {
        skip_space();
        const std::size_t at = pos_;
        if (accept('-')) {
            Node node;
            node.op = Op::neg;
            node.offset = at;
            node.kids.push_back(parse_unary());
            return node;
        }
        return parse_power();
    }

    // power := primary ('^' unary)?   (right-associative)
    Node parse_power()
    {
        Node base = parse_primary();
        const std::size_t at = pos_;
        if (accept('^'))
            return binary(Op::pow, at, std::move(base), parse_unary());
        return base;
    }

    Node parse_primary()
    {
        skip_space();
        if (pos_ >= src_.size())
            fail("expected a number, name, '(' or '-'");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return parse_name();
        if (c == '(') {
            ++pos_;
            Node inner = parse_expr();
            expect(')');
            return inner;
        }
        fail("expected a number, name, '(' or '-'");
    }

    Node parse_number()
    {
        const char* begin = src_.data() + pos_;
        char* end = nullptr;
        // src_ views a NUL-terminated string (see parse_expression)
        const double value = std::strtod(begin, &end);
        if (end == begin)
            fail("malformed number");
        Node node;
        node.op = Op::number;
        node.number = value;
        node.offset = pos_;
        pos_ += static_cast<std::size_t>(end - begin);
        return node;
    }

    Node parse_name()
    {
        const std::size_t at = pos_;
        std::string name;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            name += src_[pos_++];

        if (name == "x") {
            Node node;
            node.op = Op::variable;
            node.offset = at;
            return node;
        }
        if (name == "pi" || name == "e") {
            Node node;
            node.op = Op::number;
            node.number = (name == "pi") ? M_PI : M_E;
            node.offset = at;
            return node;
        }

        static const std::pair<const char*, Func> table[] = {
            {"sin", Func::sin}, {"cos", Func::cos},     {"exp", Func::exp},
            {"ln", Func::ln},   {"sqrt", Func::sqrt},   {"abs", Func::abs},
            {"gamma", Func::gamma}, {"mlf", Func::mlf},
        };
        for (const auto& [fname, func] : table) {
            if (name == fname) {
                expect('(');
                Node node;
                node.op = Op::call;
                node.func = func;
                node.offset = at;
                node.kids.push_back(parse_expr());
                while (accept(','))
                    node.kids.push_back(parse_expr());
                expect(')');
                if (static_cast<int>(node.kids.size()) != func_arity(func))
                    throw ParseError("function '" + name + "' takes " +
                                         std::to_string(func_arity(func)) + " argument(s), got " +
                                         std::to_string(node.kids.size()),
                                     at);
                return node;
            }
        }
        throw ParseError("unknown identifier '" + name + "'", at);
    }

    static Node binary(Op op, std::size_t at, Node lhs, Node rhs)
    {
        Node node;
        node.op = op;
        node.offset = at;
        node.kids.reserve(2);
        node.kids.push_back(std::move(lhs));
        node.kids.push_back(std::move(rhs));
        return node;
    }
};

double eval_node(const Node& node, double x)
{
    switch (node.op) {
    case Op::number:
        return node.number;
    case Op::variable:
        return x;
    case Op::add:
        return eval_node(node.kids[0], x) + eval_node(node.kids[1], x);
    case Op::sub:
        return eval_node(node.kids[0], x) - eval_node(node.kids[1], x);
    case Op::mul:
        return eval_node(node.kids[0], x) * eval_node(node.kids[1], x);
    case Op::div:
        return eval_node(node.kids[0], x) / eval_node(node.kids[1], x);
    case Op::pow: {
        const double result = std::pow(eval_node(node.kids[0], x), eval_node(node.kids[1], x));
        if (std::isnan(result))
            throw EvalError("power outside the real domain at offset " +
                                std::to_string(node.offset),
                            node.offset);
        return result;
    }
    case Op::neg:
        return -eval_node(node.kids[0], x);
    case Op::call: {
        const double a = eval_node(node.kids[0], x);
        try {
            switch (node.func) {
            case Func::sin: return std::sin(a);
            case Func::cos: return std::cos(a);
            case Func::exp: return std::exp(a);
            case Func::ln:
                if (a <= 0.0)
                    throw std::domain_error("ln argument must be positive");
                return std::log(a);
            case Func::sqrt:
                if (a < 0.0)
                    throw std::domain_error("sqrt argument must be nonnegative");
                return std::sqrt(a);
            case Func::abs: return std::fabs(a);
            case Func::gamma: return gamma_fn(a);
            case Func::mlf: return mittag_leffler(a, eval_node(node.kids[1], x));
            }
        } catch (const EvalError&) {
            throw;
        } catch (const std::exception& e) {
            throw EvalError(std::string(func_name(node.func)) + " at offset " +
                                std::to_string(node.offset) + ": " + e.what(),
                            node.offset);
        }
        return 0.0; // unreachable
    }
    }
    return 0.0; // unreachable
}

void unparse_node(const Node& node, std::string& out)
{
    switch (node.op) {
    case Op::number: {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", node.number);
        out += buf;
        return;
    }
    case Op::variable:
        out += 'x';
        return;
    case Op::neg:
        out += "(-";
        unparse_node(node.kids[0], out);
        out += ')';
        return;
    case Op::call:
        out += func_name(node.func);
        out += '(';
        for (std::size_t i = 0; i < node.kids.size(); ++i) {
            if (i > 0)
                out += ", ";
            unparse_node(node.kids[i], out);
        }
        out += ')';
        return;
    default: {
        const char* sym = node.op == Op::add   ? " + "
                          : node.op == Op::sub ? " - "
                          : node.op == Op::mul ? " * "
                          : node.op == Op::div ? " / "
                                               : "^";
        out += '(';
        unparse_node(node.kids[0], out);
        out += sym;
        unparse_node(node.kids[1], out);
        out += ')';
        return;
    }
    }
}

} // namespace

Expression parse_expression(std::string_view src)
{
    // strtod needs a terminator; own the text for the parse
    const std::string owned(src);
    Parser parser{std::string_view(owned.c_str(), owned.size())};
    auto root = std::make_shared<const Node>(parser.run());
    return Expression(std::move(root));
}

double eval_expression(const Expression& e, double x)
{
    return eval_node(*e.root_, x);
}

double Expression::operator()(double x) const
{
    return eval_node(*root_, x);
}

std::string unparse(const Expression& e)
{
    std::string out;
    unparse_node(*e.root_, out);
    return out;
}

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& key)
{
    if (!j.at(key).is_number())
        throw SchemaError("field '" + key + "' must be a number");
    return j.at(key).get<double>();
}

Expression parse_field(const json& j, const std::string& key)
{
    if (!j.at(key).is_string())
        throw SchemaError("field '" + key + "' must be an expression string");
    try {
        return parse_expression(j.at(key).get<std::string>());
    } catch (const ParseError& e) {
        throw ValidationError("field '" + key + "': " + e.what());
    }
}

} // namespace

BvpProblem load_problem_text(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("problem file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw SchemaError("problem file must be a JSON object");

    static const char* required[] = {"gamma", "L", "f", "g", "boundary"};
    for (const char* key : required)
        if (!doc.contains(key))
            throw SchemaError(std::string("missing field '") + key + "'");
    for (const auto& item : doc.items()) {
        const std::string& key = item.key();
        if (key != "gamma" && key != "L" && key != "f" && key != "g" && key != "boundary" &&
            key != "exact")
            throw SchemaError("unknown field '" + key + "'");
    }

    const double gamma_value = require_number(doc, "gamma");
    if (!doc.at("L").is_number_integer())
        throw SchemaError("field 'L' must be an integer");
    const auto length = doc.at("L").get<long long>();
    if (length < 1)
        throw ValidationError("L must be a positive integer");

    FractionalOrder order = [&] {
        try {
            return FractionalOrder(gamma_value);
        } catch (const std::exception& e) {
            throw ValidationError(e.what());
        }
    }();

    if (!doc.at("boundary").is_array())
        throw SchemaError("field 'boundary' must be an array");
    std::vector<BoundaryRow> boundary;
    for (const json& row : doc.at("boundary")) {
        if (!row.is_object())
            throw SchemaError("boundary rows must be objects");
        static const char* keys[] = {"rho0", "rho1", "zeta0", "zeta1", "c"};
        for (const char* key : keys)
            if (!row.contains(key))
                throw SchemaError(std::string("boundary row is missing '") + key + "'");
        for (const auto& item : row.items())
            if (item.key() != "rho0" && item.key() != "rho1" && item.key() != "zeta0" &&
                item.key() != "zeta1" && item.key() != "c")
                throw SchemaError("boundary row has unknown field '" + item.key() + "'");
        boundary.push_back(BoundaryRow{require_number(row, "rho0"), require_number(row, "rho1"),
                                       require_number(row, "zeta0"), require_number(row, "zeta1"),
                                       require_number(row, "c")});
    }

    const Expression f_expr = parse_field(doc, "f");
    const Expression g_expr = parse_field(doc, "g");

    BvpProblem problem{order,
                       static_cast<int>(length),
                       [f_expr](double x) { return f_expr(x); },
                       [g_expr](double x) { return g_expr(x); },
                       std::move(boundary),
                       std::nullopt};
    if (doc.contains("exact")) {
        const Expression exact_expr = parse_field(doc, "exact");
        problem.exact_solution = [exact_expr](double x) { return exact_expr(x); };
    }

    try {
        validate_problem(problem);
    } catch (const std::exception& e) {
        throw ValidationError(e.what());
    }
    return problem;
}

BvpProblem load_problem(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open problem file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad())
        throw IoError("I/O failure while reading: " + path);
    return load_problem_text(text);
}

} // namespace fracollo

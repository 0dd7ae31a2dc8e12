#include <doctest.h>

#include <cmath>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "trudinger/expression.hpp"
#include "trudinger/sampling.hpp"

using namespace trudinger;

namespace {

// Independent reference evaluator: shunting-yard over the same grammar,
// written against the published precedence table rather than the parser.
namespace ref {

struct Tok {
    enum Kind { k_num, k_var, k_op, k_func, k_lparen, k_rparen, k_comma } kind;
    double value = 0;
    int var = -1; // -1 => t
    char op = 0;
    std::string name;
};

std::vector<Tok> lex(const std::string& s) {
    std::vector<Tok> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t end;
            out.push_back({Tok::k_num, std::stod(s.substr(i), &end), 0, 0, ""});
            i += end;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            const std::string name = s.substr(i, j - i);
            i = j;
            if (name == "t") out.push_back({Tok::k_var, 0, -1, 0, ""});
            else if (name[0] == 'x' && name.size() > 1 &&
                     std::isdigit(static_cast<unsigned char>(name[1])))
                out.push_back({Tok::k_var, 0, std::stoi(name.substr(1)) - 1, 0, ""});
            else out.push_back({Tok::k_func, 0, 0, 0, name});
            continue;
        }
        if (std::strchr("+-*/^", c)) { out.push_back({Tok::k_op, 0, 0, c, ""}); ++i; continue; }
        if (c == '(') { out.push_back({Tok::k_lparen, 0, 0, 0, ""}); ++i; continue; }
        if (c == ')') { out.push_back({Tok::k_rparen, 0, 0, 0, ""}); ++i; continue; }
        if (c == ',') { out.push_back({Tok::k_comma, 0, 0, 0, ""}); ++i; continue; }
        throw std::runtime_error("ref lexer: bad char");
    }
    return out;
}

int prec(char op, bool unary) {
    if (unary) return 3;
    switch (op) {
        case '+': case '-': return 1;
        case '*': case '/': return 2;
        case '^': return 4;
    }
    return 0;
}

double apply_fn(const std::string& name, const std::vector<double>& args) {
    if (name == "sin") return std::sin(args[0]);
    if (name == "cos") return std::cos(args[0]);
    if (name == "exp") return std::exp(args[0]);
    if (name == "log") return std::log(args[0]);
    if (name == "sqrt") return std::sqrt(args[0]);
    if (name == "abs") return std::abs(args[0]);
    if (name == "min") return std::min(args[0], args[1]);
    if (name == "max") return std::max(args[0], args[1]);
    throw std::runtime_error("ref: unknown function " + name);
}

double evaluate(const std::string& text, const Vec& x, double t) {
    const auto toks = lex(text);
    // Shunting-yard to RPN, marking unary minus as 'm'.
    std::vector<Tok> output, stack;
    bool expect_operand = true;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        Tok tk = toks[i];
        switch (tk.kind) {
            case Tok::k_num:
            case Tok::k_var:
                output.push_back(tk);
                expect_operand = false;
                break;
            case Tok::k_func:
                stack.push_back(tk);
                expect_operand = true;
                break;
            case Tok::k_op: {
                if (expect_operand && tk.op == '-') tk.op = 'm';
                const bool unary = tk.op == 'm';
                const int p = prec(unary ? '-' : tk.op, unary);
                const bool right = tk.op == '^' || unary;
                while (!stack.empty() && stack.back().kind == Tok::k_op) {
                    const bool top_unary = stack.back().op == 'm';
                    const int tp = prec(top_unary ? '-' : stack.back().op, top_unary);
                    if (tp > p || (tp == p && !right)) {
                        output.push_back(stack.back());
                        stack.pop_back();
                    } else break;
                }
                stack.push_back(tk);
                expect_operand = true;
                break;
            }
            case Tok::k_lparen:
                stack.push_back(tk);
                expect_operand = true;
                break;
            case Tok::k_comma:
                while (!stack.empty() && stack.back().kind != Tok::k_lparen) {
                    output.push_back(stack.back());
                    stack.pop_back();
                }
                expect_operand = true;
                break;
            case Tok::k_rparen:
                while (!stack.empty() && stack.back().kind != Tok::k_lparen) {
                    output.push_back(stack.back());
                    stack.pop_back();
                }
                if (stack.empty()) throw std::runtime_error("ref: unbalanced parens");
                stack.pop_back();
                if (!stack.empty() && stack.back().kind == Tok::k_func) {
                    output.push_back(stack.back());
                    stack.pop_back();
                }
                expect_operand = false;
                break;
        }
    }
    while (!stack.empty()) {
        output.push_back(stack.back());
        stack.pop_back();
    }
    // Evaluate RPN.
    std::vector<double> st;
    for (const Tok& tk : output) {
        if (tk.kind == Tok::k_num) st.push_back(tk.value);
        else if (tk.kind == Tok::k_var)
            st.push_back(tk.var < 0 ? t : x[static_cast<std::size_t>(tk.var)]);
        else if (tk.kind == Tok::k_op) {
            if (tk.op == 'm') {
                st.back() = -st.back();
                continue;
            }
            const double b = st.back(); st.pop_back();
            const double a = st.back(); st.pop_back();
            switch (tk.op) {
                case '+': st.push_back(a + b); break;
                case '-': st.push_back(a - b); break;
                case '*': st.push_back(a * b); break;
                case '/': st.push_back(a / b); break;
                case '^': st.push_back(std::pow(a, b)); break;
            }
        } else if (tk.kind == Tok::k_func) {
            const bool binary = tk.name == "min" || tk.name == "max";
            std::vector<double> args;
            if (binary) {
                args = {st[st.size() - 2], st[st.size() - 1]};
                st.pop_back();
                st.pop_back();
            } else {
                args = {st.back()};
                st.pop_back();
            }
            st.push_back(apply_fn(tk.name, args));
        }
    }
    if (st.size() != 1) throw std::runtime_error("ref: bad RPN");
    return st[0];
}

} // namespace ref

// Random tree generator over the full grammar.
class TreeGen {
public:
    TreeGen(std::uint64_t seed, int dim) : rng_(seed), dim_(dim), builder_(dim) {}

    Expression make(int max_depth) {
        const int root = gen(max_depth);
        return builder_.finish(root);
    }

private:
    Rng rng_;
    int dim_;
    ExprBuilder builder_;

    int gen(int depth) {
        const double pick = rng_.uniform();
        if (depth <= 0 || pick < 0.25) {
            if (rng_.uniform() < 0.5)
                return builder_.number(std::round(rng_.uniform(0.0, 4.0) * 64.0) / 64.0);
            const int which = static_cast<int>(rng_.uniform() * (dim_ + 1));
            return which == dim_ ? builder_.var_t() : builder_.var_x(which);
        }
        using Op = Expression::Op;
        if (pick < 0.35) return builder_.unary(Op::neg, gen(depth - 1));
        if (pick < 0.50) {
            static const Op fns[] = {Op::sin, Op::cos, Op::exp, Op::abs};
            return builder_.unary(fns[static_cast<int>(rng_.uniform() * 4)], gen(depth - 1));
        }
        if (pick < 0.60)
            return builder_.binary(rng_.uniform() < 0.5 ? Op::min : Op::max, gen(depth - 1),
                                   gen(depth - 1));
        static const Op ops[] = {Op::add, Op::sub, Op::mul, Op::pow};
        const Op op = ops[static_cast<int>(rng_.uniform() * 4)];
        if (op == Op::pow) {
            // Keep pow well-behaved: positive base, small integer exponent.
            const int base = builder_.binary(Op::add, builder_.number(1.5),
                                             builder_.unary(Op::abs, gen(depth - 2)));
            const int expn =
                builder_.number(static_cast<double>(1 + static_cast<int>(rng_.uniform() * 3)));
            return builder_.binary(Op::pow, base, expn);
        }
        return builder_.binary(op, gen(depth - 1), gen(depth - 1));
    }
};

} // namespace

TEST_CASE("parse examples from the grammar") {
    Expression e = parse_expression("2+sin(x1)*exp(-t)", 2);
    CHECK(e.eval(Vec{M_PI / 2, 0.0}, 0.0) == doctest::Approx(3.0));
    Expression one = parse_expression("1", 1);
    CHECK(one.eval(Vec{0.0}, 0.0) == 1.0);
    // Right associativity of ^.
    Expression pw = parse_expression("2^3^2", 1);
    CHECK(pw.eval(Vec{0.0}, 0.0) == doctest::Approx(512.0));
    // Precedence: ^ binds above unary minus, which binds above * /.
    CHECK(parse_expression("-2^2", 1).eval(Vec{0.0}, 0.0) == doctest::Approx(-4.0));
    CHECK(parse_expression("2^-1", 1).eval(Vec{0.0}, 0.0) == doctest::Approx(0.5));
    CHECK(parse_expression("6/2*3", 1).eval(Vec{0.0}, 0.0) == doctest::Approx(9.0));
    CHECK(parse_expression("min(3,max(1,2))", 1).eval(Vec{0.0}, 0.0) == doctest::Approx(2.0));
}

TEST_CASE("parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_expression("", 2), ParseError);
    try {
        parse_expression("1+*2", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& pe) {
        CHECK(pe.offset == 2);
    }
    try {
        parse_expression("1+foo(2)", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& pe) {
        CHECK(pe.offset == 2);
    }
    CHECK_THROWS_AS(parse_expression("x3+1", 2), ParseError); // out of dimension
    CHECK_THROWS_AS(parse_expression("1+2)", 2), ParseError); // trailing input
}

TEST_CASE("evaluation domain errors are reported") {
    CHECK_THROWS_AS(parse_expression("log(x1)", 1).eval(Vec{-1.0}, 0.0), DomainViolation);
    CHECK_THROWS_AS(parse_expression("sqrt(x1-2)", 1).eval(Vec{0.0}, 0.0), DomainViolation);
    CHECK_THROWS_AS(parse_expression("1/x1", 1).eval(Vec{0.0}, 0.0), DomainViolation);
    CHECK(parse_expression("log(exp(x1))", 1).eval(Vec{2.5}, 0.0) == doctest::Approx(2.5));
}

TEST_CASE("print/parse round-trip is the identity on trees") {
    // Hand-picked shapes that stress the parenthesizer.
    for (const char* text :
         {"2+sin(x1)*exp(-t)", "2^3^2", "-(x1+1)", "(2^3)^2", "x1-(x2-1)", "1-2-3", "2^-3",
          "-x1^2", "min(x1,max(x2,t))", "abs(-x1)/(1+t)"}) {
        Expression a = parse_expression(text, 2);
        Expression b = parse_expression(a.print(), 2);
        CHECK_MESSAGE(a.same_tree(b), text, " -> ", a.print());
    }
    // Random trees: printing then parsing reproduces the tree exactly.
    for (int i = 0; i < 500; ++i) {
        TreeGen gen(1000 + static_cast<std::uint64_t>(i), 3);
        Expression a = gen.make(5);
        const std::string printed = a.print();
        Expression b = parse_expression(printed, 3);
        CHECK_MESSAGE(a.same_tree(b), "round-trip failed for: ", printed);
        CHECK(b.print() == printed);
    }
}

TEST_CASE("evaluation matches the reference interpreter on 1000 random trees") {
    int checked = 0;
    for (int i = 0; checked < 1000; ++i) {
        REQUIRE(i < 4000);
        TreeGen gen(42 + static_cast<std::uint64_t>(i) * 131, 3);
        Expression a = gen.make(6);
        const std::string printed = a.print();
        Rng rng(900 + static_cast<std::uint64_t>(i));
        const Vec x{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const double t = rng.uniform(0.0, 1.0);
        double mine;
        try {
            mine = a.eval(x, t);
        } catch (const DomainViolation&) {
            continue; // tree hit a data error (division by zero etc.)
        }
        const double theirs = ref::evaluate(printed, x, t);
        if (!std::isfinite(mine) || !std::isfinite(theirs)) continue;
        CHECK_MESSAGE(std::abs(mine - theirs) <=
                          1e-12 * std::max(1.0, std::max(std::abs(mine), std::abs(theirs))),
                      "mismatch on: ", printed);
        ++checked;
    }
}

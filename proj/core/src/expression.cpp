#include "trudinger/expression.hpp"

#include <cctype>
#include <cmath>
#include <charconv>
#include <cstdio>

namespace trudinger {

namespace {

// Precedence levels used by both the parser and the printer.
// add/sub = 1, mul/div = 2, unary minus = 3, pow = 4, atoms = 5.
int precedence(Expression::Op op) {
    using Op = Expression::Op;
    switch (op) {
        case Op::add:
        case Op::sub: return 1;
        case Op::mul:
        case Op::div: return 2;
        case Op::neg: return 3;
        case Op::pow: return 4;
        default: return 5;
    }
}

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    int dim;
    std::vector<Expression::Node>& nodes;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    int add_node(Expression::Node n) {
        nodes.push_back(n);
        return static_cast<int>(nodes.size()) - 1;
    }

    int parse_expr() {
        int lhs = parse_term();
        for (;;) {
            skip_ws();
            if (eat('+'))
                lhs = add_node({Expression::Op::add, 0, 0, lhs, parse_term()});
            else if (eat('-'))
                lhs = add_node({Expression::Op::sub, 0, 0, lhs, parse_term()});
            else
                return lhs;
        }
    }

    int parse_term() {
        int lhs = parse_factor();
        for (;;) {
            skip_ws();
            if (eat('*'))
                lhs = add_node({Expression::Op::mul, 0, 0, lhs, parse_factor()});
            else if (eat('/'))
                lhs = add_node({Expression::Op::div, 0, 0, lhs, parse_factor()});
            else
                return lhs;
        }
    }

    // factor handles unary minus below ^, so -x^2 == -(x^2) and 2^-3 parses.
    int parse_factor() {
        if (eat('-')) return add_node({Expression::Op::neg, 0, 0, parse_factor(), -1});
        return parse_power();
    }

    int parse_power() {
        int base = parse_atom();
        if (eat('^')) return add_node({Expression::Op::pow, 0, 0, base, parse_factor()});
        return base;
    }

    int parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw ParseError("unexpected end of expression", pos);
        const char c = s[pos];
        if (c == '(') {
            ++pos;
            int inner = parse_expr();
            if (!eat(')')) throw ParseError("expected ')'", pos);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }

    int parse_number() {
        double v = 0.0;
        const char* begin = s.data() + pos;
        const char* end = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc()) throw ParseError("malformed number", pos);
        pos += static_cast<std::size_t>(ptr - begin);
        return add_node({Expression::Op::number, v, 0, -1, -1});
    }

    int parse_ident() {
        const std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        const std::string name = s.substr(start, pos - start);
        using Op = Expression::Op;

        if (name == "t") return add_node({Op::var_t, 0, 0, -1, -1});
        if (name.size() >= 2 && name[0] == 'x') {
            int idx = 0;
            auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), idx);
            if (ec == std::errc() && ptr == name.data() + name.size()) {
                if (idx < 1 || idx > dim)
                    throw ParseError("variable " + name + " out of range for dimension " +
                                         std::to_string(dim),
                                     start);
                return add_node({Op::var_x, 0, idx - 1, -1, -1});
            }
        }

        Op op;
        int arity = 1;
        if (name == "sin") op = Op::sin;
        else if (name == "cos") op = Op::cos;
        else if (name == "exp") op = Op::exp;
        else if (name == "log") op = Op::log;
        else if (name == "sqrt") op = Op::sqrt;
        else if (name == "abs") op = Op::abs;
        else if (name == "min") { op = Op::min; arity = 2; }
        else if (name == "max") { op = Op::max; arity = 2; }
        else throw ParseError("unknown identifier '" + name + "'", start);

        if (!eat('(')) throw ParseError("expected '(' after function " + name, pos);
        int a = parse_expr();
        int b = -1;
        if (arity == 2) {
            if (!eat(',')) throw ParseError("expected ',' in " + name + "(...)", pos);
            b = parse_expr();
        }
        if (!eat(')')) throw ParseError("expected ')'", pos);
        return add_node({op, 0, 0, a, b});
    }
};

void append_number(double v, std::string& out) {
    // Shortest form that round-trips the double exactly.
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, ptr);
}

} // namespace

Expression parse_expression(const std::string& text, int dim) {
    if (text.empty()) throw ParseError("empty expression", 0);
    Expression e;
    e.dim_ = dim;
    Parser p{text, 0, dim, e.nodes_};
    e.root_ = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
    return e;
}

double Expression::eval(std::span<const double> x, double t) const {
    if (static_cast<int>(x.size()) < dim_)
        throw InvalidInput("Expression::eval: point dimension too small");
    return eval_node(root_, x, t);
}

double Expression::eval_node(int id, std::span<const double> x, double t) const {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    switch (n.op) {
        case Op::number: return n.value;
        case Op::var_x: return x[static_cast<std::size_t>(n.var)];
        case Op::var_t: return t;
        case Op::neg: return -eval_node(n.a, x, t);
        case Op::add: return eval_node(n.a, x, t) + eval_node(n.b, x, t);
        case Op::sub: return eval_node(n.a, x, t) - eval_node(n.b, x, t);
        case Op::mul: return eval_node(n.a, x, t) * eval_node(n.b, x, t);
        case Op::div: {
            const double d = eval_node(n.b, x, t);
            if (d == 0.0) throw DomainViolation("data error: division by zero");
            return eval_node(n.a, x, t) / d;
        }
        case Op::pow: return std::pow(eval_node(n.a, x, t), eval_node(n.b, x, t));
        case Op::sin: return std::sin(eval_node(n.a, x, t));
        case Op::cos: return std::cos(eval_node(n.a, x, t));
        case Op::exp: return std::exp(eval_node(n.a, x, t));
        case Op::log: {
            const double v = eval_node(n.a, x, t);
            if (!(v > 0.0)) throw DomainViolation("data error: log of non-positive value");
            return std::log(v);
        }
        case Op::sqrt: {
            const double v = eval_node(n.a, x, t);
            if (v < 0.0) throw DomainViolation("data error: sqrt of negative value");
            return std::sqrt(v);
        }
        case Op::abs: return std::abs(eval_node(n.a, x, t));
        case Op::min: return std::min(eval_node(n.a, x, t), eval_node(n.b, x, t));
        case Op::max: return std::max(eval_node(n.a, x, t), eval_node(n.b, x, t));
    }
    throw InvalidInput("Expression: corrupt node");
}

std::string Expression::print() const {
    std::string out;
    print_node(root_, 0, false, out);
    return out;
}

void Expression::print_node(int id, int parent_prec, bool rhs, std::string& out) const {
    const Node& n = nodes_[static_cast<std::size_t>(id)];
    const int prec = precedence(n.op);
    switch (n.op) {
        case Op::number: append_number(n.value, out); return;
        case Op::var_x: out += "x" + std::to_string(n.var + 1); return;
        case Op::var_t: out += "t"; return;
        case Op::sin: case Op::cos: case Op::exp:
        case Op::log: case Op::sqrt: case Op::abs: {
            static const char* names[] = {"sin", "cos", "exp", "log", "sqrt", "abs"};
            out += names[static_cast<int>(n.op) - static_cast<int>(Op::sin)];
            out += "(";
            print_node(n.a, 0, false, out);
            out += ")";
            return;
        }
        case Op::min: case Op::max: {
            out += (n.op == Op::min) ? "min(" : "max(";
            print_node(n.a, 0, false, out);
            out += ",";
            print_node(n.b, 0, false, out);
            out += ")";
            return;
        }
        default: break;
    }

    // Operators: parenthesize when our precedence loses against the parent,
    // or ties on the side that would re-associate differently.
    const bool need_paren =
        prec < parent_prec || (prec == parent_prec && rhs && n.op != Op::pow) ||
        (prec == parent_prec && !rhs && n.op == Op::pow);
    if (need_paren) out += "(";
    switch (n.op) {
        case Op::neg:
            out += "-";
            print_node(n.a, prec, true, out);
            break;
        case Op::add: case Op::sub: case Op::mul: case Op::div: {
            const char sym = (n.op == Op::add)   ? '+'
                             : (n.op == Op::sub) ? '-'
                             : (n.op == Op::mul) ? '*'
                                                 : '/';
            print_node(n.a, prec, false, out);
            out += sym;
            print_node(n.b, prec, true, out);
            break;
        }
        case Op::pow:
            print_node(n.a, prec, false, out);
            out += "^";
            print_node(n.b, prec - 1, true, out); // rhs of ^ may be unary minus
            break;
        default: break;
    }
    if (need_paren) out += ")";
}

bool Expression::same_tree(const Expression& other) const {
    return dim_ == other.dim_ && same_node(root_, other, other.root_);
}

bool Expression::same_node(int id, const Expression& o, int oid) const {
    const Node& a = nodes_[static_cast<std::size_t>(id)];
    const Node& b = o.nodes_[static_cast<std::size_t>(oid)];
    if (a.op != b.op) return false;
    if (a.op == Op::number) return a.value == b.value;
    if (a.op == Op::var_x) return a.var == b.var;
    if (a.op == Op::var_t) return true;
    if ((a.a >= 0) != (b.a >= 0)) return false;
    if ((a.b >= 0) != (b.b >= 0)) return false;
    if (a.a >= 0 && !same_node(a.a, o, b.a)) return false;
    if (a.b >= 0 && !same_node(a.b, o, b.b)) return false;
    return true;
}

int ExprBuilder::number(double v) {
    // The grammar has no negative literals; wrap them in a neg node so that
    // printed trees re-parse to the identical structure.
    if (std::signbit(v)) {
        e_.nodes_.push_back({Expression::Op::number, -v, 0, -1, -1});
        const int child = static_cast<int>(e_.nodes_.size()) - 1;
        return unary(Expression::Op::neg, child);
    }
    e_.nodes_.push_back({Expression::Op::number, v, 0, -1, -1});
    return static_cast<int>(e_.nodes_.size()) - 1;
}
int ExprBuilder::var_x(int i) {
    e_.nodes_.push_back({Expression::Op::var_x, 0, i, -1, -1});
    return static_cast<int>(e_.nodes_.size()) - 1;
}
int ExprBuilder::var_t() {
    e_.nodes_.push_back({Expression::Op::var_t, 0, 0, -1, -1});
    return static_cast<int>(e_.nodes_.size()) - 1;
}
int ExprBuilder::unary(Expression::Op op, int a) {
    e_.nodes_.push_back({op, 0, 0, a, -1});
    return static_cast<int>(e_.nodes_.size()) - 1;
}
int ExprBuilder::binary(Expression::Op op, int a, int b) {
    e_.nodes_.push_back({op, 0, 0, a, b});
    return static_cast<int>(e_.nodes_.size()) - 1;
}
Expression ExprBuilder::finish(int root) {
    e_.root_ = root;
    return std::move(e_);
}

} // namespace trudinger

// Small arithmetic expression language for boundary/initial data functions.
// Variables x1..xn and t; operators + - * / ^ (right-assoc ^), unary minus;
// functions sin cos exp log sqrt abs min max. Parse errors carry byte offsets.

#ifndef TRUDINGER_EXPRESSION_HPP
#define TRUDINGER_EXPRESSION_HPP

#include <span>
#include <string>
#include <vector>

#include "trudinger/errors.hpp"

namespace trudinger {

class ParseError : public InvalidInput {
public:
    ParseError(const std::string& what, std::size_t offset)
        : InvalidInput(what + " (at byte " + std::to_string(offset) + ")"), offset(offset) {}
    std::size_t offset;
};

class Expression {
public:
    enum class Op {
        number, var_x, var_t, neg,
        add, sub, mul, div, pow,
        sin, cos, exp, log, sqrt, abs, // unary functions
        min, max                        // binary functions
    };

    struct Node {
        Op op;
        double value = 0.0; // number payload
        int var = 0;        // 0-based x index for var_x
        int a = -1, b = -1; // child node ids
    };

    double eval(std::span<const double> x, double t) const;
    std::string print() const;
    bool same_tree(const Expression& other) const;
    int dim() const { return dim_; }

    // Total number of nodes; used by generators in tests.
    std::size_t size() const { return nodes_.size(); }

private:
    friend Expression parse_expression(const std::string& text, int dim);
    friend class ExprBuilder;

    std::vector<Node> nodes_;
    int root_ = -1;
    int dim_ = 0;

    double eval_node(int id, std::span<const double> x, double t) const;
    void print_node(int id, int parent_prec, bool rhs, std::string& out) const;
    bool same_node(int id, const Expression& o, int oid) const;
};

// Parses `text` over variables x1..x`dim` and t. Throws ParseError on syntax
// errors or unknown identifiers.
Expression parse_expression(const std::string& text, int dim);

// Programmatic construction, used by test generators.
class ExprBuilder {
public:
    explicit ExprBuilder(int dim) { e_.dim_ = dim; }
    int number(double v);
    int var_x(int i);
    int var_t();
    int unary(Expression::Op op, int a);
    int binary(Expression::Op op, int a, int b);
    Expression finish(int root);

private:
    Expression e_;
};

} // namespace trudinger

#endif

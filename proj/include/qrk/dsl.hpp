/// @file dsl.hpp
/// @brief Expression language for q-series terms: parser, renderer, evaluator.
#ifndef QRK_DSL_HPP
#define QRK_DSL_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrk/xseries.hpp"

namespace qrk::dsl {

/// Syntax error with the byte position and the expected-token set.
class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t position, const std::string& expected);
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

/// Evaluation failure (division by a non-unit series, non-integer index,
/// non-convergent formal sum, ...).
class eval_error : public std::runtime_error {
public:
    explicit eval_error(const std::string& what) : std::runtime_error(what) {}
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Abstract syntax tree node. Binary nodes hold two args; calls hold their
/// arguments; sum/prod hold {lo, hi, body} with `name` the bound variable
/// (hi is absent when the upper bound is `inf`).
struct Expr {
    enum class Kind {
        integer,
        var_x,
        var_q,
        var_ref,
        neg,
        add,
        sub,
        mul,
        div,
        pow,
        call,
        sum,
        prod,
    };
    Kind kind;
    BigInt value;
    std::string name;
    std::vector<ExprPtr> args;
    bool inf_bound = false;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' factor)?
///   atom   := integer | 'x' | 'q' | name '(' args ')' | name | '(' expr ')'
/// where sum(v, lo, hi|inf, body) and prod(v, lo, hi|inf, body) bind v over
/// their body and other calls are the q-kit functions. Exponents and bounds
/// must evaluate to integers at expansion time.
ExprPtr parse(const std::string& text);

/// Canonical parenthesized rendering; re-parsing yields an equal AST.
std::string render(const ExprPtr& e);

bool equal(const ExprPtr& a, const ExprPtr& b);

/// Evaluates to an order-T series. Pure-q expressions land in the constant
/// coefficient. Infinite bounds expand adaptively under the
/// strictly-increasing-valuation contract, capped at 10*max(T, q_order)
/// iterations.
XSeries eval_series(const ExprPtr& e, int order, long q_order);

}  // namespace qrk::dsl

#endif

#include "qrk/dsl.hpp"

#include <map>
#include <sstream>

#include "qrk/qkit.hpp"

namespace qrk::dsl {

parse_error::parse_error(std::size_t position, const std::string& expected)
    : std::runtime_error("syntax error at position " + std::to_string(position) + ": expected " +
                         expected),
      position_(position),
      expected_(expected) {}

namespace {

struct Token {
    enum class Kind { integer, ident, punct, end };
    Kind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Kind::integer, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Kind::ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::string("+-*/^(),").find(c) != std::string::npos) {
            out.push_back({Token::Kind::punct, std::string(1, c), i});
            ++i;
            continue;
        }
        throw parse_error(i, "a valid token (got '" + std::string(1, c) + "')");
    }
    out.push_back({Token::Kind::end, "", s.size()});
    return out;
}

std::shared_ptr<Expr> make(Expr::Kind k) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    return e;
}

ExprPtr make_binary(Expr::Kind k, ExprPtr a, ExprPtr b) {
    auto e = std::make_shared<Expr>();
    e->kind = k;
    e->args = {std::move(a), std::move(b)};
    return e;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(lex(text)) {}

    ExprPtr parse_all() {
        ExprPtr e = parse_expr();
        if (peek().kind != Token::Kind::end) throw parse_error(peek().pos, "end of input");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }
    bool at_punct(const std::string& p) const {
        return peek().kind == Token::Kind::punct && peek().text == p;
    }
    void expect_punct(const std::string& p, const std::string& expected) {
        if (!at_punct(p)) throw parse_error(peek().pos, expected);
        ++pos_;
    }

    ExprPtr parse_expr() {
        ExprPtr e = parse_term();
        while (at_punct("+") || at_punct("-")) {
            const bool plus = advance().text == "+";
            e = make_binary(plus ? Expr::Kind::add : Expr::Kind::sub, e, parse_term());
        }
        return e;
    }

    ExprPtr parse_term() {
        ExprPtr e = parse_factor();
        while (at_punct("*") || at_punct("/")) {
            const bool mul = advance().text == "*";
            e = make_binary(mul ? Expr::Kind::mul : Expr::Kind::div, e, parse_factor());
        }
        return e;
    }

    // '^' binds tighter than unary minus: -x^2 parses as -(x^2).
    ExprPtr parse_factor() {
        if (at_punct("-")) {
            ++pos_;
            auto e = make(Expr::Kind::neg);
            e->args = {parse_factor()};
            return e;
        }
        ExprPtr base = parse_atom();
        if (at_punct("^")) {
            ++pos_;
            return make_binary(Expr::Kind::pow, base, parse_factor());
        }
        return base;
    }

    ExprPtr parse_atom() {
        const Token& t = peek();
        if (t.kind == Token::Kind::integer) {
            ++pos_;
            auto e = make(Expr::Kind::integer);
            e->value = BigInt(t.text);
            return e;
        }
        if (t.kind == Token::Kind::ident) {
            ++pos_;
            if (at_punct("(")) {
                ++pos_;
                if (t.text == "sum" || t.text == "prod") return parse_bound(t.text);
                auto e = make(Expr::Kind::call);
                e->name = t.text;
                if (!at_punct(")")) {
                    e->args.push_back(parse_expr());
                    while (at_punct(",")) {
                        ++pos_;
                        e->args.push_back(parse_expr());
                    }
                }
                expect_punct(")", "',' or ')'");
                return e;
            }
            if (t.text == "x") return make(Expr::Kind::var_x);
            if (t.text == "q") return make(Expr::Kind::var_q);
            auto e = make(Expr::Kind::var_ref);
            e->name = t.text;
            return e;
        }
        if (at_punct("(")) {
            ++pos_;
            ExprPtr e = parse_expr();
            expect_punct(")", "')'");
            return e;
        }
        throw parse_error(t.pos, "an expression");
    }

    // sum(v, lo, hi|inf, body) with the opening paren already consumed.
    ExprPtr parse_bound(const std::string& which) {
        const Token& v = peek();
        if (v.kind != Token::Kind::ident)
            throw parse_error(v.pos, "a bound variable name");
        ++pos_;
        expect_punct(",", "','");
        ExprPtr lo = parse_expr();
        expect_punct(",", "','");
        auto e = make(which == "sum" ? Expr::Kind::sum : Expr::Kind::prod);
        e->name = v.text;
        if (peek().kind == Token::Kind::ident && peek().text == "inf") {
            ++pos_;
            e->inf_bound = true;
            expect_punct(",", "','");
            e->args = {std::move(lo), parse_expr()};
        } else {
            ExprPtr hi = parse_expr();
            expect_punct(",", "','");
            e->args = {std::move(lo), std::move(hi), parse_expr()};
        }
        expect_punct(")", "')'");
        return e;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(const std::string& text) {
    return Parser(text).parse_all();
}

std::string render(const ExprPtr& e) {
    switch (e->kind) {
        case Expr::Kind::integer:
            return e->value.get_str();
        case Expr::Kind::var_x:
            return "x";
        case Expr::Kind::var_q:
            return "q";
        case Expr::Kind::var_ref:
            return e->name;
        case Expr::Kind::neg:
            return "(-" + render(e->args[0]) + ")";
        case Expr::Kind::add:
            return "(" + render(e->args[0]) + " + " + render(e->args[1]) + ")";
        case Expr::Kind::sub:
            return "(" + render(e->args[0]) + " - " + render(e->args[1]) + ")";
        case Expr::Kind::mul:
            return "(" + render(e->args[0]) + " * " + render(e->args[1]) + ")";
        case Expr::Kind::div:
            return "(" + render(e->args[0]) + " / " + render(e->args[1]) + ")";
        case Expr::Kind::pow:
            return "(" + render(e->args[0]) + "^" + render(e->args[1]) + ")";
        case Expr::Kind::call: {
            std::string s = e->name + "(";
            for (std::size_t i = 0; i < e->args.size(); ++i) {
                if (i) s += ", ";
                s += render(e->args[i]);
            }
            return s + ")";
        }
        case Expr::Kind::sum:
        case Expr::Kind::prod: {
            const std::string head = e->kind == Expr::Kind::sum ? "sum(" : "prod(";
            if (e->inf_bound)
                return head + e->name + ", " + render(e->args[0]) + ", inf, " +
                       render(e->args[1]) + ")";
            return head + e->name + ", " + render(e->args[0]) + ", " + render(e->args[1]) +
                   ", " + render(e->args[2]) + ")";
        }
    }
    throw std::logic_error("render: unreachable");
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
    if (a->kind != b->kind || a->name != b->name || a->inf_bound != b->inf_bound ||
        a->value != b->value || a->args.size() != b->args.size())
        return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!equal(a->args[i], b->args[i])) return false;
    return true;
}

namespace {

using Env = std::map<std::string, long>;

struct Evaluator {
    int T;
    long q_order;
    long cap;

    BigRat eval_int_expr(const ExprPtr& e, const Env& env) const {
        switch (e->kind) {
            case Expr::Kind::integer:
                return BigRat(e->value);
            case Expr::Kind::var_ref: {
                auto it = env.find(e->name);
                if (it == env.end()) throw eval_error("unknown variable '" + e->name + "'");
                return BigRat(it->second);
            }
            case Expr::Kind::neg:
                return -eval_int_expr(e->args[0], env);
            case Expr::Kind::add:
                return eval_int_expr(e->args[0], env) + eval_int_expr(e->args[1], env);
            case Expr::Kind::sub:
                return eval_int_expr(e->args[0], env) - eval_int_expr(e->args[1], env);
            case Expr::Kind::mul:
                return eval_int_expr(e->args[0], env) * eval_int_expr(e->args[1], env);
            case Expr::Kind::div: {
                const BigRat d = eval_int_expr(e->args[1], env);
                if (d.is_zero()) throw eval_error("division by zero in an index expression");
                return eval_int_expr(e->args[0], env) / d;
            }
            case Expr::Kind::pow: {
                const BigRat b = eval_int_expr(e->args[0], env);
                return BigRat::pow(b, to_long(eval_int_expr(e->args[1], env)));
            }
            default:
                throw eval_error("index expressions must be built from integers");
        }
    }

    static long to_long(const BigRat& r) {
        if (!r.is_integer()) throw eval_error("index expression is not an integer: " + r.str());
        if (!r.num().fits_slong_p()) throw eval_error("index expression out of range");
        return r.num().get_si();
    }

    long eval_index(const ExprPtr& e, const Env& env) const {
        return to_long(eval_int_expr(e, env));
    }

    // The constant coefficient of a series with no x-dependence.
    QRat pure_q(const XSeries& s, const std::string& what) const {
        if (!s.is_constant_in_x())
            throw eval_error(what + " must not depend on x");
        return s.at(0);
    }

    XSeries constant(const QRat& c) const { return XSeries::constant(c, T); }

    XSeries eval(const ExprPtr& e, const Env& env) const {
        switch (e->kind) {
            case Expr::Kind::integer:
                return constant(QRat(BigRat(e->value)));
            case Expr::Kind::var_x:
                return XSeries::variable(T);
            case Expr::Kind::var_q:
                return constant(QRat::var_power(1));
            case Expr::Kind::var_ref: {
                auto it = env.find(e->name);
                if (it == env.end()) throw eval_error("unknown variable '" + e->name + "'");
                return constant(QRat(it->second));
            }
            case Expr::Kind::neg:
                return -eval(e->args[0], env);
            case Expr::Kind::add:
                return eval(e->args[0], env) + eval(e->args[1], env);
            case Expr::Kind::sub:
                return eval(e->args[0], env) - eval(e->args[1], env);
            case Expr::Kind::mul:
                return eval(e->args[0], env) * eval(e->args[1], env);
            case Expr::Kind::div: {
                const XSeries num = eval(e->args[0], env);
                const XSeries den = eval(e->args[1], env);
                if (den.is_constant_in_x()) {
                    if (den.at(0).is_zero()) throw eval_error("division by zero");
                    return num.scaled(den.at(0).inverse());
                }
                if (den.at(0).is_zero())
                    throw eval_error("division by a series with zero constant term");
                return num * series_recip(den);
            }
            case Expr::Kind::pow: {
                const long k = eval_index(e->args[1], env);
                const XSeries base = eval(e->args[0], env);
                if (base.is_constant_in_x()) {
                    const QRat c = base.at(0);
                    if (c.is_zero() && k < 0) throw eval_error("zero raised to a negative power");
                    return constant(c.is_zero() && k > 0 ? QRat() : c.pow(k));
                }
                if (k >= 0) return series_pow(base, k);
                if (base.at(0).is_zero())
                    throw eval_error("division by a series with zero constant term");
                return series_pow(series_recip(base), -k);
            }
            case Expr::Kind::call:
                return eval_call(e, env);
            case Expr::Kind::sum:
            case Expr::Kind::prod:
                return eval_bound(e, env);
        }
        throw std::logic_error("eval: unreachable");
    }

    XSeries eval_call(const ExprPtr& e, const Env& env) const {
        const std::string& f = e->name;
        const auto arity = [&](std::size_t lo, std::size_t hi) {
            if (e->args.size() < lo || e->args.size() > hi)
                throw eval_error("wrong number of arguments to " + f);
        };
        if (f == "qnum") {
            arity(1, 2);
            const long n = eval_index(e->args[0], env);
            const long r = e->args.size() == 2 ? eval_index(e->args[1], env) : 1;
            return constant(QRat(q_int(n, r)));
        }
        if (f == "qfact") {
            arity(1, 1);
            return constant(QRat(q_factorial(eval_index(e->args[0], env))));
        }
        if (f == "qbinom") {
            arity(2, 2);
            return constant(q_binomial(eval_index(e->args[0], env), eval_index(e->args[1], env)));
        }
        if (f == "qpoch") {
            arity(3, 3);
            const QRat a = pure_q(eval(e->args[0], env), "qpoch argument");
            const QRat b = pure_q(eval(e->args[1], env), "qpoch argument");
            return constant(poch(a, b, eval_index(e->args[2], env)));
        }
        if (f == "qshift") {
            arity(3, 3);
            const QRat u = pure_q(eval(e->args[0], env), "qshift argument");
            const QRat w = pure_q(eval(e->args[1], env), "qshift argument");
            return constant(shifted_pow(u, w, eval_index(e->args[2], env)));
        }
        if (f == "qpow") {
            arity(2, 2);
            return constant(
                QRat(quantum_pow(eval_index(e->args[0], env), eval_index(e->args[1], env))));
        }
        if (f == "log") {
            arity(1, 1);
            return series_log(eval(e->args[0], env));
        }
        if (f == "qlog") {
            arity(1, 1);
            return series_qlog(eval(e->args[0], env));
        }
        if (f == "qderiv") {
            arity(1, 1);
            return q_derivative(eval(e->args[0], env));
        }
        if (f == "subqx") {
            arity(1, 1);
            return subst_qx(eval(e->args[0], env));
        }
        throw eval_error("unknown function '" + f + "'");
    }

    XSeries eval_bound(const ExprPtr& e, const Env& env) const {
        const bool is_sum = e->kind == Expr::Kind::sum;
        const long lo = eval_index(e->args[0], env);
        Env inner = env;
        if (!e->inf_bound) {
            const long hi = eval_index(e->args[1], env);
            XSeries acc = is_sum ? XSeries(T) : XSeries::constant(QRat(1), T);
            for (long k = lo; k <= hi; ++k) {
                inner[e->name] = k;
                const XSeries v = eval(e->args[2], inner);
                acc = is_sum ? acc + v : acc * v;
            }
            return acc;
        }
        // Adaptive expansion: include a term while its valuation (x-order, or
        // q-valuation for x-free terms) stays within the truncation, require
        // the valuation to strictly increase, and cap the iteration count.
        XSeries acc = is_sum ? XSeries(T) : XSeries::constant(QRat(1), T);
        std::optional<long> prev;
        long iterations = 0;
        for (long k = lo;; ++k) {
            if (++iterations > cap)
                throw eval_error("infinite " + std::string(is_sum ? "sum" : "product") +
                                 " did not pass the truncation order within " +
                                 std::to_string(cap) + " terms");
            inner[e->name] = k;
            const XSeries v = eval(e->args[1], inner);
            const XSeries delta = is_sum ? v : v - XSeries::constant(QRat(1), T);
            long val;
            long bound;
            if (delta.is_constant_in_x()) {
                if (delta.at(0).is_zero()) break;  // vanishing tail
                val = delta.at(0).valuation();
                bound = q_order;
            } else {
                val = *delta.valuation();
                bound = T;
            }
            if (val > bound) break;
            if (prev && val <= *prev)
                throw eval_error("non-increasing valuation in an infinite " +
                                 std::string(is_sum ? "sum" : "product"));
            prev = val;
            acc = is_sum ? acc + v : acc * v;
        }
        return acc;
    }
};

}  // namespace

XSeries eval_series(const ExprPtr& e, int order, long q_order) {
    if (order < 0) throw std::invalid_argument("eval_series: negative order");
    Evaluator ev{order, q_order, 10 * std::max<long>(order, std::max<long>(q_order, 1))};
    return ev.eval(e, {});
}

}  // namespace qrk::dsl

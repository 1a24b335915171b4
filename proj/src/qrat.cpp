#include "qrk/qrat.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

namespace qrk {

namespace {

// Dense integer coefficient run, exponents 0..deg, last entry nonzero.
using IntPoly = std::vector<BigInt>;

void strip(IntPoly& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

BigInt content(const IntPoly& v) {
    BigInt g(0);
    for (const auto& c : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void divide_by(IntPoly& v, const BigInt& d) {
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

void make_primitive(IntPoly& v) {
    strip(v);
    if (v.empty()) return;
    BigInt g = content(v);
    if (sgn(v.back()) < 0) g = -g;
    if (g != 1) divide_by(v, g);
}

// Pseudo-remainder of a by b (b nonzero, deg a >= deg b); content is
// irrelevant to the gcd, so no d^e normalization.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    const BigInt& lb = b.back();
    while (a.size() > db) {
        const BigInt la = a.back();
        const std::size_t k = a.size() - 1 - db;
        for (std::size_t j = 0; j + 1 < a.size(); ++j) a[j] *= lb;
        for (std::size_t j = 0; j < db; ++j) a[k + j] -= la * b[j];
        a.pop_back();
        strip(a);
        if (a.empty()) break;
    }
    return a;
}

// Primitive PRS gcd over the integers.
IntPoly int_gcd(IntPoly a, IntPoly b) {
    make_primitive(a);
    make_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = pseudo_rem(std::move(a), b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Shift-to-zero integer content extraction: p = (num/den) * q^shift * P with P
// primitive and positive leading coefficient.
struct IntForm {
    IntPoly poly;
    BigInt num_scale{1}, den_scale{1};
    long shift = 0;
};

IntForm to_int_form(const QLaurent& p) {
    IntForm f;
    if (p.is_zero()) return f;
    f.shift = p.min_exp();
    BigInt den_lcm(1);
    for (long e = p.min_exp(); e <= p.degree(); ++e) {
        const BigInt d = p.coeff(e).den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    f.poly.reserve(static_cast<std::size_t>(p.degree() - p.min_exp() + 1));
    for (long e = p.min_exp(); e <= p.degree(); ++e) {
        const BigRat& c = p.coeff(e);
        f.poly.push_back(c.num() * (den_lcm / c.den()));
    }
    BigInt g = content(f.poly);
    if (sgn(f.poly.back()) < 0) g = -g;
    divide_by(f.poly, g);
    f.num_scale = g;
    f.den_scale = den_lcm;
    return f;
}

QLaurent from_int_poly(const IntPoly& v, char var, long shift = 0) {
    std::vector<BigRat> cs;
    cs.reserve(v.size());
    for (const auto& c : v) cs.emplace_back(c);
    return QLaurent::from_coeffs(shift, std::move(cs), var);
}

// Exact quotient p / g where g is a plain-polynomial divisor known to divide
// the shifted-to-zero part of p.
QLaurent divide_exact(const QLaurent& p, const QLaurent& g) {
    if (p.is_zero()) return p;
    const long v = p.min_exp();
    auto [quot, rem] = poly_divmod(p.shifted(-v), g);
    if (!rem.is_zero()) throw std::logic_error("QRat: internal exact division left a remainder");
    return quot.shifted(v);
}

}  // namespace

std::pair<QLaurent, QLaurent> poly_divmod(const QLaurent& a, const QLaurent& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: zero divisor");
    if (a.min_exp() < 0 || b.min_exp() < 0)
        throw std::invalid_argument("poly_divmod: inputs must be plain polynomials");
    const char var = QLaurent::joint_var(a, b);
    const long da = a.degree(), db = b.degree();
    if (a.is_zero() || da < db) return {QLaurent(var), a};
    std::vector<BigRat> rem(static_cast<std::size_t>(da + 1));
    for (long e = 0; e <= da; ++e) rem[static_cast<std::size_t>(e)] = a.coeff(e);
    std::vector<BigRat> quot(static_cast<std::size_t>(da - db + 1));
    const BigRat lb_inv = b.leading_coeff().inverse();
    for (long k = da - db; k >= 0; --k) {
        BigRat c = rem[static_cast<std::size_t>(k + db)] * lb_inv;
        if (c.is_zero()) continue;
        quot[static_cast<std::size_t>(k)] = c;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * b.coeff(j);
    }
    return {QLaurent::from_coeffs(0, std::move(quot), var),
            QLaurent::from_coeffs(0, std::move(rem), var)};
}

QLaurent poly_gcd(const QLaurent& a, const QLaurent& b) {
    const char var = QLaurent::joint_var(a, b);
    if (a.is_zero() && b.is_zero()) return QLaurent(var);
    IntPoly g = int_gcd(to_int_form(a).poly, to_int_form(b).poly);
    return from_int_poly(g, var);
}

QLaurent poly_exact_div(const QLaurent& a, const QLaurent& b) {
    if (b.is_zero()) throw std::domain_error("poly_exact_div: zero divisor");
    if (a.is_zero()) return QLaurent(QLaurent::joint_var(a, b));
    const long va = a.min_exp(), vb = b.min_exp();
    auto [quot, rem] = poly_divmod(a.shifted(-va), b.shifted(-vb));
    if (!rem.is_zero()) {
        const QLaurent witness = rem.shifted(va);
        throw exact_division_error("poly_exact_div: nonzero remainder " + witness.str(), witness);
    }
    return quot.shifted(va - vb);
}

BigRat eval_at(const QLaurent& a, const BigRat& v) {
    return a.eval(v);
}

QRat QRat::make_scaled(QLaurent n, QLaurent d) {
    // n/d already coprime; normalize d to a primitive integer polynomial with
    // positive leading coefficient, folding the scale into n.
    const char var = QLaurent::joint_var(n, d);
    IntForm f = to_int_form(d);
    QLaurent den = from_int_poly(f.poly, var);
    // d = (num_scale/den_scale) * q^shift * den
    const BigRat scale(f.den_scale, f.num_scale);
    QRat r = QRat::zero(var);
    r.num_ = n.scaled(scale).shifted(-f.shift);
    r.den_ = den;
    return r;
}

QRat QRat::normalized(const QLaurent& n, const QLaurent& d) {
    if (d.is_zero()) throw std::domain_error("QRat: zero denominator");
    const char var = QLaurent::joint_var(n, d);
    if (n.is_zero()) return QRat::zero(var);
    const long vn = n.min_exp(), vd = d.min_exp();
    QLaurent N = n.shifted(-vn), D = d.shifted(-vd);
    const QLaurent g = poly_gcd(N, D);
    if (!g.is_constant()) {
        N = divide_exact(N, g);
        D = divide_exact(D, g);
    }
    return make_scaled(N.shifted(vn - vd), D);
}

QRat qrat_normalize(const QLaurent& n, const QLaurent& d) {
    return QRat::normalized(n, d);
}

QRat QRat::var_power(long e, char var) {
    QRat r = QRat::zero(var);
    r.num_ = QLaurent::monomial(BigRat(1), e, var);
    return r;
}

QRat QRat::operator-() const {
    QRat r(*this);
    r.num_ = -r.num_;
    return r;
}

QRat operator+(const QRat& a, const QRat& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_one() && b.den_.is_one()) {
        QRat r(a.num_ + b.num_);
        return r;
    }
    const QLaurent g = poly_gcd(a.den_, b.den_);
    if (g.is_constant()) {
        return QRat::make_scaled(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    const QLaurent d1p = divide_exact(a.den_, g);
    const QLaurent d2p = divide_exact(b.den_, g);
    QLaurent n0 = a.num_ * d2p + b.num_ * d1p;
    if (n0.is_zero()) return QRat::zero(QLaurent::joint_var(a.num_, b.num_));
    QLaurent d0 = a.den_ * d2p;
    // Residual common factors can only come from g.
    const QLaurent h = poly_gcd(n0, g);
    if (!h.is_constant()) {
        n0 = divide_exact(n0, h);
        d0 = divide_exact(d0, h);
    }
    return QRat::make_scaled(n0, d0);
}

QRat operator*(const QRat& a, const QRat& b) {
    if (a.is_zero() || b.is_zero()) return QRat::zero(QLaurent::joint_var(a.num_, b.num_));
    if (a.den_.is_one() && b.den_.is_one()) return QRat(a.num_ * b.num_);
    QLaurent n1 = a.num_, d2 = b.den_;
    if (!d2.is_one()) {
        const QLaurent g1 = poly_gcd(n1, d2);
        if (!g1.is_constant()) {
            n1 = divide_exact(n1, g1);
            d2 = divide_exact(d2, g1);
        }
    }
    QLaurent n2 = b.num_, d1 = a.den_;
    if (!d1.is_one()) {
        const QLaurent g2 = poly_gcd(n2, d1);
        if (!g2.is_constant()) {
            n2 = divide_exact(n2, g2);
            d1 = divide_exact(d1, g2);
        }
    }
    return QRat::make_scaled(n1 * n2, d1 * d2);
}

QRat QRat::inverse() const {
    if (is_zero()) throw std::domain_error("QRat: inverse of zero");
    return make_scaled(den_, num_);
}

QRat operator/(const QRat& a, const QRat& b) {
    return a * b.inverse();
}

QRat QRat::pow(long e) const {
    if (e == 0) return QRat(BigRat(1), var());
    QRat base = e < 0 ? inverse() : *this;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    QRat acc(BigRat(1), var());
    while (k > 0) {
        if (k & 1) acc *= base;
        base = (k >>= 1) ? base * base : base;
    }
    return acc;
}

QRat QRat::subst_pow(long r) const {
    return normalized(num_.subst_pow(r), den_.subst_pow(r));
}

BigRat QRat::eval(const BigRat& v) const {
    const BigRat d = den_.eval(v);
    if (d.is_zero()) throw std::domain_error("QRat: evaluation at a pole");
    return num_.eval(v) / d;
}

bool operator==(const QRat& a, const QRat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::string QRat::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    os << '(' << num_.str() << ")/(" << den_.str() << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QRat& r) {
    return os << r.str();
}

}  // namespace qrk

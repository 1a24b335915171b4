#include "qrk/xseries.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "qrk/qkit.hpp"

namespace qrk {

XSeries::XSeries(int order) {
    if (order < 0) throw std::invalid_argument("XSeries: negative order");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, QRat());
}

XSeries XSeries::constant(const QRat& c, int order) {
    XSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

XSeries XSeries::variable(int order) {
    XSeries s(order);
    if (order < 1) throw std::invalid_argument("XSeries: order too small to hold x");
    s.coeffs_[1] = QRat(1);
    return s;
}

const QRat& XSeries::at(int n) const {
    if (n < 0 || n > order())
        throw std::out_of_range("XSeries: coefficient index " + std::to_string(n) +
                                " outside order " + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(n)];
}

void XSeries::set(int n, const QRat& c) {
    if (n < 0 || n > order())
        throw std::out_of_range("XSeries: coefficient index " + std::to_string(n) +
                                " outside order " + std::to_string(order()));
    coeffs_[static_cast<std::size_t>(n)] = c;
}

std::optional<int> XSeries::valuation() const {
    for (int n = 0; n <= order(); ++n)
        if (!coeffs_[static_cast<std::size_t>(n)].is_zero()) return n;
    return std::nullopt;
}

XSeries XSeries::operator-() const {
    XSeries r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

XSeries operator+(const XSeries& a, const XSeries& b) {
    XSeries r(std::min(a.order(), b.order()));
    for (int n = 0; n <= r.order(); ++n) r.set(n, a.at(n) + b.at(n));
    return r;
}

XSeries operator-(const XSeries& a, const XSeries& b) {
    XSeries r(std::min(a.order(), b.order()));
    for (int n = 0; n <= r.order(); ++n) r.set(n, a.at(n) - b.at(n));
    return r;
}

XSeries operator*(const XSeries& a, const XSeries& b) {
    XSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
        if (a.at(i).is_zero()) continue;
        for (int j = 0; i + j <= r.order(); ++j) {
            if (b.at(j).is_zero()) continue;
            r.set(i + j, r.at(i + j) + a.at(i) * b.at(j));
        }
    }
    return r;
}

XSeries series_mul(const XSeries& a, const XSeries& b) {
    return a * b;
}

XSeries XSeries::scaled(const QRat& c) const {
    XSeries r(order());
    if (c.is_zero()) return r;
    for (int n = 0; n <= order(); ++n)
        if (!at(n).is_zero()) r.set(n, at(n) * c);
    return r;
}

XSeries XSeries::shifted_x(long k) const {
    if (k < 0) throw std::invalid_argument("XSeries: negative x-shift");
    XSeries r(order());
    for (int n = 0; n + static_cast<int>(k) <= order(); ++n)
        r.set(n + static_cast<int>(k), at(n));
    return r;
}

XSeries XSeries::truncated(int order) const {
    if (order > this->order())
        throw std::out_of_range("XSeries: cannot extend a series by truncation");
    XSeries r(order);
    for (int n = 0; n <= order; ++n) r.set(n, at(n));
    return r;
}

std::vector<BigRat> XSeries::eval_q(const BigRat& v) const {
    std::vector<BigRat> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.eval(v));
    return out;
}

bool XSeries::is_constant_in_x() const {
    for (int n = 1; n <= order(); ++n)
        if (!at(n).is_zero()) return false;
    return true;
}

bool operator==(const XSeries& a, const XSeries& b) {
    if (a.order() != b.order()) return false;
    return a.coeffs_ == b.coeffs_;
}

std::string XSeries::str(char xname) const {
    if (is_constant_in_x()) return at(0).str();
    std::ostringstream os;
    bool first = true;
    for (int n = 0; n <= order(); ++n) {
        const QRat& c = at(n);
        if (c.is_zero()) continue;
        std::string cs;
        bool neg = false;
        if (c.is_poly() && c.num().is_constant()) {
            BigRat v = c.num().constant_term();
            neg = v.sign() < 0;
            cs = v.abs().str();
        } else {
            cs = "(" + c.str() + ")";
        }
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (n == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << '*';
            os << xname;
            if (n != 1) os << '^' << n;
        }
    }
    if (first) return "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const XSeries& s) {
    return os << s.str();
}

XSeries series_recip(const XSeries& a) {
    if (a.at(0).is_zero())
        throw std::domain_error("series_recip: zero constant term");
    const int T = a.order();
    XSeries b(T);
    const QRat c0 = a.at(0).inverse();
    b.set(0, c0);
    for (int n = 1; n <= T; ++n) {
        QRat s;
        for (int j = 1; j <= n; ++j) {
            if (a.at(j).is_zero()) continue;
            s += a.at(j) * b.at(n - j);
        }
        b.set(n, -(s * c0));
    }
    return b;
}

XSeries series_log(const XSeries& a) {
    if (!a.at(0).is_one())
        throw std::domain_error("series_log: constant term must be 1");
    const int T = a.order();
    XSeries u = a - XSeries::constant(QRat(1), T);
    XSeries acc(T), upow = u;
    for (long k = 1; k <= T; ++k) {
        acc += upow.scaled(QRat(BigRat((k % 2 == 1) ? 1 : -1, k)));
        if (k < T) upow *= u;
    }
    return acc;
}

XSeries series_qlog(const XSeries& z) {
    if (!z.at(0).is_zero())
        throw std::domain_error("series_qlog: constant term must be 0");
    const int T = z.order();
    XSeries acc(T), zpow = z;
    for (long k = 0; k < T; ++k) {
        // (-1)^k z^{k+1} / [k+1]
        QRat c = QRat(q_int(k + 1)).inverse();
        if (k % 2 == 1) c = -c;
        acc += zpow.scaled(c);
        if (k + 1 < T) zpow *= z;
    }
    return acc;
}

XSeries q_derivative(const XSeries& a) {
    if (a.order() < 1)
        throw std::invalid_argument("q_derivative: series order must be at least 1");
    XSeries r(a.order() - 1);
    for (int n = 1; n <= a.order(); ++n) {
        if (a.at(n).is_zero()) continue;
        r.set(n - 1, a.at(n) * QRat(q_int(n)));
    }
    return r;
}

XSeries jackson_integral(const XSeries& a) {
    XSeries r(a.order() + 1);
    for (int n = 0; n <= a.order(); ++n) {
        if (a.at(n).is_zero()) continue;
        r.set(n + 1, a.at(n) / QRat(q_int(n + 1)));
    }
    return r;
}

XSeries subst_qx(const XSeries& a, long power) {
    XSeries r(a.order());
    for (int n = 0; n <= a.order(); ++n) {
        if (a.at(n).is_zero()) continue;
        r.set(n, a.at(n) * QRat::var_power(power * n));
    }
    return r;
}

namespace {

// In-place multiply by (1 - c x^k), truncated to the series order.
void mul_one_minus_cxk(XSeries& s, const QRat& c, long k) {
    for (int n = s.order(); n >= static_cast<int>(k); --n) {
        const QRat& low = s.at(n - static_cast<int>(k));
        if (!low.is_zero()) s.set(n, s.at(n) - c * low);
    }
}

}  // namespace

XSeries product_expand(const std::map<long, long>& exponents, int T) {
    XSeries pos = XSeries::constant(QRat(1), T);
    XSeries neg = XSeries::constant(QRat(1), T);
    bool has_neg = false;
    for (const auto& [k, e] : exponents) {
        if (k <= 0) throw std::invalid_argument("product_expand: factor index must be positive");
        if (e == 0 || k > T) continue;
        XSeries& target = e > 0 ? pos : neg;
        for (long i = 0; i < std::labs(e); ++i) mul_one_minus_cxk(target, QRat(1), k);
        has_neg = has_neg || e < 0;
    }
    return has_neg ? pos * series_recip(neg) : pos;
}

XSeries shifted_x_product(const QRat& alpha, long count, int T) {
    if (count < 0) throw std::invalid_argument("shifted_x_product: negative factor count");
    XSeries s = XSeries::constant(QRat(1), T);
    QRat c = alpha;
    for (long i = 0; i < count; ++i) {
        mul_one_minus_cxk(s, c, 1);
        c *= QRat::var_power(1);
    }
    return s;
}

XSeries series_pow(const XSeries& a, long e) {
    if (e < 0) throw std::invalid_argument("series_pow: negative exponent");
    XSeries acc = XSeries::constant(QRat(1), a.order());
    XSeries base = a;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1) acc *= base;
        if (k >>= 1) base *= base;
    }
    return acc;
}

QRat poly_eval(const XSeries& p, const QRat& t) {
    QRat acc;
    for (int n = p.order(); n >= 0; --n) acc = acc * t + p.at(n);
    return acc;
}

QLaurent jackson_sum_01(const XSeries& numer, const XSeries& denom, long base_power,
                        long q_order) {
    if (base_power < 1)
        throw std::invalid_argument("jackson_sum_01: base power must be positive");
    QLaurent acc('q');
    const QLaurent one_minus_q = QLaurent(1, 'q') - QLaurent::monomial(BigRat(1), 1, 'q');
    for (long j = 0; j <= q_order; ++j) {
        const QRat t = QRat::var_power(j);
        const QRat den_j = poly_eval(denom, t);
        if (den_j.is_zero() || den_j.valuation() != 0)
            throw std::domain_error("jackson_sum_01: non-unit denominator at step " +
                                    std::to_string(j));
        const QRat num_j = poly_eval(numer, t);
        if (num_j.is_zero()) continue;
        if (num_j.valuation() < 0)
            throw std::domain_error("jackson_sum_01: numerator is not a power series");
        // term_j = Q^j num(Q^j)/den(Q^j) = Q^j (nn dd)/(nd dn); nd and dn are
        // units at 0, so the expansion exists and the term valuation is >= j.
        const QLaurent top = trunc_mul(num_j.num().shifted(j), den_j.den(), q_order);
        const QLaurent bottom = trunc_mul(num_j.den(), den_j.num(), q_order);
        acc += trunc_mul(top, trunc_recip(bottom, q_order), q_order);
    }
    return trunc_mul(one_minus_q, acc, q_order);
}

}  // namespace qrk

/// @file xseries.hpp
/// @brief Truncated formal power series in x over QRat, with q-calculus
/// operators.
#ifndef QRK_XSERIES_HPP
#define QRK_XSERIES_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrk/qrat.hpp"

namespace qrk {

/// Power series known exactly up to x^order. Storage is exactly order+1
/// coefficients; reading past the order throws rather than returning zero.
/// Arithmetic results carry order min(T_a, T_b).
class XSeries {
public:
    explicit XSeries(int order);
    static XSeries constant(const QRat& c, int order);
    static XSeries variable(int order);  // the series x

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const QRat& at(int n) const;
    void set(int n, const QRat& c);

    /// Index of the first nonzero coefficient, or nullopt when the series is
    /// zero to its order.
    std::optional<int> valuation() const;

    XSeries operator-() const;
    friend XSeries operator+(const XSeries& a, const XSeries& b);
    friend XSeries operator-(const XSeries& a, const XSeries& b);
    friend XSeries operator*(const XSeries& a, const XSeries& b);
    XSeries& operator+=(const XSeries& o) { *this = *this + o; return *this; }
    XSeries& operator-=(const XSeries& o) { *this = *this - o; return *this; }
    XSeries& operator*=(const XSeries& o) { *this = *this * o; return *this; }

    XSeries scaled(const QRat& c) const;
    /// Multiplication by x^k (k >= 0); order is preserved, top terms fall off.
    XSeries shifted_x(long k) const;
    XSeries truncated(int order) const;

    /// Coefficientwise evaluation of q; throws std::domain_error at a pole.
    std::vector<BigRat> eval_q(const BigRat& v) const;

    bool is_constant_in_x() const;

    friend bool operator==(const XSeries& a, const XSeries& b);
    friend bool operator!=(const XSeries& a, const XSeries& b) { return !(a == b); }

    std::string str(char xname = 'x') const;
    friend std::ostream& operator<<(std::ostream& os, const XSeries& s);

private:
    std::vector<QRat> coeffs_;
};

XSeries series_mul(const XSeries& a, const XSeries& b);

/// Power-series reciprocal; requires a nonzero constant term.
XSeries series_recip(const XSeries& a);

/// Formal logarithm; requires constant term 1.
XSeries series_log(const XSeries& a);

/// q-logarithm Log(1+z) = sum_k (-1)^k z^{k+1}/[k+1]; requires z(0) = 0.
XSeries series_qlog(const XSeries& z);

/// c_n x^n -> [n] c_n x^{n-1}; the result carries order T-1 (T >= 1 required).
XSeries q_derivative(const XSeries& a);

/// c_n x^n -> c_n x^{n+1}/[n+1]; the result carries order T+1.
XSeries jackson_integral(const XSeries& a);

/// x -> q^{power} x, i.e. c_n -> q^{n*power} c_n.
XSeries subst_qx(const XSeries& a, long power = 1);

/// prod_k (1 - x^k)^{e_k} truncated to T; negative exponents go through
/// series_recip. Keys must be positive; factors with k > T are irrelevant.
XSeries product_expand(const std::map<long, long>& exponents, int T);

/// prod_{i=0}^{count-1} (1 - q^i alpha x) as a series of the given order.
XSeries shifted_x_product(const QRat& alpha, long count, int T);

/// Integer power of a series (e >= 0).
XSeries series_pow(const XSeries& a, long e);

/// Treats coefficients 0..order as an exact polynomial and evaluates at t.
QRat poly_eval(const XSeries& p, const QRat& t);

/// Jackson sum (1-Q) sum_{j>=0} Q^j f(Q^j) for f = numer/denom, where numer
/// and denom are polynomials in t with coefficients in the base variable Q
/// (q = Q^{base_power}); returns the truncated Q-series. Requires den(Q^j) to
/// be a unit power series for every retained j.
QLaurent jackson_sum_01(const XSeries& numer, const XSeries& denom, long base_power,
                        long q_order);

}  // namespace qrk

#endif

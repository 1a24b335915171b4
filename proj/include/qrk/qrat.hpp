/// @file qrat.hpp
/// @brief Canonical quotients of Laurent polynomials and exact polynomial division.
#ifndef QRK_QRAT_HPP
#define QRK_QRAT_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include "qrk/qlaurent.hpp"

namespace qrk {

/// Thrown when an exact polynomial division leaves a remainder.
class exact_division_error : public std::domain_error {
public:
    exact_division_error(const std::string& what, QLaurent remainder)
        : std::domain_error(what), remainder_(std::move(remainder)) {}
    const QLaurent& remainder() const { return remainder_; }

private:
    QLaurent remainder_;
};

/// Rational function in one variable, held in a unique canonical form:
/// numerator/denominator coprime, denominator with min_exp 0, integer
/// primitive coefficients and positive leading coefficient. Equality is
/// therefore structural.
class QRat {
public:
    QRat() : num_('q'), den_(1, 'q') {}
    QRat(const BigRat& c, char var = 'q') : num_(c, var), den_(1, var) {}
    QRat(long c, char var = 'q') : QRat(BigRat(c), var) {}
    QRat(const QLaurent& p) : num_(p), den_(1, p.var()) {}

    /// Zero with an explicit variable tag.
    static QRat zero(char var) { return QRat(QLaurent(var)); }

    /// The canonical representative of n/d. Throws std::domain_error if d = 0.
    static QRat normalized(const QLaurent& n, const QLaurent& d);
    /// Monomial var^e as a QRat.
    static QRat var_power(long e, char var = 'q');

    const QLaurent& num() const { return num_; }
    const QLaurent& den() const { return den_; }
    char var() const { return num_.is_constant() ? den_.var() : num_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    /// Valuation in the variable: min_exp of the numerator (denominators are
    /// units at 0 by canonicity). Zero has no valuation; callers must check.
    long valuation() const { return num_.min_exp(); }

    QRat operator-() const;
    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);
    QRat& operator+=(const QRat& o) { *this = *this + o; return *this; }
    QRat& operator-=(const QRat& o) { *this = *this - o; return *this; }
    QRat& operator*=(const QRat& o) { *this = *this * o; return *this; }
    QRat& operator/=(const QRat& o) { *this = *this / o; return *this; }

    QRat inverse() const;
    QRat pow(long e) const;
    /// Substitution var -> var^r (r = -1 gives the q -> 1/q involution).
    QRat subst_pow(long r) const;

    /// Exact value at a point; throws std::domain_error at a pole.
    BigRat eval(const BigRat& v) const;

    friend bool operator==(const QRat& a, const QRat& b);
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const QRat& r);

private:
    static QRat make_scaled(QLaurent n, QLaurent d);

    QLaurent num_, den_;
};

/// exact_core operation surface.
QRat qrat_normalize(const QLaurent& n, const QLaurent& d);

/// Quotient of an exact division in the Laurent ring; throws
/// exact_division_error (carrying the remainder) if the division is inexact.
QLaurent poly_exact_div(const QLaurent& a, const QLaurent& b);

/// Exact value of a Laurent polynomial at a point.
BigRat eval_at(const QLaurent& a, const BigRat& v);

/// Primitive integer gcd (positive leading coefficient), up to var^k units.
QLaurent poly_gcd(const QLaurent& a, const QLaurent& b);

/// Plain polynomial division over the rationals: a = quot*b + rem with
/// deg rem < deg b. Both inputs must have min_exp >= 0.
std::pair<QLaurent, QLaurent> poly_divmod(const QLaurent& a, const QLaurent& b);

}  // namespace qrk

#endif

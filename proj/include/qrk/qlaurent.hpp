/// @file qlaurent.hpp
/// @brief Laurent polynomials over BigRat with a variable tag.
#ifndef QRK_QLAURENT_HPP
#define QRK_QLAURENT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qrk/bigrat.hpp"

namespace qrk {

/// Dense Laurent polynomial. Coefficients ascend by exponent starting at
/// min_exp(); first and last stored coefficients are nonzero unless the value
/// is zero (empty storage, min_exp 0). The variable tag is metadata: arithmetic
/// between two non-constant values with different tags throws, constants are
/// tag-neutral.
class QLaurent {
public:
    QLaurent() = default;
    explicit QLaurent(char var) : var_(var) {}
    QLaurent(const BigRat& c, char var = 'q');
    QLaurent(long c, char var = 'q') : QLaurent(BigRat(c), var) {}
    QLaurent(int c, char var = 'q') : QLaurent(BigRat(c), var) {}

    static QLaurent monomial(const BigRat& c, long exp, char var = 'q');
    /// Builds from a dense coefficient run; trailing/leading zeros are trimmed.
    static QLaurent from_coeffs(long min_exp, std::vector<BigRat> coeffs, char var = 'q');

    char var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.empty() || (min_exp_ == 0 && coeffs_.size() == 1); }
    bool is_one() const { return is_constant() && !coeffs_.empty() && coeffs_[0].is_one(); }

    long min_exp() const { return min_exp_; }
    /// Largest exponent with nonzero coefficient; 0 for the zero value.
    long degree() const { return coeffs_.empty() ? 0 : min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
    long term_span() const { return static_cast<long>(coeffs_.size()); }

    /// Coefficient of the given exponent (zero outside the stored range).
    const BigRat& coeff(long exp) const;
    BigRat constant_term() const { return coeff(0); }
    BigRat leading_coeff() const { return coeffs_.empty() ? BigRat(0) : coeffs_.back(); }

    bool integer_coeffs() const;

    QLaurent operator-() const;
    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    friend QLaurent operator+(QLaurent a, const QLaurent& b) { a += b; return a; }
    friend QLaurent operator-(QLaurent a, const QLaurent& b) { a -= b; return a; }
    friend QLaurent operator*(const QLaurent& a, const QLaurent& b);
    QLaurent& operator*=(const QLaurent& o) { *this = *this * o; return *this; }

    QLaurent scaled(const BigRat& c) const;
    /// Multiplication by var^k.
    QLaurent shifted(long k) const;
    /// Substitution var -> var^r, r != 0 (r < 0 flips the exponent range).
    QLaurent subst_pow(long r) const;

    /// Exact value at a point; negative exponents at 0 throw std::domain_error.
    BigRat eval(const BigRat& v) const;

    friend bool operator==(const QLaurent& a, const QLaurent& b);
    friend bool operator!=(const QLaurent& a, const QLaurent& b) { return !(a == b); }

    /// Canonical ascending-exponent rendering, e.g. "1 + q + q^2", "q^-1 + 2",
    /// "-4 + 3*y + y^3". This exact format is the CLI/JSON output contract.
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const QLaurent& p);

    /// Tag for the result of combining two values (constants are neutral);
    /// throws std::invalid_argument on a genuine mismatch.
    static char joint_var(const QLaurent& a, const QLaurent& b);

private:
    void trim();

    long min_exp_ = 0;
    std::vector<BigRat> coeffs_;  // empty <=> zero
    char var_ = 'q';
};

/// Drops exponents above `order` (truncated-series helper; value taken mod var^(order+1)).
QLaurent trunc_tail(const QLaurent& a, long order);
/// Product truncated to exponents <= order.
QLaurent trunc_mul(const QLaurent& a, const QLaurent& b, long order);
/// Power-series reciprocal to exponents <= order; requires min_exp 0 and a
/// nonzero constant term.
QLaurent trunc_recip(const QLaurent& a, long order);

}  // namespace qrk

#endif

#include "qrk/bigrat.hpp"

#include <ostream>

namespace qrk {

BigRat::BigRat(const BigInt& num, const BigInt& den) {
    if (sgn(den) == 0) throw std::domain_error("BigRat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRat::BigRat(long num, long den) : BigRat(BigInt(num), BigInt(den)) {}

BigRat BigRat::from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("BigRat: malformed literal '" + s + "'");
    if (sgn(v.get_den()) == 0) throw std::invalid_argument("BigRat: zero denominator in '" + s + "'");
    v.canonicalize();
    BigRat r;
    r.v_ = v;
    return r;
}

BigRat BigRat::operator-() const {
    BigRat r;
    r.v_ = -v_;
    return r;
}

BigRat& BigRat::operator/=(const BigRat& o) {
    if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
    v_ /= o.v_;
    return *this;
}

BigRat BigRat::abs() const {
    BigRat r;
    r.v_ = ::abs(v_);
    return r;
}

BigRat BigRat::inverse() const {
    if (is_zero()) throw std::domain_error("BigRat: inverse of zero");
    BigRat r;
    r.v_ = 1 / v_;
    return r;
}

BigRat BigRat::pow(const BigRat& base, long e) {
    if (e == 0) return BigRat(1);
    if (base.is_zero()) {
        if (e < 0) throw std::domain_error("BigRat: 0 raised to a negative power");
        return BigRat(0);
    }
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    return e > 0 ? BigRat(n, d) : BigRat(d, n);
}

std::string BigRat::str() const {
    return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRat& r) {
    return os << r.v_;
}

}  // namespace qrk

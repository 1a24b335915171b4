/// @file bigrat.hpp
/// @brief Arbitrary-precision rational scalar, always in canonical reduced form.
#ifndef QRK_BIGRAT_HPP
#define QRK_BIGRAT_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace qrk {

using BigInt = mpz_class;

/// Exact rational number. Invariants: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(int n) : v_(n) {}
    BigRat(long n) : v_(static_cast<signed long>(n)) {}
    BigRat(const BigInt& n) : v_(n) {}
    BigRat(const BigInt& num, const BigInt& den);
    BigRat(long num, long den);

    /// Parses "n" or "n/d". Throws std::invalid_argument on malformed input or d = 0.
    static BigRat from_string(const std::string& s);

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRat operator-() const;
    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o);

    friend BigRat operator+(BigRat a, const BigRat& b) { a += b; return a; }
    friend BigRat operator-(BigRat a, const BigRat& b) { a -= b; return a; }
    friend BigRat operator*(BigRat a, const BigRat& b) { a *= b; return a; }
    friend BigRat operator/(BigRat a, const BigRat& b) { a /= b; return a; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRat& a, const BigRat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRat& a, const BigRat& b) { return a.v_ >= b.v_; }

    BigRat abs() const;
    /// Multiplicative inverse; throws std::domain_error on zero.
    BigRat inverse() const;
    /// base^e with integer e (negative allowed; 0^negative throws).
    static BigRat pow(const BigRat& base, long e);

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const BigRat& r);

private:
    mpq_class v_;  // kept canonical at all times
};

}  // namespace qrk

#endif

#include "qrk/qkit.hpp"

#include <cstdlib>

namespace qrk {

QLaurent QIntSpec::realize() const {
    return q_int(n, r);
}

QLaurent q_int(long n, long r) {
    if (r == 0) throw std::invalid_argument("q_int: base exponent r must be nonzero");
    if (n == 0) return QLaurent('q');
    if (n < 0) return q_int(-n, r).shifted(r * n).scaled(BigRat(-1));
    // sum of q^{ri}, i = 0..n-1
    const long lo = r > 0 ? 0 : r * (n - 1);
    std::vector<BigRat> cs(static_cast<std::size_t>(std::abs(r) * (n - 1) + 1));
    for (long i = 0; i < n; ++i) cs[static_cast<std::size_t>(r * i - lo)] = BigRat(1);
    return QLaurent::from_coeffs(lo, std::move(cs), 'q');
}

QLaurent q_factorial(long n) {
    if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
    QLaurent acc(1, 'q');
    for (long k = 2; k <= n; ++k) acc *= q_int(k);
    return acc;
}

QRat q_binomial(long n, long k) {
    if (k < 0) throw std::invalid_argument("q_binomial: k must be nonnegative");
    if (k == 0) return QRat(1);
    QLaurent num(1, 'q');
    for (long j = 0; j < k; ++j) {
        num *= q_int(n - j);
        if (num.is_zero()) return QRat::zero('q');
    }
    return QRat::normalized(num, q_factorial(k));
}

QRat poch(const QRat& a, const QRat& b, long n) {
    const QRat one(1);
    QRat acc = one;
    if (n >= 0) {
        QRat bs = one;
        for (long s = 0; s < n; ++s) {
            acc *= one - a * bs;
            bs *= b;
        }
        return acc;
    }
    const QRat binv = b.inverse();
    QRat bs = one;
    for (long s = 1; s <= -n; ++s) {
        bs *= binv;
        const QRat factor = one - a * bs;
        if (factor.is_zero())
            throw std::domain_error("poch: vanishing factor in the negative-n extension");
        acc *= factor.inverse();
    }
    return acc;
}

QRat shifted_pow(const QRat& u, const QRat& v, long k) {
    if (k < 0) throw std::invalid_argument("shifted_pow: k must be nonnegative");
    QRat acc(1);
    for (long i = 0; i < k; ++i) acc *= u + QRat::var_power(i) * v;
    return acc;
}

QLaurent quantum_pow(long a, long n) {
    if (a < 0 || n < 0) throw std::invalid_argument("quantum_pow: arguments must be nonnegative");
    QLaurent acc(1, 'q');
    for (long k = 1; k <= n; ++k) {
        acc *= q_int(a, k);
        if (acc.is_zero()) break;
    }
    return acc;
}

QLaurent quantum_pow_inf(long a, long q_order) {
    if (a < 1) throw std::invalid_argument("quantum_pow_inf: a must be positive");
    if (q_order < 0) throw std::invalid_argument("quantum_pow_inf: negative order");
    QLaurent acc(1, 'q');
    // [a]_{q^k} = 1 + q^k + ... contributes nothing below q^k.
    for (long k = 1; k <= q_order; ++k) acc = trunc_mul(acc, q_int(a, k), q_order);
    return acc;
}

}  // namespace qrk

/// @file qkit.hpp
/// @brief q-combinatorics primitives: q-integers, q-factorials, q-binomials,
/// q-Pochhammer symbols, shifted binomial products and quantum powers.
#ifndef QRK_QKIT_HPP
#define QRK_QKIT_HPP

#include "qrk/qrat.hpp"

namespace qrk {

/// A q-integer [n] in base q^r before realization.
struct QIntSpec {
    long n = 0;
    long r = 1;
    QLaurent realize() const;
};

/// [n] in base q^r: sum_{i=0}^{n-1} q^{ri} for n >= 0, and -q^{rn}[-n]_{q^r}
/// for n < 0. Throws std::invalid_argument for r = 0.
QLaurent q_int(long n, long r = 1);

/// [n]! = prod_{k=1}^{n} [k]; 1 for n = 0. n must be nonnegative.
QLaurent q_factorial(long n);

/// Gaussian binomial [n k] = [n][n-1]...[n-k+1] / ([k]...[1]); any integer n,
/// k >= 0. For n >= k >= 0 the result is a polynomial with nonnegative
/// integer coefficients.
QRat q_binomial(long n, long k);

/// (a; b)_n = prod_{s=0}^{n-1} (1 - a b^s); negative n extends through
/// (a;b)_n = (a;b)_inf / (a b^n; b)_inf, i.e. prod_{s=1}^{-n} 1/(1 - a b^{-s}).
/// Throws std::domain_error when a factor of the negative-n extension
/// vanishes.
QRat poch(const QRat& a, const QRat& b, long n);

/// (u .+ v)^k = prod_{i=0}^{k-1} (u + q^i v); k >= 0.
QRat shifted_pow(const QRat& u, const QRat& v, long k);

/// Quantum power <a^n> = prod_{k=1}^{n} [a]_{q^k}; <a^0> = 1. a, n >= 0.
QLaurent quantum_pow(long a, long n);

/// <a^inf> = prod_{k=1}^{inf} [a]_{q^k} truncated to exponents <= q_order.
/// Factors with no contribution below the truncation are skipped, so the
/// result is exact mod q^{q_order+1}. a >= 1.
QLaurent quantum_pow_inf(long a, long q_order);

}  // namespace qrk

#endif

#include <gtest/gtest.h>

#include <random>

#include "qrk/qkit.hpp"

using namespace qrk;

namespace {

QLaurent L(std::initializer_list<long> coeffs, long min_exp = 0) {
    std::vector<BigRat> cs;
    for (long c : coeffs) cs.emplace_back(c);
    return QLaurent::from_coeffs(min_exp, std::move(cs));
}

QRat qq(long e) { return QRat::var_power(e); }

std::mt19937_64 rng(777);

BigRat rand_rat() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    long n = num(rng);
    if (n == 0) n = 1;
    return BigRat(n, den(rng));
}

}  // namespace

TEST(q_int, examples) {
    EXPECT_TRUE(q_int(0).is_zero());
    EXPECT_EQ(q_int(3), L({1, 1, 1}));
    EXPECT_EQ(q_int(-2), L({-1, -1}, -2));  // -q^-2 - q^-1
    EXPECT_EQ(q_int(3, 2), L({1, 0, 1, 0, 1}));
    EXPECT_EQ(q_int(2, -1), L({1, 1}, -1));
    EXPECT_THROW(q_int(3, 0), std::invalid_argument);
}

TEST(q_int, realization_matches_closed_form) {
    for (long n = -6; n <= 6; ++n) {
        for (long r : {-3L, -1L, 1L, 2L, 3L}) {
            // [n] in base q^r equals (1 - q^{rn})/(1 - q^r) after clearing
            const QLaurent one(1);
            const QLaurent num = one - QLaurent::monomial(BigRat(1), r * n);
            const QLaurent den = one - QLaurent::monomial(BigRat(1), r);
            EXPECT_EQ(QRat(QIntSpec{n, r}.realize()), QRat::normalized(num, den))
                << "n=" << n << " r=" << r;
        }
    }
}

TEST(q_int, negation_rule) {
    // [-n]_Q = -Q^{-n} [n]_Q
    for (long n = 1; n <= 8; ++n)
        for (long r : {1L, 2L, 3L})
            EXPECT_EQ(q_int(-n, r), -(q_int(n, r).shifted(-r * n)));
}

TEST(q_factorial, examples) {
    EXPECT_EQ(q_factorial(0), L({1}));
    EXPECT_EQ(q_factorial(3), L({1, 2, 2, 1}));
    EXPECT_EQ(q_factorial(5).eval(BigRat(1)), BigRat(120));
    EXPECT_THROW(q_factorial(-1), std::invalid_argument);
}

TEST(q_binomial, examples) {
    EXPECT_EQ(q_binomial(2, 1), QRat(L({1, 1})));
    for (long n : {-4L, 0L, 3L, 11L}) EXPECT_EQ(q_binomial(n, 0), QRat(1));
    // Gauss alternating sum at N = 2: 1 - q
    QRat s;
    for (long l = 0; l <= 2; ++l) s += QRat(l % 2 == 0 ? 1 : -1) * q_binomial(2, l);
    EXPECT_EQ(s, QRat(L({1, -1})));
}

TEST(q_binomial, polynomial_with_nonnegative_integer_coeffs) {
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k) {
            const QRat b = q_binomial(n, k);
            ASSERT_TRUE(b.is_poly()) << n << " " << k;
            for (long e = b.num().min_exp(); e <= b.num().degree(); ++e) {
                ASSERT_TRUE(b.num().coeff(e).is_integer());
                ASSERT_GE(b.num().coeff(e).sign(), 0);
            }
        }
}

TEST(q_binomial, symmetry_and_pascal) {
    for (long n = 0; n <= 15; ++n)
        for (long k = 0; k <= n; ++k) {
            EXPECT_EQ(q_binomial(n, k), q_binomial(n, n - k));
            if (k >= 1 && n >= 1) {
                EXPECT_EQ(q_binomial(n, k),
                          q_binomial(n - 1, k - 1) + qq(k) * q_binomial(n - 1, k));
                EXPECT_EQ(q_binomial(n, k),
                          qq(n - k) * q_binomial(n - 1, k - 1) + q_binomial(n - 1, k));
            }
        }
}

TEST(poch, examples) {
    EXPECT_EQ(poch(qq(1), qq(1), 0), QRat(1));
    EXPECT_EQ(poch(qq(1), qq(1), 2), QRat(L({1, -1}) * L({1, 0, -1})));
    EXPECT_EQ(poch(qq(2), qq(1), -1), QRat::normalized(L({1}), L({1, -1})));
    // a factor of the negative-n extension vanishes: 1 - q q^{-1} = 0
    EXPECT_THROW(poch(qq(1), qq(1), -1), std::domain_error);
}

TEST(shifted_pow, examples) {
    EXPECT_EQ(shifted_pow(QRat(1), qq(1), 0), QRat(1));
    EXPECT_EQ(shifted_pow(QRat(1), qq(1), 2), QRat(L({1, 1}) * L({1, 0, 1})));
    EXPECT_EQ(shifted_pow(QRat(1), -qq(1), 2).eval(BigRat(1)), BigRat(0));
    EXPECT_THROW(shifted_pow(QRat(1), qq(1), -1), std::invalid_argument);
}

TEST(quantum_pow, examples) {
    EXPECT_EQ(quantum_pow(3, 0), L({1}));
    EXPECT_EQ(quantum_pow(2, 2), L({1, 1, 1, 1}));
    EXPECT_EQ(quantum_pow(3, 4).eval(BigRat(1)), BigRat(81));
}

TEST(quantum_pow_inf, examples) {
    EXPECT_EQ(quantum_pow_inf(1, 12), L({1}));
    EXPECT_EQ(quantum_pow_inf(2, 3), L({1, 1, 1, 2}));
    // <4^inf>/(<2^inf>^2) to order 8 equals prod over odd n of (1+q^n)^{-1}
    const long T = 8;
    const QLaurent lhs = trunc_mul(
        quantum_pow_inf(4, T),
        trunc_recip(trunc_mul(quantum_pow_inf(2, T), quantum_pow_inf(2, T), T), T), T);
    QLaurent rhs_den(1);
    for (long n = 1; n <= T; n += 2)
        rhs_den = trunc_mul(rhs_den, QLaurent(1) + QLaurent::monomial(BigRat(1), n), T);
    EXPECT_EQ(lhs, trunc_recip(rhs_den, T));
}

TEST(quantum_pow, product_formula_holds) {
    // <a^n> (q; q)_n = (q^a; q^a)_n exactly
    for (long a = 1; a <= 10; ++a)
        for (long n = 0; n <= 20; ++n) {
            const QRat lhs = QRat(quantum_pow(a, n)) * poch(qq(1), qq(1), n);
            ASSERT_EQ(lhs, poch(qq(a), qq(a), n)) << "a=" << a << " n=" << n;
        }
}

TEST(quantum_pow, gamma_ratio_formula) {
    // <a^n> [n]_q! = [a]^n [n]_{q^a}! exactly
    for (long a = 1; a <= 10; ++a)
        for (long n = 1; n <= 10; ++n) {
            QLaurent fact_q(1), fact_qa(1);
            for (long k = 1; k <= n; ++k) {
                fact_q *= q_int(k);
                fact_qa *= q_int(k, a);
            }
            QLaurent an(1);
            for (long i = 0; i < n; ++i) an *= q_int(a);
            ASSERT_EQ(quantum_pow(a, n) * fact_q, an * fact_qa) << "a=" << a << " n=" << n;
        }
}

TEST(symmetric_shifted_sum, u_zero_specialization) {
    // the two-weight symmetric sum with u = 0 degenerates to the plain-power form
    for (int trial = 0; trial < 4; ++trial) {
        const QRat a(rand_rat()), b(rand_rat()), w(rand_rat());
        for (long n = 0; n <= 8; ++n) {
            QRat with_u, plain;
            for (long k = 0; k <= n; ++k) {
                const QRat c = q_binomial(n, k);
                with_u += c * shifted_pow(a, QRat(0), k) * shifted_pow(b, w, n - k);
                plain += c * a.pow(k) * shifted_pow(b, w, n - k);
            }
            EXPECT_EQ(with_u, plain);
        }
    }
}

TEST(gauss_formula, all_parities) {
    for (long n = 0; n <= 16; ++n) {
        QRat s;
        for (long l = 0; l <= n; ++l) s += QRat(l % 2 == 0 ? 1 : -1) * q_binomial(n, l);
        if (n == 0) EXPECT_EQ(s, QRat(1));
        else if (n % 2 == 1) EXPECT_TRUE(s.is_zero()) << n;
        else EXPECT_EQ(s, poch(qq(1), qq(2), n / 2)) << n;
    }
}

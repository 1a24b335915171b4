#include <gtest/gtest.h>

#include <random>

#include "qrk/qkit.hpp"
#include "qrk/xseries.hpp"

using namespace qrk;

namespace {

QRat qq(long e) { return QRat::var_power(e); }

XSeries geom(int T) {
    XSeries s(T);
    for (int n = 0; n <= T; ++n) s.set(n, QRat(1));
    return s;
}

XSeries one_minus_x(int T) {
    XSeries s = XSeries::constant(QRat(1), T);
    if (T >= 1) s.set(1, QRat(-1));
    return s;
}

std::mt19937_64 rng(4242);

BigRat rand_rat() {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return BigRat(num(rng), den(rng));
}

QRat rand_coeff() {
    // small Laurent polynomial in q
    std::uniform_int_distribution<long> len(0, 3), off(-2, 2);
    const long n = len(rng);
    std::vector<BigRat> cs;
    for (long i = 0; i < n; ++i) cs.push_back(rand_rat());
    return QRat(QLaurent::from_coeffs(off(rng), std::move(cs)));
}

XSeries rand_series(int T, bool unit_constant = false) {
    XSeries s(T);
    for (int n = 0; n <= T; ++n) s.set(n, rand_coeff());
    if (unit_constant) s.set(0, QRat(1));
    return s;
}

// x^k * f for tests (f computed at the same order; top coefficients drop off).
XSeries times_xk(const XSeries& f, long k) {
    XSeries r(f.order());
    for (int n = 0; n + k <= f.order(); ++n) r.set(n + static_cast<int>(k), f.at(n));
    return r;
}

}  // namespace

TEST(xseries, order_contract) {
    XSeries s(3);
    EXPECT_EQ(s.order(), 3);
    EXPECT_THROW(s.at(4), std::out_of_range);
    EXPECT_THROW(s.at(-1), std::out_of_range);
    XSeries a(5), b(3);
    EXPECT_EQ((a + b).order(), 3);
    EXPECT_EQ((a * b).order(), 3);
    EXPECT_FALSE(XSeries(4).valuation().has_value());
    XSeries v(4);
    v.set(2, QRat(1));
    EXPECT_EQ(v.valuation(), 2);
}

TEST(series_mul, examples) {
    const int T = 8;
    EXPECT_EQ(one_minus_x(T) * geom(T), XSeries::constant(QRat(1), T));
    XSeries one_plus_x = XSeries::constant(QRat(1), T);
    one_plus_x.set(1, QRat(1));
    const XSeries sq = one_plus_x * one_plus_x;
    EXPECT_EQ(sq.at(0), QRat(1));
    EXPECT_EQ(sq.at(1), QRat(2));
    EXPECT_EQ(sq.at(2), QRat(1));
    EXPECT_EQ(sq.at(3), QRat(0));
    // prod_{i=0}^{2} (1 + q^i x) = 1 + [3] x + (q+q^2+q^3) x^2 + q^3 x^3
    const XSeries p = shifted_x_product(QRat(-1), 3, T);
    EXPECT_EQ(p.at(1), QRat(q_int(3)));
    EXPECT_EQ(p.at(2), qq(1) + qq(2) + qq(3));
    EXPECT_EQ(p.at(3), qq(3));
    EXPECT_EQ(p.at(4), QRat(0));
}

TEST(series_recip, euler_formula) {
    // 1/(1-.x)^{k+1} has x^n coefficient [k+n, n]
    for (long k = 0; k <= 4; ++k) {
        const XSeries r = series_recip(shifted_x_product(QRat(1), k + 1, 8));
        for (int n = 0; n <= 8; ++n)
            ASSERT_EQ(r.at(n), q_binomial(k + n, n)) << "k=" << k << " n=" << n;
    }
}

TEST(series_recip, examples_and_errors) {
    const int T = 10;
    EXPECT_EQ(series_recip(one_minus_x(T)), geom(T));
    XSeries one_plus_x = XSeries::constant(QRat(1), T);
    one_plus_x.set(1, QRat(1));
    const XSeries r = series_recip(one_plus_x);
    for (int n = 0; n <= T; ++n) EXPECT_EQ(r.at(n), QRat(n % 2 == 0 ? 1 : -1));
    EXPECT_THROW(series_recip(XSeries(4)), std::domain_error);
    for (int i = 0; i < 10; ++i) {
        const XSeries f = rand_series(8, true);
        EXPECT_EQ(series_recip(series_recip(f)), f);
    }
}

TEST(series_log, examples) {
    const int T = 12;
    XSeries one_plus_x = XSeries::constant(QRat(1), T);
    one_plus_x.set(1, QRat(1));
    const XSeries lg = series_log(one_plus_x);
    for (int n = 1; n <= T; ++n)
        EXPECT_EQ(lg.at(n), QRat(BigRat(n % 2 == 1 ? 1 : -1, n)));
    // log(1-x) + log(1+x) = log(1-x^2)
    XSeries one_minus_x2 = XSeries::constant(QRat(1), T);
    one_minus_x2.set(2, QRat(-1));
    EXPECT_EQ(series_log(one_minus_x(T)) + series_log(one_plus_x), series_log(one_minus_x2));
    EXPECT_THROW(series_log(geom(4).scaled(QRat(2))), std::domain_error);
}

TEST(series_qlog, examples) {
    const int T = 10;
    XSeries x(T);
    x.set(1, QRat(1));
    const XSeries lg = series_qlog(x);
    for (int n = 1; n <= T; ++n)
        EXPECT_EQ(lg.at(n), QRat(n % 2 == 1 ? 1 : -1) / QRat(q_int(n)));
    // q = 1 collapses the q-logarithm onto the classical one
    for (int i = 0; i < 6; ++i) {
        XSeries z = rand_series(8);
        z.set(0, QRat(0));
        const XSeries qlg = series_qlog(z);
        const XSeries clg = series_log(z + XSeries::constant(QRat(1), 8));
        EXPECT_EQ(qlg.eval_q(BigRat(1)), clg.eval_q(BigRat(1)));
    }
    // Jackson integral of 1/(1+t) is the q-logarithm
    XSeries one_plus_x = XSeries::constant(QRat(1), T);
    one_plus_x.set(1, QRat(1));
    EXPECT_EQ(jackson_integral(series_recip(one_plus_x)).truncated(T), series_qlog(x));
    EXPECT_THROW(series_qlog(geom(4)), std::domain_error);
}

TEST(q_derivative, examples) {
    const int T = 8;
    XSeries x4(T);
    x4.set(4, QRat(1));
    const XSeries d = q_derivative(x4);
    EXPECT_EQ(d.at(3), QRat(q_int(4)));
    EXPECT_EQ(q_derivative(XSeries::constant(QRat(5), T)), XSeries(T - 1));
    // q = 1 gives the classical derivative
    const XSeries f = rand_series(T);
    const auto df = q_derivative(f).eval_q(BigRat(1));
    const auto fv = f.eval_q(BigRat(1));
    for (int n = 1; n <= T; ++n) EXPECT_EQ(df[n - 1], BigRat(n) * fv[n]);
}

TEST(q_derivative, difference_quotient_oracle) {
    // (f(q0 x) - f(x)) / ((q0-1) x) coefficientwise at a rational point
    for (int i = 0; i < 8; ++i) {
        BigRat q0 = rand_rat();
        if (q0.is_zero() || q0.is_one()) q0 = BigRat(2, 3);
        const XSeries f = rand_series(10);
        const auto fv = f.eval_q(q0);
        const auto dv = q_derivative(f).eval_q(q0);
        for (int n = 1; n <= 10; ++n) {
            const BigRat quotient =
                fv[n] * (BigRat::pow(q0, n) - BigRat(1)) / (q0 - BigRat(1));
            ASSERT_EQ(dv[n - 1], quotient) << "n=" << n;
        }
    }
}

TEST(q_derivative, shifted_power_closed_forms) {
    const int T = 12;
    for (int i = 0; i < 3; ++i) {
        BigRat a = rand_rat();
        if (a.is_zero()) a = BigRat(1, 2);
        const QRat alpha(a);
        // d/d_q x of x^k/(1-.ax)^k = [k] x^{k-1}/(1-.ax)^{k+1}
        for (long k = 1; k <= 6; ++k) {
            const XSeries lhs =
                q_derivative(times_xk(series_recip(shifted_x_product(alpha, k, T)), k));
            const XSeries rhs = times_xk(series_recip(shifted_x_product(alpha, k + 1, T - 1)),
                                         k - 1)
                                    .scaled(QRat(q_int(k)));
            ASSERT_EQ(lhs, rhs) << "k=" << k;
        }
        // d/d_q x of x^k/(1-.ax)^{2k} = [k] x^{k-1} (1 + a q^k x)/(1-.ax)^{2k+1}
        for (long k = 1; k <= 5; ++k) {
            const XSeries lhs =
                q_derivative(times_xk(series_recip(shifted_x_product(alpha, 2 * k, T)), k));
            XSeries extra = XSeries::constant(QRat(1), T - 1);
            extra.set(1, alpha * qq(k));
            const XSeries rhs =
                times_xk(extra * series_recip(shifted_x_product(alpha, 2 * k + 1, T - 1)),
                         k - 1)
                    .scaled(QRat(q_int(k)));
            ASSERT_EQ(lhs, rhs) << "k=" << k;
        }
    }
}

TEST(q_leibniz, product_rule) {
    for (int i = 0; i < 6; ++i) {
        const XSeries f = rand_series(10), g = rand_series(10);
        const XSeries lhs = q_derivative(f * g);
        const XSeries rhs = subst_qx(f).truncated(9) * q_derivative(g) + q_derivative(f) * g.truncated(9);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(jackson_integral, examples) {
    const int T = 10;
    for (int i = 0; i < 6; ++i) {
        const XSeries f = rand_series(T);
        EXPECT_EQ(q_derivative(jackson_integral(f)), f);
    }
    const XSeries j1 = jackson_integral(XSeries::constant(QRat(1), T));
    EXPECT_EQ(j1.at(1), QRat(1));
    EXPECT_EQ(j1.valuation(), 1);
    // integral of sum x^{2s} matches sum x^{2s+1}/[2s+1]
    XSeries even(T);
    for (int n = 0; n <= T; n += 2) even.set(n, QRat(1));
    const XSeries ji = jackson_integral(even);
    for (int n = 1; n <= T + 1; n += 2)
        EXPECT_EQ(ji.at(n), QRat(q_int(n)).inverse());
}

TEST(subst_qx, examples) {
    const int T = 6;
    XSeries one_plus_x = XSeries::constant(QRat(1), T);
    one_plus_x.set(1, QRat(1));
    const XSeries s = subst_qx(one_plus_x);
    EXPECT_EQ(s.at(1), qq(1));
    const XSeries f = rand_series(T);
    EXPECT_EQ(subst_qx(f).eval_q(BigRat(1)), f.eval_q(BigRat(1)));
    const XSeries g = subst_qx(geom(T), 1);
    for (int n = 0; n <= T; ++n) EXPECT_EQ(g.at(n), qq(n));
    const XSeries h = subst_qx(geom(T), -2);
    for (int n = 0; n <= T; ++n) EXPECT_EQ(h.at(n), qq(-2 * n));
}

namespace {

// Independent partition-count oracle: plain recursive enumeration.
long enum_partitions(long n, long max_part) {
    if (n == 0) return 1;
    long count = 0;
    for (long p = std::min(n, max_part); p >= 1; --p) count += enum_partitions(n - p, p);
    return count;
}

}  // namespace

TEST(product_expand, partition_generating_function) {
    const int T = 12;
    std::map<long, long> e;
    for (long k = 1; k <= T; ++k) e[k] = -1;
    const XSeries p = product_expand(e, T);
    for (int n = 0; n <= T; ++n)
        EXPECT_EQ(p.at(n), QRat(enum_partitions(n, n == 0 ? 1 : n))) << n;
    EXPECT_EQ(p.at(4), QRat(5));
}

TEST(product_expand, single_factor_and_errors) {
    std::map<long, long> e{{1, 1}};
    const XSeries s = product_expand(e, 5);
    EXPECT_EQ(s, one_minus_x(5));
    std::map<long, long> bad{{0, 1}};
    EXPECT_THROW(product_expand(bad, 5), std::invalid_argument);
}

TEST(product_expand, euler_pentagonal) {
    const int T = 15;
    std::map<long, long> e;
    for (long k = 1; k <= T; ++k) e[k] = 1;
    const XSeries p = product_expand(e, T);
    // oracle: generalized pentagonal numbers j(3j-1)/2, j(3j+1)/2 with sign (-1)^j
    std::map<int, long> expected{{0, 1}};
    for (long j = 1;; ++j) {
        const long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
        if (g1 > T && g2 > T) break;
        const long sign = j % 2 == 0 ? 1 : -1;
        if (g1 <= T) expected[static_cast<int>(g1)] = sign;
        if (g2 <= T) expected[static_cast<int>(g2)] = sign;
    }
    for (int n = 0; n <= T; ++n) {
        const auto it = expected.find(n);
        EXPECT_EQ(p.at(n), QRat(it == expected.end() ? 0 : it->second)) << n;
    }
}

TEST(jackson_sum_01, examples) {
    const long T = 10;
    // f = 1: the unit interval has q-measure 1
    EXPECT_EQ(jackson_sum_01(XSeries::constant(QRat(1), 0), XSeries::constant(QRat(1), 0), 1, T),
              QLaurent(1));
    // f = t: (1-Q) sum Q^{2j} = 1/(1+Q)
    XSeries t(1);
    t.set(1, QRat(1));
    const QLaurent got = jackson_sum_01(t, XSeries::constant(QRat(1), 1), 1, T);
    EXPECT_EQ(got, trunc_recip(QLaurent(1) + QLaurent::monomial(BigRat(1), 1), T));
    // f = 1/(1+Q^2 t^2) matches sum_k (-Q^2)^k/[2k+1]
    XSeries den(2);
    den.set(0, QRat(1));
    den.set(2, qq(2));
    const QLaurent integral = jackson_sum_01(XSeries::constant(QRat(1), 2), den, 2, T);
    QLaurent expect('q');
    for (long k = 0; 2 * k <= T; ++k) {
        const QRat term = QRat(k % 2 == 0 ? 1 : -1) * qq(2 * k) / QRat(q_int(2 * k + 1));
        expect += trunc_mul(term.num(), trunc_recip(term.den(), T), T);
    }
    EXPECT_EQ(integral, trunc_tail(expect, T));
    // a denominator vanishing at 0 is rejected
    XSeries bad(1);
    bad.set(1, QRat(1));
    EXPECT_THROW(jackson_sum_01(XSeries::constant(QRat(1), 1), bad, 1, T), std::domain_error);
}

TEST(xseries, rendering) {
    XSeries s(4);
    s.set(0, QRat(1));
    s.set(1, QRat(-2));
    s.set(2, QRat(q_int(2)));
    s.set(4, QRat(BigRat(1, 3)));
    EXPECT_EQ(s.str(), "1 - 2*x + (1 + q)*x^2 + 1/3*x^4");
    EXPECT_EQ(XSeries(3).str(), "0");
    EXPECT_EQ(XSeries::constant(QRat(q_int(3)), 5).str(), "1 + q + q^2");
}

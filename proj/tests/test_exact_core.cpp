#include <gtest/gtest.h>

#include <random>

#include "qrk/qrat.hpp"

using namespace qrk;

namespace {

QLaurent L(std::initializer_list<long> coeffs, long min_exp = 0, char var = 'q') {
    std::vector<BigRat> cs;
    for (long c : coeffs) cs.emplace_back(c);
    return QLaurent::from_coeffs(min_exp, std::move(cs), var);
}

std::mt19937_64 rng(12345);

BigRat rand_rat() {
    std::uniform_int_distribution<long> num(-6, 6), den(1, 6);
    return BigRat(num(rng), den(rng));
}

QLaurent rand_poly(char var = 'q') {
    std::uniform_int_distribution<long> len(0, 5), off(-3, 3);
    const long n = len(rng);
    std::vector<BigRat> cs;
    for (long i = 0; i < n; ++i) cs.push_back(rand_rat());
    return QLaurent::from_coeffs(off(rng), std::move(cs), var);
}

QLaurent rand_nonzero_poly(char var = 'q') {
    for (;;) {
        QLaurent p = rand_poly(var);
        if (!p.is_zero()) return p;
    }
}

QRat rand_qrat() {
    return QRat::normalized(rand_poly(), rand_nonzero_poly());
}

// Independent long-division oracle used to freeze expected quotients.
QLaurent naive_div(const QLaurent& a, const QLaurent& b) {
    auto [q, r] = poly_divmod(a, b);
    EXPECT_TRUE(r.is_zero());
    return q;
}

}  // namespace

TEST(bigrat, canonical_form) {
    EXPECT_EQ(BigRat(2, 4), BigRat(1, 2));
    EXPECT_EQ(BigRat(-2, -4), BigRat(1, 2));
    EXPECT_EQ(BigRat(2, -4), BigRat(-1, 2));
    EXPECT_EQ(BigRat(0, 7), BigRat(0));
    EXPECT_EQ(BigRat(0).den(), 1);
    EXPECT_THROW(BigRat(1, 0), std::domain_error);
    EXPECT_EQ(BigRat::from_string("-3/9"), BigRat(-1, 3));
    EXPECT_EQ(BigRat::pow(BigRat(2, 3), -2), BigRat(9, 4));
}

TEST(qlaurent, rendering_contract) {
    EXPECT_EQ(L({1, 1, 1}).str(), "1 + q + q^2");
    EXPECT_EQ(L({1, 2}, -1).str(), "q^-1 + 2");
    EXPECT_EQ(QLaurent('q').str(), "0");
    QLaurent chi5 = L({-4, 3, 0, 1, 0, -2, 1}, 0, 'y');
    EXPECT_EQ(chi5.str(), "-4 + 3*y + y^3 - 2*y^5 + y^6");
    EXPECT_EQ(QLaurent(BigRat(1, 2)).str(), "1/2");
    EXPECT_EQ(QLaurent::monomial(BigRat(-3, 2), 2).str(), "-3/2*q^2");
}

TEST(qlaurent, zero_invariants) {
    QLaurent z = L({0, 0});
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.min_exp(), 0);
    QLaurent p = L({1}, 5);
    EXPECT_EQ((p - p).min_exp(), 0);
    EXPECT_TRUE((p - p).is_zero());
}

TEST(qlaurent, variable_tags_never_mix) {
    QLaurent y = QLaurent::monomial(BigRat(1), 1, 'y');
    QLaurent q = QLaurent::monomial(BigRat(1), 1, 'q');
    EXPECT_THROW(y + q, std::invalid_argument);
    EXPECT_THROW(y * q, std::invalid_argument);
    // constants are tag-neutral
    EXPECT_EQ((y + QLaurent(2, 'q')).var(), 'y');
    EXPECT_EQ((QLaurent(3, 'q') * y).var(), 'y');
}

TEST(qlaurent, eval) {
    EXPECT_EQ(L({1, 1, 1}).eval(BigRat(1)), BigRat(3));          // [3] at q=1
    EXPECT_EQ((L({1, 1}) * L({1, 0, 1})).eval(BigRat(1)), BigRat(4));  // <2^2> at q=1
    EXPECT_EQ(L({1, 1}).eval(BigRat(1, 2)), BigRat(3, 2));
    EXPECT_THROW(L({1}, -1).eval(BigRat(0)), std::domain_error);
    EXPECT_EQ(L({1}, -1).eval(BigRat(2)), BigRat(1, 2));
}

TEST(qrat_normalize, examples) {
    // (q^2-1)/(q-1) -> q+1
    EXPECT_EQ(QRat::normalized(L({-1, 0, 1}), L({-1, 1})), QRat(L({1, 1})));
    // zero numerator
    EXPECT_TRUE(QRat::normalized(QLaurent('q'), L({1, 1})).is_zero());
    // (1-q^3)/(1-q) -> 1+q+q^2, frozen from the long-division oracle
    const QLaurent oracle = naive_div(L({1, 0, 0, -1}).scaled(BigRat(-1)),
                                      L({1, -1}).scaled(BigRat(-1)));
    EXPECT_EQ(oracle, L({1, 1, 1}));
    EXPECT_EQ(QRat::normalized(L({1, 0, 0, -1}), L({1, -1})), QRat(oracle));
    EXPECT_THROW(QRat::normalized(L({1}), QLaurent('q')), std::domain_error);
}

TEST(qrat, canonical_denominator) {
    // denominator gets min_exp 0, integer primitive coefficients, positive lc
    QRat r = QRat::normalized(L({1}), QLaurent::monomial(BigRat(-2, 3), 3));
    EXPECT_EQ(r.den(), QLaurent(1));
    EXPECT_EQ(r.num(), QLaurent::monomial(BigRat(-3, 2), -3));
    QRat s = QRat::normalized(L({1}), L({2, 0, -4}));
    EXPECT_EQ(s.den(), L({-1, 0, 2}));
    EXPECT_EQ(s.num(), QLaurent(BigRat(-1, 2)));
}

TEST(qrat, canonicalization_idempotent_randomized) {
    for (int i = 0; i < 200; ++i) {
        QRat r = rand_qrat();
        EXPECT_EQ(QRat::normalized(r.num(), r.den()), r);
    }
}

TEST(qrat, ring_axioms_randomized) {
    for (int i = 0; i < 60; ++i) {
        QRat a = rand_qrat(), b = rand_qrat(), c = rand_qrat();
        EXPECT_EQ((a + b) * c, a * c + b * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - a, QRat());
        if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    }
}

TEST(qrat, eval_is_ring_homomorphism) {
    for (int i = 0; i < 60; ++i) {
        QLaurent a = rand_poly(), b = rand_poly();
        BigRat v = rand_rat();
        if (v.is_zero()) v = BigRat(2);
        EXPECT_EQ(eval_at(a * b, v), eval_at(a, v) * eval_at(b, v));
        EXPECT_EQ(eval_at(a + b, v), eval_at(a, v) + eval_at(b, v));
    }
}

TEST(poly_exact_div, examples) {
    EXPECT_EQ(poly_exact_div(L({-1, 0, 1}), L({-1, 1})), L({1, 1}));
    // (y-3)/(y+1) leaves remainder -4
    try {
        poly_exact_div(L({-3, 1}, 0, 'y'), L({1, 1}, 0, 'y'));
        FAIL() << "expected exact_division_error";
    } catch (const exact_division_error& e) {
        EXPECT_EQ(e.remainder(), QLaurent(-4, 'y'));
        EXPECT_NE(std::string(e.what()).find("-4"), std::string::npos);
    }
    EXPECT_THROW(poly_exact_div(L({1}), QLaurent('q')), std::domain_error);
}

TEST(poly_exact_div, laurent_units_divide_exactly) {
    // q^-1 = 1/q in the Laurent ring
    EXPECT_EQ(poly_exact_div(L({1}), L({1}, 1)), L({1}, -1));
}

TEST(poly_exact_div, product_roundtrip_randomized) {
    for (int i = 0; i < 150; ++i) {
        QLaurent a = rand_nonzero_poly(), b = rand_nonzero_poly();
        EXPECT_EQ(poly_exact_div(a * b, b), a);
    }
}

TEST(qlaurent, trunc_helpers) {
    QLaurent g = trunc_recip(L({1, -1}), 6);  // 1/(1-q)
    for (long e = 0; e <= 6; ++e) EXPECT_EQ(g.coeff(e), BigRat(1));
    EXPECT_EQ(trunc_mul(L({1, -1}), g, 6), L({1}));
    EXPECT_THROW(trunc_recip(L({1}, 1), 4), std::domain_error);
    EXPECT_EQ(trunc_tail(L({1, 1, 1, 1}), 2), L({1, 1, 1}));
}

TEST(qlaurent, subst_pow) {
    EXPECT_EQ(L({1, 1, 1}).subst_pow(2), L({1, 0, 1, 0, 1}));
    EXPECT_EQ(L({1, 2}, 1).subst_pow(-1), L({2, 1}, -2));
    EXPECT_THROW(L({1, 1}).subst_pow(0), std::invalid_argument);
}

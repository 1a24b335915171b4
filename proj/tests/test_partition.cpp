#include <gtest/gtest.h>

#include "qrk/partition.hpp"

using namespace qrk;

namespace {

// Independent oracle: plain recursive enumeration of partitions.
long enum_partitions(long n, long max_part) {
    if (n == 0) return 1;
    long count = 0;
    for (long p = std::min(n, max_part); p >= 1; --p) count += enum_partitions(n - p, p);
    return count;
}

}  // namespace

TEST(partition_count, examples) {
    EXPECT_EQ(partition_count(0), 1);
    EXPECT_EQ(partition_count(4), 5);  // 4, 3+1, 2+2, 2+1+1, 1+1+1+1
    EXPECT_EQ(partition_count(19), 490);
    EXPECT_EQ(partition_count(19) % 7, 0);
    EXPECT_THROW(partition_count(-1), std::invalid_argument);
}

TEST(partition_table, invariants) {
    PartitionTable t(60);
    EXPECT_EQ(t.value(0), 1);
    for (long n = 1; n <= 60; ++n) EXPECT_GE(t.value(n), t.value(n - 1));
    EXPECT_THROW(t.value(61), std::out_of_range);
}

TEST(partition_count, matches_enumeration_oracle) {
    PartitionTable t(40);
    for (long n = 0; n <= 40; ++n)
        ASSERT_EQ(t.value(n), enum_partitions(n, std::max(n, 1L))) << n;
}

TEST(partition_count, matches_product_expand) {
    const int T = 100;
    PartitionTable t(T);
    std::map<long, long> e;
    for (long k = 1; k <= T; ++k) e[k] = -1;
    const XSeries p = product_expand(e, T);
    for (int n = 0; n <= T; ++n) {
        const QRat& c = p.at(n);
        ASSERT_TRUE(c.is_poly() && c.num().is_constant());
        ASSERT_EQ(c.num().constant_term(), BigRat(t.value(n))) << n;
    }
}

TEST(ramanujan_mod5, leading_coefficient_and_pass) {
    // constant coefficient: p(4) = 5 matches 5 * 1
    Verdict v0 = ramanujan_mod5_check(0);
    EXPECT_EQ(v0.status, Status::pass);
    EXPECT_EQ(partition_count(4), 5);
    Verdict v = ramanujan_mod5_check(10);
    EXPECT_EQ(v.status, Status::pass);
    for (long n = 0; n <= 30; ++n) EXPECT_EQ(partition_count(5 * n + 4) % 5, 0) << n;
}

TEST(ramanujan_mod7, leading_coefficient_and_pass) {
    EXPECT_EQ(partition_count(5), 7);  // 5, 4+1, 3+2, 3+1+1, 2+2+1, 2+1+1+1, 1x5
    Verdict v = ramanujan_mod7_check(10);
    EXPECT_EQ(v.status, Status::pass);
    for (long n = 0; n <= 30; ++n) EXPECT_EQ(partition_count(7 * n + 5) % 7, 0) << n;
}

TEST(prime_partition_scan, agreement_then_discrepancy) {
    EXPECT_FALSE(prime_partition_scan(20).has_value());
    const auto hit = prime_partition_scan(25);
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(hit->n, 21);
    EXPECT_EQ(hit->lhs, 30);
    EXPECT_EQ(hit->rhs, 31);
    // c_2 = d_2 = 1: no discrepancy at the low end
    EXPECT_FALSE(prime_partition_scan(2).has_value());
    EXPECT_THROW(prime_partition_scan(1), std::invalid_argument);
}

TEST(prime_sieve, prefix_sum_bound_and_primality) {
    const auto ps = primes_with_prefix_sum_over(30);
    long sum = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        long divisors = 0;
        for (long d = 1; d <= ps[i]; ++d)
            if (ps[i] % d == 0) ++divisors;
        EXPECT_EQ(divisors, 2) << ps[i];  // trial-division primality
        if (i > 0) EXPECT_GT(ps[i], ps[i - 1]);
        sum += ps[i];
    }
    EXPECT_GT(sum, 30);
}

TEST(exp_sum, examples_and_tail_bound) {
    EXPECT_EQ(exp_sum_partial(0), BigRat(2));  // (1+1)/0!
    const BigRat s60 = exp_sum_partial(60);
    BigInt p40;
    mpz_ui_pow_ui(p40.get_mpz_t(), 10, 40);
    EXPECT_LT(s60.abs(), BigRat(BigInt(1), p40));
    for (long k = 10; k <= 60; ++k)
        ASSERT_LE(exp_sum_partial(k).abs(), exp_sum_tail_bound(k)) << k;
}

/// @file partition.hpp
/// @brief Partition counting and the partition generating-function checks.
#ifndef QRK_PARTITION_HPP
#define QRK_PARTITION_HPP

#include <optional>
#include <vector>

#include "qrk/verdict.hpp"
#include "qrk/xseries.hpp"

namespace qrk {

/// p(0..max_n) filled by Euler's pentagonal-number recurrence.
class PartitionTable {
public:
    explicit PartitionTable(long max_n);
    long max_n() const { return static_cast<long>(values_.size()) - 1; }
    const BigInt& value(long n) const;

private:
    std::vector<BigInt> values_;
};

/// p(n) via the pentagonal recurrence.
BigInt partition_count(long n);

/// Coefficientwise check of sum_n p(5n+4) x^n against
/// 5 prod(1-x^{5k})^5 / prod(1-x^k)^6 up to x^T, plus the mod-5 divisibility
/// corollary for n <= max(30, T).
Verdict ramanujan_mod5_check(int T);

/// Coefficientwise check of sum_n p(7n+5) x^n against
/// 7 prod(1-x^{7k})^3/prod(1-x^k)^4 + 49 x prod(1-x^{7k})^7/prod(1-x^k)^8,
/// plus the mod-7 divisibility corollary.
Verdict ramanujan_mod7_check(int T);

struct PrimePartitionHit {
    long n;
    BigInt lhs;  // coefficient of the prime-partition product
    BigInt rhs;  // coefficient of the staircase sum
};

/// Compares the prime-partition product against the staircase sum for
/// 2 <= n <= T and returns the first disagreement, if any. T >= 2.
std::optional<PrimePartitionHit> prime_partition_scan(int T);

/// Partial sum sum_{k=0}^{K} (-1)^k ((2k+1)^3 + (2k+1)^2)/k! as an exact
/// rational.
BigRat exp_sum_partial(long K);

/// Alternating-tail bound 2((2K+3)^3 + (2K+3)^2)/K! valid for K >= 10.
BigRat exp_sum_tail_bound(long K);

/// Ascending primes until their prefix sum exceeds `bound`.
std::vector<long> primes_with_prefix_sum_over(long bound);

}  // namespace qrk

#endif

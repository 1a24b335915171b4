#include "qrk/partition.hpp"

#include <sstream>

namespace qrk {

PartitionTable::PartitionTable(long max_n) {
    if (max_n < 0) throw std::invalid_argument("PartitionTable: negative bound");
    values_.resize(static_cast<std::size_t>(max_n) + 1);
    values_[0] = 1;
    for (long n = 1; n <= max_n; ++n) {
        BigInt acc(0);
        for (long j = 1;; ++j) {
            const long g1 = j * (3 * j - 1) / 2;
            const long g2 = j * (3 * j + 1) / 2;
            if (g1 > n) break;
            const bool plus = (j % 2) == 1;
            if (plus) acc += values_[static_cast<std::size_t>(n - g1)];
            else acc -= values_[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) {
                if (plus) acc += values_[static_cast<std::size_t>(n - g2)];
                else acc -= values_[static_cast<std::size_t>(n - g2)];
            }
        }
        values_[static_cast<std::size_t>(n)] = acc;
    }
}

const BigInt& PartitionTable::value(long n) const {
    if (n < 0 || n > max_n()) throw std::out_of_range("PartitionTable: index out of range");
    return values_[static_cast<std::size_t>(n)];
}

BigInt partition_count(long n) {
    if (n < 0) throw std::invalid_argument("partition_count: negative argument");
    return PartitionTable(n).value(n);
}

namespace {

BigInt series_int_coeff(const XSeries& s, int n) {
    const QRat& c = s.at(n);
    if (!c.is_poly() || !c.num().is_constant() || !c.num().constant_term().is_integer())
        throw std::logic_error("expected an integer series coefficient");
    return c.num().constant_term().num();
}

Verdict ramanujan_check(int T, long modulus) {
    Verdict v;
    v.mode = "x-series";
    v.params["order"] = T;
    const long corollary_max = std::max<long>(30, T);
    const long step = modulus;                  // 5 or 7
    const long shift = modulus == 5 ? 4 : 5;    // p(5n+4) / p(7n+5)
    PartitionTable table(step * corollary_max + shift);

    XSeries lhs(T);
    for (int n = 0; n <= T; ++n)
        lhs.set(n, QRat(BigRat(table.value(step * n + shift))));

    XSeries rhs(T);
    if (modulus == 5) {
        std::map<long, long> e;
        for (long k = 1; 5 * k <= T; ++k) e[5 * k] += 5;
        for (long k = 1; k <= T; ++k) e[k] -= 6;
        rhs = product_expand(e, T).scaled(QRat(5));
    } else {
        std::map<long, long> e1, e2;
        for (long k = 1; 7 * k <= T; ++k) e1[7 * k] += 3;
        for (long k = 1; k <= T; ++k) e1[k] -= 4;
        for (long k = 1; 7 * k <= T; ++k) e2[7 * k] += 7;
        for (long k = 1; k <= T; ++k) e2[k] -= 8;
        rhs = product_expand(e1, T).scaled(QRat(7)) +
              product_expand(e2, T).scaled(QRat(49)).shifted_x(1);
    }

    for (int n = 0; n <= T; ++n) {
        if (lhs.at(n) != rhs.at(n)) {
            std::ostringstream w;
            w << "lhs=" << lhs.at(n) << " rhs=" << rhs.at(n);
            v.fail_at("x^" + std::to_string(n), w.str());
            return v;
        }
    }
    for (long n = 0; n <= corollary_max; ++n) {
        const BigInt p = table.value(step * n + shift);
        if (p % modulus != 0) {
            v.fail_at("corollary n=" + std::to_string(n),
                      "p(" + std::to_string(step * n + shift) + ")=" + p.get_str() +
                          " not divisible by " + std::to_string(modulus));
            return v;
        }
    }
    v.verified_range = "coefficients 0..x^" + std::to_string(T) + ", corollary n<=" +
                       std::to_string(corollary_max);
    return v;
}

}  // namespace

Verdict ramanujan_mod5_check(int T) {
    Verdict v = ramanujan_check(T, 5);
    v.id = "partitions5";
    return v;
}

Verdict ramanujan_mod7_check(int T) {
    Verdict v = ramanujan_check(T, 7);
    v.id = "partitions7";
    return v;
}

namespace {

bool is_prime_small(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::vector<long> primes_with_prefix_sum_over(long bound) {
    std::vector<long> primes;
    long sum = 0;
    for (long n = 2; sum <= bound; ++n) {
        bool prime = n >= 2;
        for (long p : primes) {
            if (p * p > n) break;
            if (n % p == 0) { prime = false; break; }
        }
        if (prime) {
            primes.push_back(n);
            sum += n;
        }
    }
    return primes;
}

std::optional<PrimePartitionHit> prime_partition_scan(int T) {
    if (T < 2) throw std::invalid_argument("prime_partition_scan: T must be at least 2");
    // The product needs every prime <= T; the staircase only those whose
    // prefix sum stays within T, which is a subset.
    const std::vector<long> primes = primes_with_prefix_sum_over(T);
    std::map<long, long> e;
    for (long p = 2; p <= T; ++p)
        if (is_prime_small(p)) e[p] = -1;
    const XSeries lhs = product_expand(e, T);

    XSeries rhs = XSeries::constant(QRat(1), T);
    XSeries staircase = XSeries::constant(QRat(1), T);  // 1/((1-x)...(1-x^k))
    long prefix = 0;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        prefix += primes[k];
        if (prefix > T) break;
        std::map<long, long> d;
        d[static_cast<long>(k) + 1] = -1;
        staircase *= product_expand(d, T);
        rhs += staircase.shifted_x(prefix);
    }

    for (int n = 2; n <= T; ++n) {
        const BigInt c = series_int_coeff(lhs, n);
        const BigInt d = series_int_coeff(rhs, n);
        if (c != d) return PrimePartitionHit{n, c, d};
    }
    return std::nullopt;
}

BigRat exp_sum_partial(long K) {
    if (K < 0) throw std::invalid_argument("exp_sum_partial: negative bound");
    BigRat acc(0);
    BigInt factorial(1);
    for (long k = 0; k <= K; ++k) {
        if (k > 0) factorial *= k;
        const BigInt m = 2 * k + 1;
        const BigInt term_num = m * m * m + m * m;
        BigRat term(term_num, factorial);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

BigRat exp_sum_tail_bound(long K) {
    if (K < 0) throw std::invalid_argument("exp_sum_tail_bound: negative bound");
    BigInt factorial(1);
    for (long k = 2; k <= K; ++k) factorial *= k;
    const BigInt m = 2 * K + 3;
    return BigRat(2 * (m * m * m + m * m), factorial);
}

}  // namespace qrk

#include "qrk/catalog.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "qrk/partition.hpp"

namespace qrk {

namespace {

QRat qq(long e) { return QRat::var_power(e); }
QRat msign(long k) { return QRat(k % 2 == 0 ? 1 : -1); }
long tri(long k) { return k * (k + 1) / 2; }     // (k+1 choose 2)
long binom2(long k) { return k * (k - 1) / 2; }  // (k choose 2)

BigInt binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigRat rand_rat(std::mt19937_64& g) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    long n = num(g);
    if (n == 0) n = 1;
    return BigRat(n, den(g));
}

Verdict base_verdict(const std::string& mode, std::map<std::string, long> params) {
    Verdict v;
    v.mode = mode;
    v.params = std::move(params);
    return v;
}

void check_series(Verdict& v, const XSeries& lhs, const XSeries& rhs,
                  const std::string& label = {}) {
    const int T = std::min(lhs.order(), rhs.order());
    for (int n = 0; n <= T; ++n) {
        if (lhs.at(n) != rhs.at(n)) {
            std::ostringstream w;
            w << "lhs=" << lhs.at(n) << " rhs=" << rhs.at(n);
            v.fail_at((label.empty() ? "" : label + " ") + "x^" + std::to_string(n), w.str());
            return;
        }
    }
}

void check_exact(Verdict& v, const QRat& lhs, const QRat& rhs, const std::string& where) {
    if (lhs != rhs) v.fail_at(where, "lhs=" + lhs.str() + " rhs=" + rhs.str());
}

/// Truncated q-expansion of a rational function (denominator is a unit at 0
/// by canonicity).
QLaurent qrat_trunc(const QRat& r, long T) {
    if (r.is_zero()) return QLaurent('q');
    if (r.is_poly()) return trunc_tail(r.num(), T);
    return trunc_mul(r.num(), trunc_recip(r.den(), T), T);
}

void check_qtrunc(Verdict& v, const QLaurent& lhs, const QLaurent& rhs, long T,
                  const std::string& label = {}) {
    const QLaurent a = trunc_tail(lhs, T), b = trunc_tail(rhs, T);
    if (a == b) return;
    const QLaurent d = a - b;
    v.fail_at((label.empty() ? "" : label + " ") + "q^" + std::to_string(d.min_exp()),
              "lhs=" + a.coeff(d.min_exp()).str() + " rhs=" + b.coeff(d.min_exp()).str());
}

/// Adaptive sum of x-series terms under the strictly-increasing-valuation
/// contract: a term enters iff its minimal order is <= T.
XSeries adaptive_sum(int T, long k0, const std::function<XSeries(long)>& term) {
    XSeries acc(T);
    std::optional<int> prev;
    for (long k = k0;; ++k) {
        const XSeries t = term(k);
        const auto val = t.valuation();
        if (!val || *val > T) break;
        if (prev && *val <= *prev)
            throw std::logic_error("adaptive sum: non-increasing valuation at term " +
                                   std::to_string(k));
        prev = *val;
        acc += t;
    }
    return acc;
}

/// x^k * f embedded into an order-T series (f computed at order T-k).
XSeries embed(const XSeries& f, long k, int T) {
    XSeries r(T);
    for (int n = 0; n <= f.order() && n + k <= T; ++n) r.set(static_cast<int>(n + k), f.at(n));
    return r;
}

/// recip of (1 -. alpha x)^{count} to order `upto`, embedded at x^k in an
/// order-T series and scaled.
XSeries shifted_recip_term(const QRat& scale, long k, const QRat& alpha, long count, int T) {
    if (k > T) return XSeries(T);
    const XSeries r = series_recip(shifted_x_product(alpha, count, T - static_cast<int>(k)));
    return embed(r.scaled(scale), k, T);
}

XSeries one_plus_ax(const QRat& a, int T);

/// scale * x^k / (1-x)^{exponent} embedded into an order-T series.
XSeries classical_recip_term(const QRat& scale, long k, long exponent, int T) {
    if (k > T) return XSeries(T);
    const XSeries recip =
        series_recip(series_pow(one_plus_ax(QRat(-1), T - static_cast<int>(k)), exponent));
    return embed(recip.scaled(scale), k, T);
}

XSeries geom_series(int T) {  // 1/(1-x)
    XSeries s(T);
    for (int n = 0; n <= T; ++n) s.set(n, QRat(1));
    return s;
}

XSeries one_plus_ax(const QRat& a, int T) {
    XSeries s(T);
    s.set(0, QRat(1));
    if (T >= 1) s.set(1, a);
    return s;
}

QRat qp2(long n) { return QRat(quantum_pow(2, n)); }  // <2^n>

std::vector<std::vector<QRat>> delta_table(std::span<const QRat> a, long ellmax, long width,
                                           const QRat& weight_base) {
    std::vector<std::vector<QRat>> rows;
    rows.emplace_back();
    rows[0].resize(static_cast<std::size_t>(width + ellmax + 1));
    for (std::size_t i = 0; i < rows[0].size(); ++i)
        rows[0][i] = i < a.size() ? a[i] : QRat();
    QRat w(1);
    for (long l = 1; l <= ellmax; ++l) {
        const auto& prev = rows.back();
        std::vector<QRat> cur(prev.size() - 1);
        for (std::size_t k = 0; k < cur.size(); ++k) cur[k] = prev[k + 1] - w * prev[k];
        rows.push_back(std::move(cur));
        w *= weight_base;  // weight q^l when stepping from level l to l+1
    }
    return rows;
}

}  // namespace

QRat delta_op_general(std::span<const QRat> a, long ell, long k, const QRat& weight_base) {
    if (ell < 0 || k < 0) throw std::invalid_argument("delta_op: negative index");
    const auto rows = delta_table(a, ell, k, weight_base);
    return rows[static_cast<std::size_t>(ell)][static_cast<std::size_t>(k)];
}

QRat delta_op(std::span<const BigRat> a, long ell, long k) {
    std::vector<QRat> aa;
    aa.reserve(a.size());
    for (const auto& x : a) aa.emplace_back(x);
    return delta_op_general(aa, ell, k, qq(1));
}

namespace {

Verdict lemma88_part(long kmax, long T) {
    Verdict v = base_verdict("q-series", {{"qorder", T}});
    for (long k = 0; k <= kmax && v.ok(); ++k) {
        QLaurent acc('q');
        for (long s = 0; binom2(s) + s <= T; ++s) {
            const QRat term =
                qq(binom2(s) + s) * q_binomial(k + s, s) / shifted_pow(QRat(1), qq(1), k + s + 1);
            acc += qrat_trunc(term, T);
        }
        check_qtrunc(v, acc, QLaurent(1, 'q'), T, "unit-sum k=" + std::to_string(k));
    }
    return v;
}

}  // namespace

Verdict euler_transform_check(std::span<const BigRat> a, long T) {
    Verdict v = base_verdict("q-series", {{"qorder", T}});
    std::vector<QRat> aa;
    aa.reserve(a.size());
    for (const auto& x : a) aa.emplace_back(x);

    QLaurent lhs('q');
    for (std::size_t k = 0; k < aa.size(); ++k) {
        const long kk = static_cast<long>(k);
        lhs += qrat_trunc(msign(kk) * qq(kk) * aa[k], T);
    }

    const auto rows = delta_table(aa, T, 0, qq(1));
    QLaurent rhs('q');
    for (long l = 0; l <= T; ++l) {
        const QRat d0 = rows[static_cast<std::size_t>(l)][0];
        if (d0.is_zero()) continue;
        rhs += qrat_trunc(msign(l) * qq(l) * d0 / qp2(l + 1), T);
    }
    check_qtrunc(v, lhs, rhs, T, "transform");

    if (v.ok()) {
        Verdict lemma = lemma88_part(8, std::min<long>(T, 16));
        if (!lemma.ok()) {
            v.status = lemma.status;
            v.first_failure = lemma.first_failure;
            v.witness = lemma.witness;
        }
    }
    if (v.ok()) v.verified_range = "q-valuation <= " + std::to_string(T);
    return v;
}

Verdict geometric_check(long N) {
    Verdict v = base_verdict("finite", {{"order", N}});
    QRat acc;
    for (long n = 0; n <= N && v.ok(); ++n) {
        acc += qq(tri(n)) / qp2(n + 1);
        const QRat rhs = QRat(1) - qq(tri(n + 1)) / qp2(n + 1);
        check_exact(v, acc, rhs, "N=" + std::to_string(n));
    }
    if (v.ok()) {
        // classical shadow at q = 1: partial sums of 1/2^{k+1}
        const auto pow2 = [](long e) {
            BigInt r;
            mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
            return r;
        };
        for (long n = 0; n <= N && v.ok(); ++n) {
            BigRat s(0);
            for (long k = 0; k <= n; ++k) s += BigRat(BigInt(1), pow2(k + 1));
            if (s != BigRat(1) - BigRat(BigInt(1), pow2(n + 1)))
                v.fail_at("classical N=" + std::to_string(n), "partial sum mismatch");
        }
    }
    if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
    return v;
}

Verdict knopp_examples_check(long T) {
    Verdict v = base_verdict("q-series", {{"qorder", T}});

    // First example: sum_k (-q)^k/[k+1] = sum_l q^(l+(l+1 choose 2))/([l+1]<2^{l+1}>).
    // The transform term is (-q)^l (D^l a)_0 / <2^{l+1}> with
    // (D^l a)_0 = (-1)^l q^((l+1 choose 2))/[l+1], hence the exponent l + (l+1 choose 2).
    {
        QLaurent lhs('q');
        for (long k = 0; k <= T; ++k) lhs += qrat_trunc(msign(k) * qq(k) / QRat(q_int(k + 1)), T);
        QLaurent rhs('q');
        for (long l = 0; l + tri(l) <= T; ++l)
            rhs += qrat_trunc(qq(l + tri(l)) / QRat(q_int(l + 1) * quantum_pow(2, l + 1)), T);
        check_qtrunc(v, lhs, rhs, T, "qlog2");
    }

    // Its closed-form difference sequence: (D^l a)_k for a_k = 1/[k+1].
    std::vector<QRat> a1;
    for (long k = 0; k <= 14; ++k) a1.emplace_back(QRat(q_int(k + 1)).inverse());
    for (long l = 0; l <= 6 && v.ok(); ++l) {
        for (long k = 0; k <= 4 && v.ok(); ++k) {
            QLaurent denom(1, 'q');
            for (long s = 0; s <= l; ++s) denom *= q_int(k + 1 + s);
            const QRat expect = msign(l) * qq(k * l + tri(l)) * QRat(q_factorial(l)) / QRat(denom);
            check_exact(v, delta_op_general(a1, l, k, qq(1)), expect,
                        "qlog2 D^" + std::to_string(l) + " k=" + std::to_string(k));
        }
    }

    // q = 1 shadow of the transformed series: 1/((l+1) 2^{l+1}).
    for (long l = 0; l <= 8 && v.ok(); ++l) {
        const QRat term = qq(l + tri(l)) / QRat(q_int(l + 1) * quantum_pow(2, l + 1));
        if (term.eval(BigRat(1)) != BigRat(1, (l + 1) * (1L << (l + 1))))
            v.fail_at("qlog2 classical l=" + std::to_string(l), "q=1 term mismatch");
    }

    // Second example in the base Q with q = Q^2:
    // integral form, alternating sum, and transformed sum must agree.
    {
        XSeries den(2);
        den.set(0, QRat(1));
        den.set(2, qq(2));
        XSeries num = XSeries::constant(QRat(1), 0);
        const QLaurent integral = jackson_sum_01(num, den, 2, T);

        QLaurent alt('q');
        for (long k = 0; 2 * k <= T; ++k)
            alt += qrat_trunc(msign(k) * qq(2 * k) / QRat(q_int(2 * k + 1)), T);

        // Transform term (-q)^l (D^l a)_0/<2^{l+1}> with q = Q^2 gives the
        // Q-exponent l^2 + 2l.
        QLaurent transformed('q');
        for (long l = 0; l * l + 2 * l <= T; ++l) {
            QLaurent even_ff(1, 'q'), odd_ff(1, 'q');
            for (long j = 1; j <= l; ++j) even_ff *= q_int(2 * j);
            for (long j = 0; j <= l; ++j) odd_ff *= q_int(2 * j + 1);
            const QLaurent q2pow = quantum_pow(2, l + 1).subst_pow(2);
            transformed += qrat_trunc(qq(l * l + 2 * l) * QRat(even_ff) / QRat(q2pow * odd_ff), T);
        }
        check_qtrunc(v, integral, alt, T, "qpi4 integral-vs-sum");
        check_qtrunc(v, alt, transformed, T, "qpi4 sum-vs-transform");

        // Closed-form difference sequence for a_k = 1/[2k+1]_Q, weight Q^2.
        std::vector<QRat> a2;
        for (long k = 0; k <= 14; ++k) a2.emplace_back(QRat(q_int(2 * k + 1)).inverse());
        for (long l = 0; l <= 5 && v.ok(); ++l) {
            for (long k = 0; k <= 4 && v.ok(); ++k) {
                QLaurent even_ff(1, 'q');
                for (long j = 1; j <= l; ++j) even_ff *= q_int(2 * j);
                QLaurent denom(1, 'q');
                for (long s = 0; s <= l; ++s) denom *= q_int(2 * k + 1 + 2 * s);
                const QRat expect =
                    msign(l) * qq((2 * k + 1) * l + l * (l - 1)) * QRat(even_ff) / QRat(denom);
                check_exact(v, delta_op_general(a2, l, k, qq(2)), expect,
                            "qpi4 D^" + std::to_string(l) + " k=" + std::to_string(k));
            }
        }

        // q = 1 shadow: (2l)!!/(2^{l+1}(2l+1)!!).
        for (long l = 0; l <= 8 && v.ok(); ++l) {
            BigRat ff(1);  // (2l)!!/(2l+1)!!
            for (long j = 1; j <= l; ++j) ff *= BigRat(2 * j, 2 * j + 1);
            const BigRat expect = ff * BigRat(1, 1L << (l + 1));
            QLaurent even_ff(1, 'q'), odd_ff(1, 'q');
            for (long j = 1; j <= l; ++j) even_ff *= q_int(2 * j);
            for (long j = 0; j <= l; ++j) odd_ff *= q_int(2 * j + 1);
            const QLaurent q2pow = quantum_pow(2, l + 1).subst_pow(2);
            const QRat term = qq(l * l + 2 * l) * QRat(even_ff) / QRat(q2pow * odd_ff);
            if (term.eval(BigRat(1)) != expect)
                v.fail_at("qpi4 classical l=" + std::to_string(l), "q=1 term mismatch");
        }
    }

    if (v.ok()) v.verified_range = "q-valuation <= " + std::to_string(T);
    return v;
}

BigRat odd_harmonic(long N) {
    BigRat s(0);
    for (long m = 1; m <= N; m += 2) s += BigRat(1, m);
    return s;
}

BigRat harmonic_skip3(long N) {
    BigRat s(0);
    for (long k = 1; k <= N; ++k)
        if (k % 3 != 0) s += BigRat(1, k);
    return s;
}

QRat q_odd_harmonic(long N) {
    QRat s;
    for (long m = 1; m <= N; m += 2) s += qq(m) / QRat(q_int(m));
    return s;
}

XSeries eq26_lhs(int T) {
    XSeries s(T);
    for (int m = 1; m <= T; m += 2) s.set(m, QRat(q_int(m)).inverse());
    return s;
}

XSeries eq26_rhs(int T) {
    return adaptive_sum(T, 0, [&](long k) {
        const QRat c = msign(k) * shifted_pow(QRat(1), qq(1), k) / QRat(q_int(k + 1));
        return shifted_recip_term(c, k + 1, QRat(1), k + 1, T);
    });
}

XSeries eq14_lhs(int T) {
    XSeries s(T);
    for (int m = 0; m <= T; m += 2) s.set(m, QRat(1));
    return s;
}

XSeries eq14_rhs(int T) {
    return adaptive_sum(T, 0, [&](long k) {
        const QRat c = msign(k) * shifted_pow(QRat(1), qq(1), k);
        return shifted_recip_term(c, k, QRat(1), k + 2, T);
    });
}

XSeries eq35_lhs(const BigRat& a, int T) {
    XSeries minus_x(T), ax(T);
    if (T >= 1) {
        minus_x.set(1, QRat(-1));
        ax.set(1, QRat(a));
    }
    return -series_qlog(minus_x) + series_qlog(ax);
}

XSeries eq35_rhs(const BigRat& a, int T) {
    return adaptive_sum(T, 0, [&](long k) {
        const QRat c = msign(k) * shifted_pow(QRat(a), QRat(1), k + 1) / QRat(q_int(k + 1));
        return shifted_recip_term(c, k + 1, QRat(1), k + 1, T);
    });
}

XSeries eq33_lhs(const BigRat& a, int T) {
    return geom_series(T) + series_recip(one_plus_ax(QRat(a), T)).scaled(QRat(a));
}

XSeries eq33_rhs(const BigRat& a, int T) {
    return adaptive_sum(T, 0, [&](long k) {
        const QRat c = msign(k) * shifted_pow(QRat(a), QRat(1), k + 1);
        return shifted_recip_term(c, k, QRat(1), k + 2, T);
    });
}

const Catalog& Catalog::instance() {
    static const Catalog catalog;
    return catalog;
}

void Catalog::add(IdentityRecord rec) {
    const std::string id = rec.id;
    records_.emplace(id, std::move(rec));
}

std::vector<std::string> Catalog::ids() const {
    std::vector<std::string> out;
    out.reserve(records_.size());
    for (const auto& [id, rec] : records_) out.push_back(id);
    return out;
}

bool Catalog::has(const std::string& id) const {
    return records_.count(id) != 0;
}

const IdentityRecord& Catalog::record(const std::string& id) const {
    auto it = records_.find(id);
    if (it == records_.end()) throw std::invalid_argument("unknown identity id '" + id + "'");
    return it->second;
}

Verdict Catalog::verify(const std::string& id,
                        const std::map<std::string, long>& overrides) const {
    const IdentityRecord& rec = record(id);
    Params p{rec.defaults};
    for (const auto& [k, val] : overrides) p.values[k] = val;
    const auto start = std::chrono::steady_clock::now();
    Verdict v = rec.run(p);
    const auto stop = std::chrono::steady_clock::now();
    v.id = rec.id;
    v.mode = rec.mode;
    v.params = p.values;
    v.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return v;
}

std::vector<Verdict> Catalog::verify_all() const {
    std::vector<Verdict> out;
    out.reserve(records_.size());
    for (const auto& [id, rec] : records_) out.push_back(verify(id));
    return out;
}

Catalog::Catalog() {
    // --- classical identities -------------------------------------------

    add({"eq2", "sum_{k=1..N} C(N,k)(-2)^(k-1)/k = G_N,  G_N = sum_{2s+1<=N} 1/(2s+1)",
         "finite", {{"order", 20}}, [](const Params& P) {
             const long N = P.get("order", 20);
             Verdict v = base_verdict("finite", {{"order", N}});
             for (long n = 1; n <= N && v.ok(); ++n) {
                 BigRat lhs(0);
                 for (long k = 1; k <= n; ++k)
                     lhs += BigRat(binom(n, k)) * BigRat::pow(BigRat(-2), k - 1) * BigRat(1, k);
                 if (lhs != odd_harmonic(n))
                     v.fail_at("N=" + std::to_string(n),
                               "lhs=" + lhs.str() + " rhs=" + odd_harmonic(n).str());
             }
             if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
             return v;
         }});

    add({"eq7", "sum_{N>=1} G_N x^N = log((1+x)/(1-x)) / (2(1-x))", "x-series",
         {{"order", 24}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             XSeries lhs(T);
             for (int n = 1; n <= T; ++n) lhs.set(n, QRat(odd_harmonic(n)));
             const XSeries ratio = one_plus_ax(QRat(1), T) * series_recip(one_plus_ax(QRat(-1), T));
             const XSeries rhs =
                 series_log(ratio) * geom_series(T).scaled(QRat(BigRat(1, 2)));
             check_series(v, lhs, rhs);
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq41", "sum_{k<=N, 3!|k} 1/k = sum_{k=1..N} (-3)^(k-1)/k C(N+k,2k)", "finite",
         {{"order", 20}}, [](const Params& P) {
             const long N = P.get("order", 20);
             Verdict v = base_verdict("finite", {{"order", N}});
             for (long n = 1; n <= N && v.ok(); ++n) {
                 BigRat rhs(0);
                 for (long k = 1; k <= n; ++k)
                     rhs += BigRat::pow(BigRat(-3), k - 1) * BigRat(1, k) * BigRat(binom(n + k, 2 * k));
                 if (harmonic_skip3(n) != rhs)
                     v.fail_at("N=" + std::to_string(n),
                               "lhs=" + harmonic_skip3(n).str() + " rhs=" + rhs.str());
             }
             if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
             return v;
         }});

    add({"eq42",
         "sum_{k=1..N} C(N,k)(-1)^(k-1)/k - sum_{k=1..N} (-1)^(k-1)/k = sum_{k<=N/2} 1/k",
         "finite", {{"order", 30}}, [](const Params& P) {
             const long N = P.get("order", 30);
             Verdict v = base_verdict("finite", {{"order", N}});
             for (long n = 1; n <= N && v.ok(); ++n) {
                 BigRat lhs(0);
                 for (long k = 1; k <= n; ++k) {
                     const BigRat s = k % 2 == 1 ? BigRat(1) : BigRat(-1);
                     lhs += s * (BigRat(binom(n, k)) - BigRat(1)) * BigRat(1, k);
                 }
                 BigRat rhs(0);
                 for (long k = 1; k <= n / 2; ++k) rhs += BigRat(1, k);
                 if (lhs != rhs)
                     v.fail_at("N=" + std::to_string(n), "lhs=" + lhs.str() + " rhs=" + rhs.str());
             }
             if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
             return v;
         }});

    add({"eq44", "log(1-x) + log(1+x) = log(1-x^2)", "x-series", {{"order", 24}},
         [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             XSeries one_minus_x2 = XSeries::constant(QRat(1), T);
             if (T >= 2) one_minus_x2.set(2, QRat(-1));
             const XSeries lhs =
                 series_log(one_plus_ax(QRat(-1), T)) + series_log(one_plus_ax(QRat(1), T));
             check_series(v, lhs, series_log(one_minus_x2));
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq54",
         "sum x^k/k - sum x^(3k)/(3k) = sum_{k>=1} (-1)^(k-1) 3^(k-1) x^k / (k (1-x)^(2k))",
         "x-series", {{"order", 24}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             XSeries lhs(T);
             for (long k = 1; k <= T; ++k) {
                 lhs.set(static_cast<int>(k), lhs.at(static_cast<int>(k)) + QRat(BigRat(1, k)));
                 if (3 * k <= T)
                     lhs.set(static_cast<int>(3 * k),
                             lhs.at(static_cast<int>(3 * k)) - QRat(BigRat(1, 3 * k)));
             }
             const XSeries rhs = adaptive_sum(T, 1, [&](long k) {
                 const QRat c = msign(k - 1) * QRat(BigRat::pow(BigRat(3), k - 1) * BigRat(1, k));
                 return classical_recip_term(c, k, 2 * k, T);
             });
             check_series(v, lhs, rhs);
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    // --- shifted-product series identities ------------------------------

    add({"eq14", "sum_{s>=0} x^(2s) = sum_{k>=0} (-1)^k (1+.q)^k x^k / (1-.x)^(k+2)",
         "x-series", {{"order", 24}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             check_series(v, eq14_lhs(T), eq14_rhs(T));
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq16", "1/(1+x) = sum_{k>=0} (-1)^k (1+.q)^k x^k / (1-.qx)^(k+1)", "x-series",
         {{"order", 24}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             const XSeries lhs = series_recip(one_plus_ax(QRat(1), T));
             const XSeries rhs = adaptive_sum(T, 0, [&](long k) {
                 const QRat c = msign(k) * shifted_pow(QRat(1), qq(1), k);
                 return shifted_recip_term(c, k, qq(1), k + 1, T);
             });
             check_series(v, lhs, rhs);
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq19", "sum_{k=0..N} [N,k] (-1)^k (1+.q)^k q^(N-k) = (-1)^N", "finite",
         {{"order", 15}}, [](const Params& P) {
             const long N = P.get("order", 15);
             Verdict v = base_verdict("finite", {{"order", N}});
             for (long n = 0; n <= N && v.ok(); ++n) {
                 QRat s;
                 for (long k = 0; k <= n; ++k)
                     s += q_binomial(n, k) * msign(k) * shifted_pow(QRat(1), qq(1), k) * qq(n - k);
                 check_exact(v, s, msign(n), "N=" + std::to_string(n));
             }
             if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
             return v;
         }});

    add({"eq20", "sum_{k=0..N} [N,k] (-q)^k (1+.q)^(N-k) = 1", "finite", {{"order", 15}},
         [](const Params& P) {
             const long N = P.get("order", 15);
             Verdict v = base_verdict("finite", {{"order", N}});
             for (long n = 0; n <= N && v.ok(); ++n) {
                 QRat s;
                 for (long k = 0; k <= n; ++k)
                     s += q_binomial(n, k) * msign(k) * qq(k) * shifted_pow(QRat(1), qq(1), n - k);
                 check_exact(v, s, QRat(1), "N=" + std::to_string(n));
             }
             if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
             return v;
         }});

    add({"eq21", "sum [N,k] a^k (b+.v)^(N-k) = sum [N,k] b^k (a+.v)^(N-k)", "finite",
         {{"order", 8}, {"seed", 21}, {"trials", 3}}, [](const Params& P) {
             const long N = P.get("order", 8);
             const long trials = P.get("trials", 3);
             Verdict v = base_verdict("finite", {{"order", N}, {"seed", P.get("seed", 21)}});
             std::mt19937_64 rng(static_cast<unsigned long>(P.get("seed", 21)));
             for (long t = 0; t < trials && v.ok(); ++t) {
                 const QRat a(rand_rat(rng)), b(rand_rat(rng)), w(rand_rat(rng));
                 for (long n = 0; n <= N && v.ok(); ++n) {
                     QRat lhs, rhs;
                     for (long k = 0; k <= n; ++k) {
                         const QRat c = q_binomial(n, k);
                         lhs += c * a.pow(k) * shifted_pow(b, w, n - k);
                         rhs += c * b.pow(k) * shifted_pow(a, w, n - k);
                     }
                     check_exact(v, lhs, rhs, "trial " + std::to_string(t) + " N=" + std::to_string(n));
                 }
             }
             if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
             return v;
         }});

    add({"eq23", "sum [N,k] (a+.u)^k (b+.v)^(N-k) = sum [N,k] (b+.u)^k (a+.v)^(N-k)",
         "finite", {{"order", 8}, {"seed", 23}, {"trials", 3}}, [](const Params& P) {
             const long N = P.get("order", 8);
             const long trials = P.get("trials", 3);
             Verdict v = base_verdict("finite", {{"order", N}, {"seed", P.get("seed", 23)}});
             std::mt19937_64 rng(static_cast<unsigned long>(P.get("seed", 23)));
             for (long t = 0; t < trials && v.ok(); ++t) {
                 const QRat a(rand_rat(rng)), b(rand_rat(rng)), u(rand_rat(rng)), w(rand_rat(rng));
                 for (long n = 0; n <= N && v.ok(); ++n) {
                     QRat lhs, rhs;
                     for (long k = 0; k <= n; ++k) {
                         const QRat c = q_binomial(n, k);
                         lhs += c * shifted_pow(a, u, k) * shifted_pow(b, w, n - k);
                         rhs += c * shifted_pow(b, u, k) * shifted_pow(a, w, n - k);
                     }
                     check_exact(v, lhs, rhs, "trial " + std::to_string(t) + " N=" + std::to_string(n));
                 }
             }
             if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
             return v;
         }});

    add({"eq26",
         "sum_{s>=0} x^(2s+1)/[2s+1] = sum_{k>=0} (-1)^k (1+.q)^k x^(k+1) / ([k+1] (1-.x)^(k+1))",
         "x-series", {{"order", 24}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             check_series(v, eq26_lhs(T), eq26_rhs(T));
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq31",
         "g_N = sum_{2s+1<=N} q^(2s+1)/[2s+1] = sum_{k=1..N} [N,k] (-1)^(k-1) (1+.q)^(k-1) q^k/[k]",
         "finite", {{"order", 20}}, [](const Params& P) {
             const long N = P.get("order", 20);
             Verdict v = base_verdict("finite", {{"order", N}});
             for (long n = 1; n <= N && v.ok(); ++n) {
                 QRat rhs;
                 for (long k = 1; k <= n; ++k)
                     rhs += q_binomial(n, k) * msign(k - 1) * shifted_pow(QRat(1), qq(1), k - 1) *
                            qq(k) / QRat(q_int(k));
                 check_exact(v, q_odd_harmonic(n), rhs, "N=" + std::to_string(n));
             }
             if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
             return v;
         }});

    add({"eq33", "1/(1-x) + a/(1+ax) = sum_{k>=0} (-x)^k (a+.1)^(k+1) / (1-.x)^(k+2)",
         "x-series", {{"order", 24}, {"seed", 33}, {"trials", 3}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             const long trials = P.get("trials", 3);
             Verdict v = base_verdict("x-series", {{"order", T}, {"seed", P.get("seed", 33)}});
             std::mt19937_64 rng(static_cast<unsigned long>(P.get("seed", 33)));
             for (long t = 0; t < trials && v.ok(); ++t) {
                 const BigRat a = rand_rat(rng);
                 check_series(v, eq33_lhs(a, T), eq33_rhs(a, T), "a=" + a.str());
             }
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq34", "1 + (-1)^N a^(N+1) = sum_{k=0..N} [N+1,k+1] (-1)^k (a+.1)^(k+1)", "finite",
         {{"order", 15}, {"seed", 34}, {"trials", 3}}, [](const Params& P) {
             const long N = P.get("order", 15);
             const long trials = P.get("trials", 3);
             Verdict v = base_verdict("finite", {{"order", N}, {"seed", P.get("seed", 34)}});
             std::mt19937_64 rng(static_cast<unsigned long>(P.get("seed", 34)));
             for (long t = 0; t < trials && v.ok(); ++t) {
                 const QRat a(rand_rat(rng));
                 for (long n = 0; n <= N && v.ok(); ++n) {
                     QRat rhs;
                     for (long k = 0; k <= n; ++k)
                         rhs += q_binomial(n + 1, k + 1) * msign(k) * shifted_pow(a, QRat(1), k + 1);
                     check_exact(v, QRat(1) + msign(n) * a.pow(n + 1), rhs,
                                 "trial " + std::to_string(t) + " N=" + std::to_string(n));
                 }
             }
             if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
             return v;
         }});

    add({"eq35",
         "-Log(1-x) + Log(1+ax) = sum_{k>=0} (-1)^k x^(k+1) (a+.1)^(k+1) / ([k+1] (1-.x)^(k+1))",
         "x-series", {{"order", 24}, {"seed", 35}, {"trials", 3}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             const long trials = P.get("trials", 3);
             Verdict v = base_verdict("x-series", {{"order", T}, {"seed", P.get("seed", 35)}});
             std::mt19937_64 rng(static_cast<unsigned long>(P.get("seed", 35)));
             for (long t = 0; t < trials && v.ok(); ++t) {
                 const BigRat a = rand_rat(rng);
                 check_series(v, eq35_lhs(a, T), eq35_rhs(a, T), "a=" + a.str());
             }
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq37",
         "Log(1+ax) - Log(1+bx) = sum_{k>=0} (-1)^k x^(k+1) ((a+.1)^(k+1) - (b+.1)^(k+1)) / "
         "([k+1] (1-.x)^(k+1))",
         "x-series", {{"order", 24}, {"seed", 37}, {"trials", 3}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             const long trials = P.get("trials", 3);
             Verdict v = base_verdict("x-series", {{"order", T}, {"seed", P.get("seed", 37)}});
             std::mt19937_64 rng(static_cast<unsigned long>(P.get("seed", 37)));
             for (long t = 0; t < trials && v.ok(); ++t) {
                 const BigRat a = rand_rat(rng), b = rand_rat(rng);
                 XSeries ax(T), bx(T);
                 if (T >= 1) {
                     ax.set(1, QRat(a));
                     bx.set(1, QRat(b));
                 }
                 const XSeries lhs = series_qlog(ax) - series_qlog(bx);
                 const XSeries rhs = adaptive_sum(T, 0, [&](long k) {
                     const QRat diff = shifted_pow(QRat(a), QRat(1), k + 1) -
                                       shifted_pow(QRat(b), QRat(1), k + 1);
                     const QRat c = msign(k) * diff / QRat(q_int(k + 1));
                     return shifted_recip_term(c, k + 1, QRat(1), k + 1, T);
                 });
                 check_series(v, lhs, rhs, "a=" + a.str() + " b=" + b.str());
             }
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    // --- the three-sum chain --------------------------------------------

    add({"eq46",
         "sum [N,k](-1)^(k-1) q^((k+1 choose 2))/[k] = sum (-1)^(k-1) q^k/[k] + "
         "sum_{k<=N/2} 2 q^(2k)/[2k]",
         "finite", {{"order", 20}}, [](const Params& P) {
             const long N = P.get("order", 20);
             Verdict v = base_verdict("finite", {{"order", N}});
             for (long n = 1; n <= N && v.ok(); ++n) {
                 QRat lhs, rhs;
                 for (long k = 1; k <= n; ++k)
                     lhs += q_binomial(n, k) * msign(k - 1) * qq(tri(k)) / QRat(q_int(k));
                 for (long k = 1; k <= n; ++k) rhs += msign(k - 1) * qq(k) / QRat(q_int(k));
                 for (long k = 1; 2 * k <= n; ++k) rhs += QRat(2) * qq(2 * k) / QRat(q_int(2 * k));
                 check_exact(v, lhs, rhs, "N=" + std::to_string(n));
             }
             if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
             return v;
         }});

    add({"eq49",
         "sum_{k>=1} (-1)^(k-1) t^k q^((k choose 2)) / ([k](1-.t)^k) = sum (-1)^(k-1) t^k/[k] "
         "+ sum 2 t^(2k)/[2k]",
         "x-series", {{"order", 24}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             const XSeries lhs = adaptive_sum(T, 1, [&](long k) {
                 const QRat c = msign(k - 1) * qq(binom2(k)) / QRat(q_int(k));
                 return shifted_recip_term(c, k, QRat(1), k, T);
             });
             XSeries rhs(T);
             for (long k = 1; k <= T; ++k)
                 rhs.set(static_cast<int>(k), msign(k - 1) / QRat(q_int(k)));
             for (long k = 1; 2 * k <= T; ++k)
                 rhs.set(static_cast<int>(2 * k),
                         rhs.at(static_cast<int>(2 * k)) + QRat(2) / QRat(q_int(2 * k)));
             check_series(v, lhs, rhs);
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq50",
         "sum_{k>=1} (-t)^(k-1) q^((k choose 2)) / (1-.t)^(k+1) = sum (-t)^(k-1) + 2 sum t^(2k-1)",
         "x-series", {{"order", 24}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             const XSeries lhs = adaptive_sum(T, 1, [&](long k) {
                 const QRat c = msign(k - 1) * qq(binom2(k));
                 return shifted_recip_term(c, k - 1, QRat(1), k + 1, T);
             });
             XSeries rhs(T);
             for (long j = 0; j <= T; ++j) rhs.set(static_cast<int>(j), msign(j));
             for (long k = 1; 2 * k - 1 <= T; ++k)
                 rhs.set(static_cast<int>(2 * k - 1),
                         rhs.at(static_cast<int>(2 * k - 1)) + QRat(2));
             check_series(v, lhs, rhs);
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq51", "sum_{k>=0} (-t)^k q^((k+1 choose 2)) / (1-.t)^(k+2) = 1/(1-t)", "x-series",
         {{"order", 24}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             const XSeries lhs = adaptive_sum(T, 0, [&](long k) {
                 const QRat c = msign(k) * qq(tri(k));
                 return shifted_recip_term(c, k, QRat(1), k + 2, T);
             });
             check_series(v, lhs, geom_series(T));
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq53", "sum [N,k](-1)^(k-1) q^((k+1 choose 2))/[k] = sum_{k=1..N} q^k/[k]", "finite",
         {{"order", 20}}, [](const Params& P) {
             const long N = P.get("order", 20);
             Verdict v = base_verdict("finite", {{"order", N}});
             for (long n = 1; n <= N && v.ok(); ++n) {
                 QRat lhs, rhs;
                 for (long k = 1; k <= n; ++k) {
                     lhs += q_binomial(n, k) * msign(k - 1) * qq(tri(k)) / QRat(q_int(k));
                     rhs += qq(k) / QRat(q_int(k));
                 }
                 check_exact(v, lhs, rhs, "N=" + std::to_string(n));
             }
             if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
             return v;
         }});

    // --- quantum powers of 3 --------------------------------------------

    add({"eq56",
         "sum_{k!=0 mod 3} x^k/[k] = sum_{k>=1} (-1)^(k-1) <3^(k-1)> q^(-(k choose 2)) x^k / "
         "([k](1-.q^(-k)x)^(2k))",
         "x-series", {{"order", 24}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             XSeries lhs(T);
             for (long k = 1; k <= T; ++k)
                 if (k % 3 != 0) lhs.set(static_cast<int>(k), QRat(q_int(k)).inverse());
             const XSeries rhs = adaptive_sum(T, 1, [&](long k) {
                 const QRat c = msign(k - 1) * QRat(quantum_pow(3, k - 1)) * qq(-binom2(k)) /
                                QRat(q_int(k));
                 return shifted_recip_term(c, k, qq(-k), 2 * k, T);
             });
             check_series(v, lhs, rhs);
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq60",
         "1/(1-x^3) = sum_{k>=0} (-x)^k <3^k> q^(-(k+1 choose 2)) / (1-.q^(-k-1)x)^(2k+3)",
         "x-series", {{"order", 24}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             XSeries lhs(T);
             for (int m = 0; m <= T; m += 3) lhs.set(m, QRat(1));
             const XSeries rhs = adaptive_sum(T, 0, [&](long k) {
                 const QRat c = msign(k) * QRat(quantum_pow(3, k)) * qq(-tri(k));
                 return shifted_recip_term(c, k, qq(-k - 1), 2 * k + 3, T);
             });
             check_series(v, lhs, rhs);
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq62",
         "(1+x+x^2) S_N = 1/(1-x) + (-1)^N x^(N+1) <3^(N+1)> q^(-(N+2 choose 2)) / "
         "(1-.q^(-N-1)x)^(2N+3)",
         "x-series", {{"order", 24}, {"nmax", 6}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             const long nmax = P.get("nmax", 6);
             Verdict v = base_verdict("x-series", {{"order", T}, {"nmax", nmax}});
             XSeries one_plus_x_x2 = XSeries::constant(QRat(1), T);
             if (T >= 1) one_plus_x_x2.set(1, QRat(1));
             if (T >= 2) one_plus_x_x2.set(2, QRat(1));
             XSeries partial(T);
             for (long n = 0; n <= nmax && v.ok(); ++n) {
                 const QRat c = msign(n) * QRat(quantum_pow(3, n)) * qq(-tri(n));
                 partial += shifted_recip_term(c, n, qq(-n - 1), 2 * n + 3, T);
                 const QRat tail = msign(n) * QRat(quantum_pow(3, n + 1)) * qq(-tri(n + 1));
                 const XSeries rhs =
                     geom_series(T) + shifted_recip_term(tail, n + 1, qq(-n - 1), 2 * n + 3, T);
                 check_series(v, one_plus_x_x2 * partial, rhs, "N=" + std::to_string(n));
             }
             if (v.ok())
                 v.verified_range = "N <= " + std::to_string(nmax) + ", x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq66",
         "sum_{k=0..N} (-1)^k q^(-(k+1 choose 2)) <3^k> q^(-(k+1)(N-k)) [N+k+2, 2k+2] = "
         "(N = 0 mod 3), invariant under q -> 1/q",
         "finite", {{"order", 15}}, [](const Params& P) {
             const long N = P.get("order", 15);
             Verdict v = base_verdict("finite", {{"order", N}});
             for (long n = 0; n <= N && v.ok(); ++n) {
                 QRat sum;
                 for (long k = 0; k <= n && v.ok(); ++k) {
                     const QRat term = msign(k) * qq(-tri(k)) * QRat(quantum_pow(3, k)) *
                                       qq(-(k + 1) * (n - k)) * q_binomial(n + k + 2, 2 * k + 2);
                     check_exact(v, term.subst_pow(-1), term,
                                 "inversion N=" + std::to_string(n) + " k=" + std::to_string(k));
                     sum += term;
                 }
                 check_exact(v, sum, QRat(n % 3 == 0 ? 1 : 0), "N=" + std::to_string(n));
             }
             if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
             return v;
         }});

    // --- the collected ladder -------------------------------------------

    add({"eq67.1",
         "1/(1-x) = sum (-x)^k/(1-x)^(k+2) = sum (-x)^k q^((k+1 choose 2)) <1^k>/(1-.x)^(k+2)",
         "x-series", {{"order", 24}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             const XSeries lhs = geom_series(T);
             const XSeries classical = adaptive_sum(T, 0, [&](long k) {
                 return classical_recip_term(msign(k), k, k + 2, T);
             });
             check_series(v, lhs, classical, "classical");
             const XSeries quantum = adaptive_sum(T, 0, [&](long k) {
                 const QRat c = msign(k) * qq(tri(k)) * QRat(quantum_pow(1, k));
                 return shifted_recip_term(c, k, QRat(1), k + 2, T);
             });
             check_series(v, lhs, quantum, "quantum");
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq67.2",
         "1/(1-x^2) = sum (-x)^k 2^k/(1-x)^(k+2) = sum (-x)^k <2^k>/(1-.x)^(k+2)", "x-series",
         {{"order", 24}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             const XSeries lhs = eq14_lhs(T);
             const XSeries classical = adaptive_sum(T, 0, [&](long k) {
                 const QRat c = msign(k) * QRat(BigRat::pow(BigRat(2), k));
                 return classical_recip_term(c, k, k + 2, T);
             });
             check_series(v, lhs, classical, "classical");
             const XSeries quantum = adaptive_sum(T, 0, [&](long k) {
                 const QRat c = msign(k) * QRat(quantum_pow(2, k));
                 return shifted_recip_term(c, k, QRat(1), k + 2, T);
             });
             check_series(v, lhs, quantum, "quantum");
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq67.3",
         "1/(1-x^3) = sum (-x)^k 3^k/(1-x)^(2k+3) = sum (-x)^k q^(-(k+1 choose 2)) "
         "<3^k>/(1-.q^(-k-1)x)^(2k+3)",
         "x-series", {{"order", 24}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 24));
             Verdict v = base_verdict("x-series", {{"order", T}});
             XSeries lhs(T);
             for (int m = 0; m <= T; m += 3) lhs.set(m, QRat(1));
             const XSeries classical = adaptive_sum(T, 0, [&](long k) {
                 const QRat c = msign(k) * QRat(BigRat::pow(BigRat(3), k));
                 return classical_recip_term(c, k, 2 * k + 3, T);
             });
             check_series(v, lhs, classical, "classical");
             const XSeries quantum = adaptive_sum(T, 0, [&](long k) {
                 const QRat c = msign(k) * QRat(quantum_pow(3, k)) * qq(-tri(k));
                 return shifted_recip_term(c, k, qq(-k - 1), 2 * k + 3, T);
             });
             check_series(v, lhs, quantum, "quantum");
             if (v.ok()) v.verified_range = "x^0..x^" + std::to_string(T);
             return v;
         }});

    add({"eq77", "<(2L)^inf> / (<L^inf> <2^inf>) = prod_{n!=0 mod L} (1+q^n)^(-1), L in {2,3}",
         "q-series", {{"qorder", 24}}, [](const Params& P) {
             const long T = P.get("qorder", 24);
             Verdict v = base_verdict("q-series", {{"qorder", T}});
             for (long L = 2; L <= 3 && v.ok(); ++L) {
                 const QLaurent top = quantum_pow_inf(2 * L, T);
                 const QLaurent bottom =
                     trunc_mul(quantum_pow_inf(L, T), quantum_pow_inf(2, T), T);
                 const QLaurent lhs = trunc_mul(top, trunc_recip(bottom, T), T);
                 QLaurent prod(1, 'q');
                 for (long n = 1; n <= T; ++n) {
                     if (n % L == 0) continue;
                     prod = trunc_mul(prod, QLaurent(1, 'q') + QLaurent::monomial(BigRat(1), n, 'q'),
                                      T);
                 }
                 check_qtrunc(v, lhs, trunc_recip(prod, T), T, "L=" + std::to_string(L));
             }
             if (v.ok()) v.verified_range = "q-valuation <= " + std::to_string(T);
             return v;
         }});

    add({"eq79", "sum_{k>=0} q^((k+1 choose 2)) / <2^(k+1)> = 1", "q-series", {{"qorder", 24}},
         [](const Params& P) {
             const long T = P.get("qorder", 24);
             Verdict v = base_verdict("q-series", {{"qorder", T}});
             QLaurent acc('q');
             for (long k = 0; tri(k) <= T; ++k) acc += qrat_trunc(qq(tri(k)) / qp2(k + 1), T);
             check_qtrunc(v, acc, QLaurent(1, 'q'), T);
             if (v.ok()) v.verified_range = "q-valuation <= " + std::to_string(T);
             return v;
         }});

    add({"eq80", "sum_{k=0..N} q^((k+1 choose 2))/<2^(k+1)> = 1 - q^((N+2 choose 2))/<2^(N+1)>",
         "finite", {{"order", 20}}, [](const Params& P) {
             Verdict v = geometric_check(P.get("order", 20));
             return v;
         }});

    add({"eq84", "sum_k (-q)^k a_k = sum_l (-q)^l (D^l a)_0 / <2^(l+1)>", "q-series",
         {{"qorder", 24}, {"seed", 84}, {"trials", 3}}, [](const Params& P) {
             const long T = P.get("qorder", 24);
             const long trials = P.get("trials", 3);
             Verdict v = base_verdict("q-series", {{"qorder", T}, {"seed", P.get("seed", 84)}});
             const std::vector<std::vector<BigRat>> fixed = {{BigRat(1)}, {BigRat(1), BigRat(1)}};
             std::vector<std::vector<BigRat>> cases = fixed;
             std::mt19937_64 rng(static_cast<unsigned long>(P.get("seed", 84)));
             for (long t = 0; t < trials; ++t) {
                 std::vector<BigRat> a;
                 std::uniform_int_distribution<long> len(1, 6);
                 const long n = len(rng);
                 for (long i = 0; i < n; ++i) a.push_back(rand_rat(rng));
                 cases.push_back(std::move(a));
             }
             for (std::size_t i = 0; i < cases.size() && v.ok(); ++i) {
                 Verdict inner = euler_transform_check(cases[i], T);
                 if (!inner.ok())
                     v.fail_at("sequence " + std::to_string(i),
                               inner.first_failure.value_or("") + ": " + inner.witness.value_or(""));
             }
             if (v.ok()) v.verified_range = "q-valuation <= " + std::to_string(T);
             return v;
         }});

    add({"eq88", "sum_{s>=0} q^((s choose 2)+s) [k+s,s] / (1+.q)^(k+s+1) = 1 for all k",
         "q-series", {{"qorder", 24}, {"kmax", 8}}, [](const Params& P) {
             const long T = P.get("qorder", 24);
             Verdict v = lemma88_part(P.get("kmax", 8), T);
             if (v.ok()) v.verified_range = "k <= " + std::to_string(P.get("kmax", 8)) +
                                            ", q-valuation <= " + std::to_string(T);
             return v;
         }});

    add({"eq91b", "sum_k (-q)^k/[k+1] = sum_l q^(l+(l+1 choose 2)) / ([l+1] <2^(l+1)>)",
         "q-series", {{"qorder", 24}}, [](const Params& P) {
             const long T = P.get("qorder", 24);
             Verdict v = base_verdict("q-series", {{"qorder", T}});
             QLaurent lhs('q');
             for (long k = 0; k <= T; ++k)
                 lhs += qrat_trunc(msign(k) * qq(k) / QRat(q_int(k + 1)), T);
             QLaurent rhs('q');
             for (long l = 0; l + tri(l) <= T; ++l)
                 rhs += qrat_trunc(qq(l + tri(l)) / QRat(q_int(l + 1) * quantum_pow(2, l + 1)), T);
             check_qtrunc(v, lhs, rhs, T);
             if (v.ok()) v.verified_range = "q-valuation <= " + std::to_string(T);
             return v;
         }});

    add({"eq92b",
         "(1-Q) sum_j Q^j/(1+Q^(2j+2)) = sum_k (-Q^2)^k/[2k+1] = sum_l Q^(l^2+2l) [2l]!! / "
         "(<2^(l+1)>_{Q^2} [2l+1]!!)",
         "q-series", {{"qorder", 24}}, [](const Params& P) {
             const long T = P.get("qorder", 24);
             Verdict v = knopp_examples_check(T);
             if (v.ok()) v.verified_range = "q-valuation <= " + std::to_string(T);
             return v;
         }});

    add({"eq110", "[n,k] = sum_{s=0..k} [n+1,k-s] (-1)^s q^(s(n-k)) q^((s+1 choose 2))",
         "finite", {{"order", 12}}, [](const Params& P) {
             const long N = P.get("order", 12);
             Verdict v = base_verdict("finite", {{"order", N}});
             for (long n = 0; n <= N && v.ok(); ++n)
                 for (long k = 0; k <= n && v.ok(); ++k) {
                     QRat rhs;
                     for (long s = 0; s <= k; ++s)
                         rhs += q_binomial(n + 1, k - s) * msign(s) * qq(s * (n - k) + tri(s));
                     check_exact(v, q_binomial(n, k), rhs,
                                 "n=" + std::to_string(n) + " k=" + std::to_string(k));
                 }
             if (v.ok()) v.verified_range = "0 <= k <= n <= " + std::to_string(N);
             return v;
         }});

    add({"gauss",
         "sum_{l=0..N} [N,l](-1)^l = 0 for odd N, (1-q)(1-q^3)...(1-q^(2m-1)) for N = 2m",
         "finite", {{"order", 16}}, [](const Params& P) {
             const long N = P.get("order", 16);
             Verdict v = base_verdict("finite", {{"order", N}});
             for (long n = 0; n <= N && v.ok(); ++n) {
                 QRat s;
                 for (long l = 0; l <= n; ++l) s += q_binomial(n, l) * msign(l);
                 const QRat want = (n % 2 == 1) ? QRat::zero('q') : poch(qq(1), qq(2), n / 2);
                 check_exact(v, s, want, "N=" + std::to_string(n));
             }
             if (v.ok()) v.verified_range = "N <= " + std::to_string(N);
             return v;
         }});

    // --- partition identities ---------------------------------------------

    add({"partitions5",
         "p(4) + p(9)x + p(14)x^2 + ... = 5 prod(1-x^(5k))^5 / prod(1-x^k)^6", "x-series",
         {{"order", 50}}, [](const Params& P) {
             return ramanujan_mod5_check(static_cast<int>(P.get("order", 50)));
         }});

    add({"partitions7",
         "p(5) + p(12)x + p(19)x^2 + ... = 7 prod(1-x^(7k))^3/prod(1-x^k)^4 + "
         "49x prod(1-x^(7k))^7/prod(1-x^k)^8",
         "x-series", {{"order", 50}}, [](const Params& P) {
             return ramanujan_mod7_check(static_cast<int>(P.get("order", 50)));
         }});

    add({"prime-partition",
         "prod (1-x^(p_k))^(-1) = 1 + sum_k x^(p_1+...+p_k)/((1-x)...(1-x^k))  [false at n=21]",
         "known-false", {{"order", 30}}, [](const Params& P) {
             const int T = static_cast<int>(P.get("order", 30));
             Verdict v = base_verdict("known-false", {{"order", T}});
             const auto hit = prime_partition_scan(T);
             if (!hit) {
                 if (T >= 21) {
                     v.fail_at("scan to " + std::to_string(T),
                               "expected first discrepancy at n=21, none found");
                 } else {
                     v.verified_range = "agrees for 2 <= n <= " + std::to_string(T);
                 }
                 return v;
             }
             if (hit->n == 21 && hit->lhs == 30 && hit->rhs == 31) {
                 v.status = Status::known_false_confirmed;
                 v.first_failure = "n=21";
                 v.witness = "lhs=30 rhs=31";
                 v.verified_range = "agrees for 2 <= n <= 20";
             } else {
                 v.fail_at("n=" + std::to_string(hit->n),
                           "lhs=" + hit->lhs.get_str() + " rhs=" + hit->rhs.get_str() +
                               " (expected discrepancy at n=21: 30 vs 31)");
             }
             return v;
         }});

    add({"exp-sum-zero",
         "sum_{k>=0} (-1)^k ((2k+1)^3 + (2k+1)^2)/k! = 0  (certified by the alternating-tail "
         "bound)",
         "numeric", {{"order", 60}}, [](const Params& P) {
             const long K = P.get("order", 60);
             Verdict v = base_verdict("numeric", {{"order", K}});
             const BigRat s = exp_sum_partial(K);
             BigInt p10;
             mpz_ui_pow_ui(p10.get_mpz_t(), 10, 40);
             if (!(s.abs() < BigRat(BigInt(1), p10)))
                 v.fail_at("K=" + std::to_string(K), "|S_K| = " + s.abs().str() + " >= 10^-40");
             for (long k = 10; k <= K && v.ok(); ++k) {
                 if (!(exp_sum_partial(k).abs() <= exp_sum_tail_bound(k)))
                     v.fail_at("tail bound K=" + std::to_string(k),
                               "partial sum exceeds the alternating-tail bound");
             }
             if (v.ok())
                 v.verified_range = "|S_" + std::to_string(K) + "| < 10^-40, bound for 10 <= K <= " +
                                    std::to_string(K);
             return v;
         }});
}

}  // namespace qrk

/// @file catalog.hpp
/// @brief Registry binding every identity in the kit to a parameterized
/// verification procedure.
#ifndef QRK_CATALOG_HPP
#define QRK_CATALOG_HPP

#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qrk/qkit.hpp"
#include "qrk/verdict.hpp"
#include "qrk/xseries.hpp"

namespace qrk {

/// Parameter bag for a verification run.
struct Params {
    std::map<std::string, long> values;
    long get(const std::string& key, long fallback) const {
        auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
};

struct IdentityRecord {
    std::string id;
    std::string statement;  // the identity in ASCII math
    std::string mode;       // x-series | q-series | finite | congruence | numeric | known-false
    std::map<std::string, long> defaults;
    std::function<Verdict(const Params&)> run;
};

/// q-deformed iterated difference (D^l a)_k with (D^{l+1} a)_k =
/// (D^l a)_{k+1} - w^l (D^l a)_k, weight base w (default: q itself).
QRat delta_op_general(std::span<const QRat> a, long ell, long k, const QRat& weight_base);

/// Spec surface over rational sequences with weight base q.
QRat delta_op(std::span<const BigRat> a, long ell, long k);

/// Checks sum_k (-q)^k a_k = sum_l (-q)^l (D^l a)_0 / <2^{l+1}> as q-adic
/// series to valuation T, plus the unit-sum lemma for k <= 8.
Verdict euler_transform_check(std::span<const BigRat> a, long T);

/// Exact partial-sum identity sum_{k=0}^{N} q^{(k+1 choose 2)}/<2^{k+1}> =
/// 1 - q^{(N+2 choose 2)}/<2^{N+1}> for all N up to the given bound.
Verdict geometric_check(long N);

/// The two Euler-transform showcase sums (the q-log 2 analog and the
/// q = Q^2 quarter-pi analog) with their closed-form difference sequences.
Verdict knopp_examples_check(long T);

class Catalog {
public:
    static const Catalog& instance();

    std::vector<std::string> ids() const;
    bool has(const std::string& id) const;
    /// Throws std::invalid_argument for an unknown id.
    const IdentityRecord& record(const std::string& id) const;

    Verdict verify(const std::string& id,
                   const std::map<std::string, long>& overrides = {}) const;
    std::vector<Verdict> verify_all() const;

private:
    Catalog();
    void add(IdentityRecord rec);
    std::map<std::string, IdentityRecord> records_;
};

/// Harmonic-style partial sums used by the classical identities.
BigRat odd_harmonic(long N);            // sum of 1/(2s+1) for 2s+1 <= N
BigRat harmonic_skip3(long N);          // sum of 1/k for k <= N, k not divisible by 3
QRat q_odd_harmonic(long N);            // sum of q^{2s+1}/[2s+1] for 2s+1 <= N

/// Builders shared by records and the derivation-chain tests.
XSeries eq26_lhs(int T);
XSeries eq26_rhs(int T);
XSeries eq14_lhs(int T);
XSeries eq14_rhs(int T);
XSeries eq35_lhs(const BigRat& a, int T);
XSeries eq35_rhs(const BigRat& a, int T);
XSeries eq33_lhs(const BigRat& a, int T);
XSeries eq33_rhs(const BigRat& a, int T);

}  // namespace qrk

#endif

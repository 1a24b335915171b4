#include "qrk/qnt.hpp"

#include <numeric>
#include <sstream>

namespace qrk {

ModElem reduce_mod(const QLaurent& f, long m) {
    if (m < 2) throw std::invalid_argument("reduce_mod: modulus must be at least 2");
    if (!f.integer_coeffs())
        throw std::invalid_argument("reduce_mod: non-integer coefficients");
    std::vector<BigRat> folded(static_cast<std::size_t>(m));
    for (long e = f.min_exp(); e <= f.degree(); ++e) {
        const BigRat& c = f.coeff(e);
        if (c.is_zero()) continue;
        const long r = ((e % m) + m) % m;
        folded[static_cast<std::size_t>(r)] += c;
    }
    const BigRat top = folded[static_cast<std::size_t>(m - 1)];
    if (!top.is_zero())
        for (auto& c : folded) c -= top;
    folded.pop_back();
    return ModElem{m, QLaurent::from_coeffs(0, std::move(folded), 'q')};
}

ModElem mod_add(const ModElem& a, const ModElem& b) {
    if (a.m != b.m) throw std::invalid_argument("mod_add: modulus mismatch");
    return reduce_mod(a.residue + b.residue, a.m);
}

ModElem mod_mul(const ModElem& a, const ModElem& b) {
    if (a.m != b.m) throw std::invalid_argument("mod_mul: modulus mismatch");
    return reduce_mod(a.residue * b.residue, a.m);
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long euler_phi(long m) {
    long count = 0;
    for (long r = 1; r < m; ++r)
        if (std::gcd(r, m) == 1) ++count;
    return count;
}

std::vector<long> coprime_residues(long m) {
    std::vector<long> rs;
    for (long r = 1; r < m; ++r)
        if (std::gcd(r, m) == 1) rs.push_back(r);
    return rs;
}

namespace {

// [a]_{q^r} with the r = 0 degeneration [a]_1 = a.
QLaurent q_int_base(long a, long r) {
    return r == 0 ? QLaurent(a, 'q') : q_int(a, r);
}

void expect_residue(Verdict& v, const ModElem& got, const ModElem& want,
                    const std::string& label) {
    if (got != want)
        v.fail_at(label, "residue " + got.str() + ", expected " + want.str());
}

}  // namespace

Verdict q_fermat_check(long a, long p) {
    if (!is_prime(p)) throw std::invalid_argument("q_fermat_check: p must be prime");
    if (a < 1) throw std::invalid_argument("q_fermat_check: a must be positive");
    Verdict v;
    v.id = "q-fermat";
    v.mode = "congruence";
    v.params["a"] = a;
    v.params["p"] = p;
    // <a^n> reduced incrementally factor by factor.
    ModElem acc = reduce_mod(QLaurent(1, 'q'), p);
    for (long k = 1; k <= p - 1; ++k) acc = mod_mul(acc, reduce_mod(q_int(a, k), p));
    if (a % p != 0) {
        expect_residue(v, acc, reduce_mod(QLaurent(1, 'q'), p), "<a^(p-1)> = 1");
        acc = mod_mul(acc, reduce_mod(q_int(a, p), p));
        expect_residue(v, acc, reduce_mod(QLaurent(a, 'q'), p), "<a^p> = a");
    } else {
        acc = mod_mul(acc, reduce_mod(q_int(a, p), p));
        expect_residue(v, acc, reduce_mod(QLaurent('q'), p), "<a^p> = 0");
        expect_residue(v, reduce_mod(q_int(a), p), reduce_mod(QLaurent('q'), p), "[a] = 0");
    }
    if (v.ok()) v.verified_range = "a=" + std::to_string(a) + ", p=" + std::to_string(p);
    return v;
}

Verdict q_euler_check(long a, long m) {
    if (m < 2) throw std::invalid_argument("q_euler_check: m must be at least 2");
    if (a < 1 || std::gcd(a, m) != 1)
        throw std::invalid_argument("q_euler_check: a must be positive and coprime to m");
    Verdict v;
    v.id = "q-euler";
    v.mode = "congruence";
    v.params["a"] = a;
    v.params["m"] = m;
    ModElem acc = reduce_mod(QLaurent(1, 'q'), m);
    for (long r : coprime_residues(m)) acc = mod_mul(acc, reduce_mod(q_int(a, r), m));
    expect_residue(v, acc, reduce_mod(QLaurent(1, 'q'), m), "prod [a]_{q^r} = 1");
    if (v.ok()) v.verified_range = "a=" + std::to_string(a) + ", m=" + std::to_string(m);
    return v;
}

ModElem modp_solve(long a, std::size_t j, const ModElem& b, long m) {
    if (std::gcd(a, m) != 1) throw std::invalid_argument("modp_solve: a not coprime to m");
    if (b.m != m) throw std::invalid_argument("modp_solve: residue modulus mismatch");
    const std::vector<long> rs = coprime_residues(m);
    if (j >= rs.size()) throw std::invalid_argument("modp_solve: residue index out of range");
    ModElem x = reduce_mod(b.residue, m);
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (i == j) continue;
        x = mod_mul(x, reduce_mod(q_int(a, rs[i]), m));
    }
    const ModElem check = mod_mul(reduce_mod(q_int(a, rs[j]), m), x);
    if (check != reduce_mod(b.residue, m))
        throw std::logic_error("modp_solve: verification of the solution failed");
    return x;
}

std::vector<long> inverse_table(long p) {
    if (!is_prime(p)) throw std::invalid_argument("inverse_table: p must be prime");
    std::vector<long> inv(static_cast<std::size_t>(p), 0);
    for (long a = 1; a < p; ++a)
        for (long x = 1; x < p; ++x)
            if ((a * x) % p == 1) {
                inv[static_cast<std::size_t>(a)] = x;
                break;
            }
    return inv;
}

Verdict q_wilson_check(long p) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("q_wilson_check: p must be an odd prime");
    Verdict v;
    v.id = "q-wilson";
    v.mode = "congruence";
    v.params["p"] = p;
    const std::vector<long> inv = inverse_table(p);
    ModElem acc = reduce_mod(QLaurent(1, 'q'), p);
    for (long a = 1; a < p; ++a)
        acc = mod_mul(acc, reduce_mod(q_int_base(a, inv[static_cast<std::size_t>(a)] - 1), p));
    const ModElem minus_qinv = reduce_mod(QLaurent::monomial(BigRat(-1), -1, 'q'), p);
    const ModElem pm1 = reduce_mod(q_int(p - 1), p);
    expect_residue(v, acc, minus_qinv, "prod = -q^-1");
    expect_residue(v, acc, pm1, "prod = [p-1]");
    expect_residue(v, minus_qinv, pm1, "-q^-1 = [p-1]");
    if (v.ok()) v.verified_range = "p=" + std::to_string(p);
    return v;
}

namespace {

// prod over factors (1 + c_i x) of x-polynomials with QLaurent coefficients.
std::vector<QLaurent> linear_product(const std::vector<QLaurent>& cs) {
    std::vector<QLaurent> poly{QLaurent(1, 'q')};
    for (const QLaurent& c : cs) {
        std::vector<QLaurent> next(poly.size() + 1, QLaurent('q'));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i] * c;
        }
        poly = std::move(next);
    }
    return poly;
}

}  // namespace

Verdict special_congruences_check(long p) {
    if (!is_prime(p) || p == 2)
        throw std::invalid_argument("special_congruences_check: p must be an odd prime");
    Verdict v;
    v.id = "special-congruences";
    v.mode = "congruence";
    v.params["p"] = p;
    const ModElem zero = reduce_mod(QLaurent('q'), p);
    const ModElem one = reduce_mod(QLaurent(1, 'q'), p);

    // (1 -. q)^{p-1} = p
    QLaurent sp(1, 'q');
    for (long i = 0; i < p - 1; ++i)
        sp *= QLaurent(1, 'q') - QLaurent::monomial(BigRat(1), i + 1, 'q');
    expect_residue(v, reduce_mod(sp, p), reduce_mod(QLaurent(p, 'q'), p), "(1-.q)^(p-1) = p");

    // [p,k] = 0 for 0 < k < p
    for (long k = 1; k < p; ++k) {
        const QRat b = q_binomial(p, k);
        expect_residue(v, reduce_mod(b.num(), p), zero,
                       "[p," + std::to_string(k) + "] = 0");
    }

    // [p-1,k] = (-1)^k q^{-(k+1 choose 2)}
    for (long k = 0; k <= p - 1; ++k) {
        const QRat b = q_binomial(p - 1, k);
        const QLaurent rhs =
            QLaurent::monomial(BigRat(k % 2 == 0 ? 1 : -1), -(k + 1) * k / 2, 'q');
        expect_residue(v, reduce_mod(b.num(), p), reduce_mod(rhs, p),
                       "[p-1," + std::to_string(k) + "]");
    }

    // (1 -. qx)^{p-1} = (1-x^p)/(1-x) coefficientwise in x
    {
        std::vector<QLaurent> factors;
        for (long i = 1; i <= p - 1; ++i)
            factors.push_back(QLaurent::monomial(BigRat(-1), i, 'q'));
        const std::vector<QLaurent> lhs = linear_product(factors);
        for (long j = 0; j <= p - 1; ++j)
            expect_residue(v, reduce_mod(lhs[static_cast<std::size_t>(j)], p), one,
                           "(1-.qx)^(p-1) coeff x^" + std::to_string(j));
    }

    // (1 +. x)^p = 1 + x^p coefficientwise in x
    {
        std::vector<QLaurent> factors;
        for (long i = 0; i <= p - 1; ++i)
            factors.push_back(QLaurent::monomial(BigRat(1), i, 'q'));
        const std::vector<QLaurent> lhs = linear_product(factors);
        for (long j = 0; j <= p; ++j) {
            const ModElem want = (j == 0 || j == p) ? one : zero;
            expect_residue(v, reduce_mod(lhs[static_cast<std::size_t>(j)], p), want,
                           "(1+.x)^p coeff x^" + std::to_string(j));
        }
    }

    // For p = 1 (mod 4): [a]_{q^{-1-a}} [a]_{q^{-1+a}} = -q^{1-a}, a^2 = -1 (mod p)
    if (p % 4 == 1) {
        for (long a = 2; a < p; ++a) {
            if ((a * a + 1) % p != 0) continue;
            const QLaurent prod = q_int(a, -1 - a) * q_int(a, -1 + a);
            const QLaurent rhs = QLaurent::monomial(BigRat(-1), 1 - a, 'q');
            expect_residue(v, reduce_mod(prod, p), reduce_mod(rhs, p),
                           "imaginary-unit product, a=" + std::to_string(a));
        }
    }

    if (v.ok()) v.verified_range = "p=" + std::to_string(p);
    return v;
}

ChiPolynomial chi_poly(long p) {
    if (!is_prime(p)) throw std::invalid_argument("chi_poly: p must be prime");
    QLaurent phi(1, 'y');
    for (long k = 1; k <= p - 1; ++k)
        phi *= QLaurent::monomial(BigRat(1), k, 'y') - QLaurent(1, 'y');
    phi -= QLaurent(p, 'y');
    std::vector<BigRat> ones(static_cast<std::size_t>(p), BigRat(1));
    const QLaurent psi = QLaurent::from_coeffs(0, std::move(ones), 'y');
    // For p = 2 the division is inexact (remainder -4); the error propagates.
    const QLaurent chi = poly_exact_div(phi, psi);
    return ChiPolynomial{p, chi};
}

}  // namespace qrk

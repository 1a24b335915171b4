/// @file qnt.hpp
/// @brief Arithmetic in Z[q] mod [m] = 1+q+...+q^{m-1} and the q-analogs of
/// the Fermat, Euler and Wilson congruences.
#ifndef QRK_QNT_HPP
#define QRK_QNT_HPP

#include <vector>

#include "qrk/qkit.hpp"
#include "qrk/verdict.hpp"

namespace qrk {

/// Canonical residue in Z[q]/([m]): an integer-coefficient polynomial of
/// degree <= m-2 (basis 1, q, ..., q^{m-2}). Equality is structural.
struct ModElem {
    long m = 2;
    QLaurent residue{'q'};

    friend bool operator==(const ModElem& a, const ModElem& b) {
        return a.m == b.m && a.residue == b.residue;
    }
    friend bool operator!=(const ModElem& a, const ModElem& b) { return !(a == b); }
    std::string str() const { return residue.str(); }
};

/// Folds exponents with q^m = 1 and eliminates the q^{m-1} coefficient with
/// multiples of [m]. Laurent inputs are accepted (q^{-1} = q^{m-1}); rational
/// coefficients are rejected.
ModElem reduce_mod(const QLaurent& f, long m);

ModElem mod_add(const ModElem& a, const ModElem& b);
ModElem mod_mul(const ModElem& a, const ModElem& b);

bool is_prime(long n);
long euler_phi(long m);
/// Positive integers below m coprime to m, ascending.
std::vector<long> coprime_residues(long m);

/// q-Fermat: for gcd(a,p)=1 checks <a^{p-1}> = 1 and <a^p> = a mod [p];
/// otherwise checks <a^p> = 0 and [a] = 0 mod [p]. p must be prime.
Verdict q_fermat_check(long a, long p);

/// q-Euler: prod over residues r coprime to m of [a]_{q^r} = 1 mod [m];
/// requires gcd(a,m) = 1.
Verdict q_euler_check(long a, long m);

/// Solution x = b prod_{i != j} [a]_{q^{r_i}} of [a]_{q^{r_j}} x = b mod [m];
/// the congruence is re-verified before returning. j is a 0-based index into
/// coprime_residues(m).
ModElem modp_solve(long a, std::size_t j, const ModElem& b, long m);

/// Modular inverses 1..p-1 -> 1..p-1 (index 0 unused).
std::vector<long> inverse_table(long p);

/// q-Wilson: prod_{a=1}^{p-1} [a]_{q^{abar-1}} = -q^{-1} = [p-1] mod [p],
/// both forms. p must be an odd prime.
Verdict q_wilson_check(long p);

/// The bundle of congruences without classical analogs: the (1-.q)^{p-1},
/// [p,k], [p-1,k], (1-.qx)^{p-1}, (1+.x)^p checks, and for p = 1 (mod 4) the
/// [a]_{q^{-1-a}}[a]_{q^{-1+a}} = -q^{1-a} product with a^2 = -1 (mod p).
Verdict special_congruences_check(long p);

/// chi_p = (prod_{k=1}^{p-1}(y^k - 1) - p) / (1 + y + ... + y^{p-1}), exact.
struct ChiPolynomial {
    long p;
    QLaurent chi;  // variable y, degree (p-1 choose 2)
};

/// Throws exact_division_error for p = 2 (remainder -4) and
/// std::invalid_argument for composite p.
ChiPolynomial chi_poly(long p);

}  // namespace qrk

#endif

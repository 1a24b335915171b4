#include "qrk/qlaurent.hpp"

#include <ostream>
#include <sstream>

namespace qrk {

namespace {
const BigRat kZero{};
}

QLaurent::QLaurent(const BigRat& c, char var) : var_(var) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

QLaurent QLaurent::monomial(const BigRat& c, long exp, char var) {
    QLaurent p(var);
    if (!c.is_zero()) {
        p.min_exp_ = exp;
        p.coeffs_.push_back(c);
    }
    return p;
}

QLaurent QLaurent::from_coeffs(long min_exp, std::vector<BigRat> coeffs, char var) {
    QLaurent p(var);
    p.min_exp_ = min_exp;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

void QLaurent::trim() {
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo].is_zero()) ++lo;
    std::size_t hi = coeffs_.size();
    while (hi > lo && coeffs_[hi - 1].is_zero()) --hi;
    if (lo == hi) {
        coeffs_.clear();
        min_exp_ = 0;
        return;
    }
    if (lo > 0 || hi < coeffs_.size()) {
        coeffs_ = std::vector<BigRat>(coeffs_.begin() + static_cast<long>(lo),
                                      coeffs_.begin() + static_cast<long>(hi));
        min_exp_ += static_cast<long>(lo);
    }
}

const BigRat& QLaurent::coeff(long exp) const {
    const long i = exp - min_exp_;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

bool QLaurent::integer_coeffs() const {
    for (const auto& c : coeffs_)
        if (!c.is_integer()) return false;
    return true;
}

char QLaurent::joint_var(const QLaurent& a, const QLaurent& b) {
    if (a.is_constant()) return b.is_constant() ? a.var_ : b.var_;
    if (b.is_constant()) return a.var_;
    if (a.var_ != b.var_)
        throw std::invalid_argument(std::string("QLaurent: variable mismatch '") + a.var_ +
                                    "' vs '" + b.var_ + "'");
    return a.var_;
}

QLaurent QLaurent::operator-() const {
    QLaurent r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    const char v = joint_var(*this, o);
    if (o.is_zero()) { var_ = v; return *this; }
    if (is_zero()) { *this = o; var_ = v; return *this; }
    const long lo = std::min(min_exp_, o.min_exp_);
    const long hi = std::max(degree(), o.degree());
    std::vector<BigRat> out(static_cast<std::size_t>(hi - lo + 1));
    for (long e = min_exp_; e <= degree(); ++e) out[static_cast<std::size_t>(e - lo)] = coeff(e);
    for (long e = o.min_exp_; e <= o.degree(); ++e)
        out[static_cast<std::size_t>(e - lo)] += o.coeff(e);
    min_exp_ = lo;
    coeffs_ = std::move(out);
    var_ = v;
    trim();
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    return *this += -o;
}

QLaurent operator*(const QLaurent& a, const QLaurent& b) {
    const char v = QLaurent::joint_var(a, b);
    QLaurent r(v);
    if (a.is_zero() || b.is_zero()) return r;
    r.min_exp_ = a.min_exp_ + b.min_exp_;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

QLaurent QLaurent::scaled(const BigRat& c) const {
    if (c.is_zero()) return QLaurent(var_);
    QLaurent r(*this);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

QLaurent QLaurent::shifted(long k) const {
    if (is_zero()) return *this;
    QLaurent r(*this);
    r.min_exp_ += k;
    return r;
}

QLaurent QLaurent::subst_pow(long r) const {
    if (r == 0) throw std::invalid_argument("QLaurent: substitution exponent must be nonzero");
    if (r == 1 || is_zero()) return *this;
    QLaurent out(var_);
    for (long e = min_exp_; e <= degree(); ++e) {
        const BigRat& c = coeff(e);
        if (!c.is_zero()) out += monomial(c, r * e, var_);
    }
    return out;
}

BigRat QLaurent::eval(const BigRat& v) const {
    if (is_zero()) return BigRat(0);
    if (v.is_zero()) {
        if (min_exp_ < 0)
            throw std::domain_error("QLaurent: negative exponent evaluated at 0");
        return coeff(0);
    }
    // Horner over the stored run, then the min_exp shift.
    BigRat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
    return acc * BigRat::pow(v, min_exp_);
}

bool operator==(const QLaurent& a, const QLaurent& b) {
    if (a.coeffs_.empty() && b.coeffs_.empty()) return true;
    if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_) return false;
    return a.min_exp_ == b.min_exp_ && a.coeffs_ == b.coeffs_;
}

std::string QLaurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long e = min_exp_; e <= degree(); ++e) {
        const BigRat& c = coeff(e);
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const BigRat a = c.abs();
        if (e == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << '*';
            os << var_;
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QLaurent& p) {
    return os << p.str();
}

QLaurent trunc_tail(const QLaurent& a, long order) {
    if (a.is_zero() || a.degree() <= order) return a;
    if (a.min_exp() > order) return QLaurent(a.var());
    std::vector<BigRat> out;
    out.reserve(static_cast<std::size_t>(order - a.min_exp() + 1));
    for (long e = a.min_exp(); e <= order; ++e) out.push_back(a.coeff(e));
    return QLaurent::from_coeffs(a.min_exp(), std::move(out), a.var());
}

QLaurent trunc_mul(const QLaurent& a, const QLaurent& b, long order) {
    return trunc_tail(trunc_tail(a, order) * trunc_tail(b, order), order);
}

QLaurent trunc_recip(const QLaurent& a, long order) {
    if (a.is_zero() || a.min_exp() != 0)
        throw std::domain_error("trunc_recip: argument is not a unit power series");
    const BigRat c0inv = a.constant_term().inverse();
    std::vector<BigRat> b(static_cast<std::size_t>(order + 1));
    b[0] = c0inv;
    for (long n = 1; n <= order; ++n) {
        BigRat s(0);
        const long jmax = std::min<long>(n, a.degree());
        for (long j = 1; j <= jmax; ++j) {
            const BigRat& aj = a.coeff(j);
            if (!aj.is_zero()) s += aj * b[static_cast<std::size_t>(n - j)];
        }
        b[static_cast<std::size_t>(n)] = -s * c0inv;
    }
    return QLaurent::from_coeffs(0, std::move(b), a.var());
}

}  // namespace qrk

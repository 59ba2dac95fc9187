#include "smalltl/scalars.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <utility>

namespace smalltl {

namespace {

size_t hash_mix(size_t h, size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

size_t hash_mpz(const mpz_class& z) {
    // Stable within a process run; collisions are harmless (hash use only).
    size_t h = mpz_fdiv_ui(z.get_mpz_t(), 2147483647UL);
    if (sgn(z) < 0) h = ~h;
    return h;
}

size_t hash_mpq(const mpq_class& v) {
    return hash_mix(hash_mpz(v.get_num()), hash_mpz(v.get_den()));
}

}  // namespace

// ---------------------------------------------------------------------------
// LaurentPoly
// ---------------------------------------------------------------------------

void LaurentPoly::trim() {
    size_t b = 0, e = coeffs_.size();
    while (b < e && coeffs_[b] == 0) ++b;
    while (e > b && coeffs_[e - 1] == 0) --e;
    if (b == e) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    if (e != coeffs_.size()) coeffs_.resize(e);
    if (b != 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(b));
        low_ += static_cast<int>(b);
    }
}

LaurentPoly LaurentPoly::monomial(mpz_class c, int exp) {
    LaurentPoly p;
    if (c != 0) {
        p.low_ = exp;
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

int LaurentPoly::low_exp() const {
    if (is_zero()) throw Error("low_exp of zero polynomial");
    return low_;
}

int LaurentPoly::high_exp() const {
    if (is_zero()) throw Error("high_exp of zero polynomial");
    return low_ + static_cast<int>(coeffs_.size()) - 1;
}

int LaurentPoly::term_count() const {
    int n = 0;
    for (const auto& c : coeffs_)
        if (c != 0) ++n;
    return n;
}

mpz_class LaurentPoly::coeff(int exp) const {
    if (is_zero() || exp < low_ || exp > high_exp()) return 0;
    return coeffs_[static_cast<size_t>(exp - low_)];
}

const mpz_class& LaurentPoly::leading() const {
    if (is_zero()) throw Error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly p(*this);
    p += o;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    int lo = std::min(low_, o.low_);
    int hi = std::max(high_exp(), o.high_exp());
    std::vector<mpz_class> out(static_cast<size_t>(hi - lo + 1));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        out[static_cast<size_t>(low_ - lo) + i] = std::move(coeffs_[i]);
    for (size_t i = 0; i < o.coeffs_.size(); ++i)
        out[static_cast<size_t>(o.low_ - lo) + i] += o.coeffs_[i];
    low_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    LaurentPoly p;
    p.low_ = low_ + o.low_;
    p.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            p.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p(*this);
    if (!p.is_zero()) p.low_ += k;
    return p;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero()) return coeffs_.size() <=> o.coeffs_.size();
    if (auto c = low_ <=> o.low_; c != 0) return c;
    if (auto c = coeffs_.size() <=> o.coeffs_.size(); c != 0) return c;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int s = cmp(coeffs_[i], o.coeffs_[i]);
        if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

mpz_class LaurentPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& d) const {
    if (d.is_zero()) throw Error("division by zero polynomial");
    if (is_zero()) return {};
    if (coeffs_.size() < d.coeffs_.size()) throw Error("inexact polynomial division");
    LaurentPoly q;
    q.low_ = low_ - d.low_;
    std::vector<mpz_class> rem = coeffs_;
    size_t dl = d.coeffs_.size();
    q.coeffs_.assign(rem.size() - dl + 1, mpz_class(0));
    const mpz_class& lc = d.coeffs_.back();
    for (size_t i = q.coeffs_.size(); i-- > 0;) {
        mpz_class& top = rem[i + dl - 1];
        if (top == 0) continue;
        mpz_class qi, r;
        mpz_fdiv_qr(qi.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
        if (r != 0) throw Error("inexact polynomial division");
        q.coeffs_[i] = qi;
        for (size_t j = 0; j < dl; ++j) rem[i + j] -= qi * d.coeffs_[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw Error("inexact polynomial division");
    q.trim();
    return q;
}

namespace {

// Plain integer polynomial utilities on coefficient vectors (low exp = 0).
using ZVec = std::vector<mpz_class>;

void zv_trim(ZVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

ZVec zv_primitive(ZVec v) {
    zv_trim(v);
    if (v.empty()) return v;
    mpz_class g = 0;
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (v.back() < 0) g = -g;
    for (auto& c : v) c /= g;
    return v;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
ZVec zv_prem(ZVec a, const ZVec& b) {
    long e = static_cast<long>(a.size()) - static_cast<long>(b.size()) + 1;
    const mpz_class& lb = b.back();
    while (true) {
        zv_trim(a);
        if (a.size() < b.size()) break;
        size_t k = a.size() - b.size();
        mpz_class la = a.back();
        for (auto& c : a) c *= lb;
        for (size_t j = 0; j < b.size(); ++j) a[k + j] -= la * b[j];
        --e;
    }
    if (e > 0) {
        mpz_class f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
        for (auto& c : a) c *= f;
    }
    return a;
}

}  // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    auto plain = [](const LaurentPoly& p) {
        ZVec v = p.coeffs_;
        return zv_primitive(std::move(v));
    };
    ZVec x = plain(a), y = plain(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        ZVec r = zv_prem(x, y);
        x = std::move(y);
        y = zv_primitive(std::move(r));
    }
    LaurentPoly g;
    g.low_ = 0;
    g.coeffs_ = std::move(x);
    g.trim();
    return g;
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        int e = low_ + static_cast<int>(i);
        mpz_class ab = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            os << ab.get_str();
        } else {
            if (ab != 1) os << ab.get_str() << "*";
            os << "A";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

size_t LaurentPoly::hash() const {
    size_t h = 0xa17c;
    if (is_zero()) return h;
    h = hash_mix(h, static_cast<size_t>(static_cast<long>(low_)) * 2 + 1);
    for (const auto& c : coeffs_) h = hash_mix(h, hash_mpz(c));
    return h;
}

// ---------------------------------------------------------------------------
// cyclotomic_polynomial
// ---------------------------------------------------------------------------

LaurentPoly cyclotomic_polynomial(int r) {
    if (r < 1) throw IndexOutOfRange("cyclotomic_polynomial: order must be positive");
    static std::mutex mu;
    static std::map<int, LaurentPoly> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;

    // Phi_r = (A^r - 1) / prod_{d | r, d < r} Phi_d, computed recursively
    // under the lock (recursion only touches proper divisors).
    std::function<LaurentPoly(int)> phi = [&](int n) -> LaurentPoly {
        auto jt = cache.find(n);
        if (jt != cache.end()) return jt->second;
        LaurentPoly num =
            LaurentPoly::monomial(1, n) + LaurentPoly::monomial(-1, 0);
        for (int d = 1; d < n; ++d)
            if (n % d == 0) num = num.divide_exact(phi(d));
        cache.emplace(n, num);
        return num;
    };
    return phi(r);
}

// ---------------------------------------------------------------------------
// GenericScalar
// ---------------------------------------------------------------------------

GenericScalar GenericScalar::fraction(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw Error("GenericScalar: zero denominator");
    GenericScalar s;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.canonicalize();
    return s;
}

void GenericScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(1);
        return;
    }
    // Shift so the denominator is a plain polynomial with nonzero constant.
    int k = den_.low_exp();
    den_ = den_.shifted(-k);
    num_ = num_.shifted(-k);
    // Remove the polynomial gcd.
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (g.coeffs_.size() > 1 || g.leading() != 1) {
        // Division by the primitive gcd may leave rational contents behind;
        // handle contents separately below, dividing out only the primitive
        // part here. divide_exact stays exact because gcd() divides both
        // primitive parts and contents are restored afterwards.
        mpz_class cn = num_.content(), cd = den_.content();
        LaurentPoly pn = num_, pd = den_;
        for (auto& c : pn.coeffs_) c /= cn;
        for (auto& c : pd.coeffs_) c /= cd;
        pn = pn.divide_exact(g);
        pd = pd.divide_exact(g);
        for (auto& c : pn.coeffs_) c *= cn;
        for (auto& c : pd.coeffs_) c *= cd;
        num_ = std::move(pn);
        den_ = std::move(pd);
    }
    // Reduce the integer contents against each other.
    mpz_class cn = num_.content(), cd = den_.content();
    mpz_class g2;
    mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g2 > 1) {
        for (auto& c : num_.coeffs_) c /= g2;
        for (auto& c : den_.coeffs_) c /= g2;
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool GenericScalar::is_one() const {
    return den_ == LaurentPoly::constant(1) && num_ == LaurentPoly::constant(1);
}

GenericScalar GenericScalar::operator-() const {
    GenericScalar s(*this);
    s.num_ = -s.num_;
    return s;
}

GenericScalar GenericScalar::operator+(const GenericScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

GenericScalar GenericScalar::operator-(const GenericScalar& o) const { return *this + (-o); }

GenericScalar GenericScalar::operator*(const GenericScalar& o) const {
    if (is_zero() || o.is_zero()) return GenericScalar();
    return fraction(num_ * o.num_, den_ * o.den_);
}

GenericScalar GenericScalar::operator/(const GenericScalar& o) const {
    return *this * o.inverse();
}

GenericScalar GenericScalar::inverse() const {
    if (is_zero()) throw Error("GenericScalar: inverse of zero");
    return fraction(den_, num_);
}

std::string GenericScalar::to_string() const {
    if (den_ == LaurentPoly::constant(1)) return num_.to_string();
    std::string n = num_.to_string(), d = den_.to_string();
    std::string ns = num_.term_count() > 1 ? "(" + n + ")" : n;
    std::string ds = den_.term_count() > 1 ? "(" + d + ")" : d;
    return ns + "/" + ds;
}

size_t GenericScalar::hash() const { return hash_mix(num_.hash(), den_.hash()); }

// ---------------------------------------------------------------------------
// CycField
// ---------------------------------------------------------------------------

const CycField* CycField::get(int r) {
    if (r < 3 || r % 2 == 0)
        throw IndexOutOfRange("CycField: root order must be odd and >= 3");
    static std::mutex mu;
    static std::map<int, const CycField*> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;
    const CycField* F = new CycField(r);  // interned for process lifetime
    cache.emplace(r, F);
    return F;
}

CycField::CycField(int r) : r_(r) {
    LaurentPoly phi = cyclotomic_polynomial(r);
    deg_ = phi.high_exp();
    // q^deg = -sum_{i<deg} phi[i] q^i (phi is monic).
    std::vector<mpq_class> top(static_cast<size_t>(deg_));
    for (int i = 0; i < deg_; ++i) top[static_cast<size_t>(i)] = mpq_class(-phi.coeff(i));
    // Reduction rows for q^{deg+i}, i = 0..deg-2, and cached powers q^0..q^{r-1}.
    red_.push_back(top);
    for (int i = 1; i <= deg_ - 2; ++i) {
        const auto& prev = red_.back();
        std::vector<mpq_class> row(static_cast<size_t>(deg_));
        // q * prev: shift up, reduce the overflow via `top`.
        mpq_class ov = prev[static_cast<size_t>(deg_ - 1)];
        for (int j = deg_ - 1; j >= 1; --j) row[static_cast<size_t>(j)] = prev[static_cast<size_t>(j - 1)];
        row[0] = 0;
        if (ov != 0)
            for (int j = 0; j < deg_; ++j) row[static_cast<size_t>(j)] += ov * top[static_cast<size_t>(j)];
        red_.push_back(std::move(row));
    }
}

// ---------------------------------------------------------------------------
// Cyc
// ---------------------------------------------------------------------------

Cyc::Cyc(const CycField* F, long n) : F_(F), c_(F->degree()) { c_[0] = n; }
Cyc::Cyc(const CycField* F, const mpq_class& n) : F_(F), c_(F->degree()) { c_[0] = n; }

Cyc Cyc::q_power(const CycField* F, long e) {
    long r = F->r();
    long m = ((e % r) + r) % r;
    Cyc out(F);
    if (m < F->degree()) {
        out.c_[static_cast<size_t>(m)] = 1;
        return out;
    }
    // Build q^m by repeated shifts with reduction.
    std::vector<mpq_class> cur(static_cast<size_t>(F->degree()));
    cur[0] = 1;
    int d = F->degree();
    for (long s = 0; s < m; ++s) {
        mpq_class ov = cur[static_cast<size_t>(d - 1)];
        for (int j = d - 1; j >= 1; --j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)];
        cur[0] = 0;
        if (ov != 0) {
            const auto& top = F->reduction_row(0);
            for (int j = 0; j < d; ++j) cur[static_cast<size_t>(j)] += ov * top[static_cast<size_t>(j)];
        }
    }
    out.c_ = std::move(cur);
    return out;
}

bool Cyc::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool Cyc::is_one() const {
    if (!F_ || c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class Cyc::rational() const {
    if (!is_rational()) throw Error("Cyc: not a rational value");
    return c_.empty() ? mpq_class(0) : c_[0];
}

const CycField* Cyc::join(const Cyc& a, const Cyc& b) {
    if (a.F_ && b.F_) {
        if (a.F_ != b.F_) throw RingMismatch("Cyc: mixed cyclotomic fields");
        return a.F_;
    }
    return a.F_ ? a.F_ : b.F_;
}

Cyc Cyc::operator-() const {
    Cyc out(*this);
    for (auto& v : out.c_) v = -v;
    return out;
}

Cyc Cyc::operator+(const Cyc& o) const {
    const CycField* F = join(*this, o);
    if (!F) return Cyc();
    Cyc out(F);
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out.c_[i] += o.c_[i];
    return out;
}

Cyc& Cyc::operator+=(const Cyc& o) {
    *this = *this + o;
    return *this;
}

Cyc Cyc::operator-(const Cyc& o) const { return *this + (-o); }

Cyc Cyc::operator*(const Cyc& o) const {
    const CycField* F = join(*this, o);
    if (!F || c_.empty() || o.c_.empty()) return Cyc();
    int d = F->degree();
    std::vector<mpq_class> conv(static_cast<size_t>(2 * d - 1));
    for (int i = 0; i < d; ++i) {
        if (c_[static_cast<size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (o.c_[static_cast<size_t>(j)] == 0) continue;
            conv[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
        }
    }
    Cyc out(F);
    for (int i = 0; i < d; ++i) out.c_[static_cast<size_t>(i)] = std::move(conv[static_cast<size_t>(i)]);
    for (int i = d; i <= 2 * d - 2; ++i) {
        if (conv[static_cast<size_t>(i)] == 0) continue;
        const auto& row = F->reduction_row(i - d);
        for (int j = 0; j < d; ++j) out.c_[static_cast<size_t>(j)] += conv[static_cast<size_t>(i)] * row[static_cast<size_t>(j)];
    }
    return out;
}

namespace {

// Dense rational polynomials for the extended Euclid behind Cyc::inverse.
using QVec = std::vector<mpq_class>;

void qv_trim(QVec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

QVec qv_sub(QVec a, const QVec& b) {
    if (b.size() > a.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qv_trim(a);
    return a;
}

QVec qv_mul(const QVec& a, const QVec& b) {
    if (a.empty() || b.empty()) return {};
    QVec out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    qv_trim(out);
    return out;
}

// Quotient of a by b over Q (b nonzero); remainder returned through a.
QVec qv_divmod(QVec& a, const QVec& b) {
    QVec q;
    if (a.size() < b.size()) return q;
    q.assign(a.size() - b.size() + 1, mpq_class(0));
    const mpq_class& lb = b.back();
    for (size_t i = q.size(); i-- > 0;) {
        if (a[i + b.size() - 1] == 0) continue;
        mpq_class f = a[i + b.size() - 1] / lb;
        q[i] = f;
        for (size_t j = 0; j < b.size(); ++j) a[i + j] -= f * b[j];
    }
    qv_trim(a);
    return q;
}

}  // namespace

Cyc Cyc::inverse() const {
    if (!F_ || is_zero()) throw Error("Cyc: inverse of zero");
    int d = F_->degree();
    LaurentPoly phi = cyclotomic_polynomial(F_->r());
    QVec m(static_cast<size_t>(d + 1));
    for (int i = 0; i <= d; ++i) m[static_cast<size_t>(i)] = mpq_class(phi.coeff(i));
    QVec a(c_.begin(), c_.end());
    qv_trim(a);
    // Extended Euclid: maintain t with t * a == r (mod m).
    QVec r0 = m, r1 = a, t0, t1 = {mpq_class(1)};
    while (!r1.empty()) {
        QVec rem = r0;
        QVec q = qv_divmod(rem, r1);
        QVec t2 = qv_sub(t0, qv_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant (Phi_r is irreducible over Q).
    if (r0.size() != 1) throw SolverFailure("Cyc: gcd with the modulus is not constant");
    Cyc out(F_);
    for (size_t i = 0; i < t0.size() && i < static_cast<size_t>(d); ++i)
        out.c_[i] = t0[i] / r0[0];
    return out;
}

Cyc Cyc::operator/(const Cyc& o) const { return *this * o.inverse(); }

bool Cyc::operator==(const Cyc& o) const { return (*this - o).is_zero(); }

std::strong_ordering Cyc::operator<=>(const Cyc& o) const {
    Cyc d = *this - o;
    if (d.is_zero()) return std::strong_ordering::equal;
    for (size_t i = d.c_.size(); i-- > 0;) {
        int s = cmp(d.c_[i], 0);
        if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

const mpq_class& Cyc::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= c_.size())
        throw IndexOutOfRange("Cyc::coeff: index outside field degree");
    return c_[static_cast<size_t>(i)];
}

void Cyc::set_coeff(int i, mpq_class v) {
    if (!F_ || i < 0 || i >= F_->degree())
        throw IndexOutOfRange("Cyc::set_coeff: index outside field degree");
    c_[static_cast<size_t>(i)] = std::move(v);
}

std::string Cyc::to_string() const {
    if (!F_ || is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const mpq_class& v = c_[i];
        if (v == 0) continue;
        mpq_class av = abs(v);
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << av.get_str();
        } else {
            if (av != 1) os << av.get_str() << "*";
            os << "q";
            if (i != 1) os << "^" << i;
        }
    }
    return os.str();
}

size_t Cyc::hash() const {
    size_t h = 0xc1c0;
    if (!F_) return h;
    h = hash_mix(h, static_cast<size_t>(F_->r()));
    for (const auto& v : c_) h = hash_mix(h, hash_mpq(v));
    return h;
}

// ---------------------------------------------------------------------------
// RingTag / Scalar
// ---------------------------------------------------------------------------

RingTag RingTag::root(int r) {
    if (r < 3 || r % 2 == 0)
        throw IndexOutOfRange("RingTag::root: r must be odd and >= 3");
    return {Kind::Root, r};
}

std::string RingTag::to_string() const {
    return is_root() ? "root(" + std::to_string(r) + ")" : "generic";
}

Scalar::Scalar(Cyc c) : tag_(RingTag::generic()), c_(std::move(c)) {
    if (!c_.field()) throw RingMismatch("Scalar: Cyc value carries no field");
    tag_ = RingTag::root(c_.field()->r());
}

Scalar Scalar::zero(RingTag tag) {
    return tag.is_root() ? Scalar(Cyc(CycField::get(tag.r))) : Scalar(GenericScalar());
}

Scalar Scalar::one(RingTag tag) { return integer(1, tag); }

Scalar Scalar::integer(long n, RingTag tag) {
    return tag.is_root() ? Scalar(Cyc(CycField::get(tag.r), n)) : Scalar(GenericScalar(n));
}

bool Scalar::is_zero() const { return tag_.is_root() ? c_.is_zero() : g_.is_zero(); }
bool Scalar::is_one() const { return tag_.is_root() ? c_.is_one() : g_.is_one(); }

const GenericScalar& Scalar::generic() const {
    if (tag_.is_root()) throw RingMismatch("Scalar: generic() on a root-ring value");
    return g_;
}

const Cyc& Scalar::root() const {
    if (!tag_.is_root()) throw RingMismatch("Scalar: root() on a generic value");
    return c_;
}

void Scalar::check(const Scalar& o) const {
    if (!(tag_ == o.tag_)) throw RingMismatch("Scalar: mixed rings " + tag_.to_string() + " and " + o.tag_.to_string());
}

Scalar Scalar::operator-() const {
    return tag_.is_root() ? Scalar(-c_) : Scalar(-g_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check(o);
    return tag_.is_root() ? Scalar(c_ + o.c_) : Scalar(g_ + o.g_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check(o);
    return tag_.is_root() ? Scalar(c_ - o.c_) : Scalar(g_ - o.g_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check(o);
    return tag_.is_root() ? Scalar(c_ * o.c_) : Scalar(g_ * o.g_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check(o);
    return tag_.is_root() ? Scalar(c_ / o.c_) : Scalar(g_ / o.g_);
}

Scalar Scalar::inverse() const {
    return tag_.is_root() ? Scalar(c_.inverse()) : Scalar(g_.inverse());
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(tag_ == o.tag_)) return false;
    return tag_.is_root() ? c_ == o.c_ : g_ == o.g_;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
    check(o);
    return tag_.is_root() ? c_ <=> o.c_ : g_ <=> o.g_;
}

std::string Scalar::to_string() const {
    return tag_.is_root() ? c_.to_string() : g_.to_string();
}

// ---------------------------------------------------------------------------
// Quantum integers
// ---------------------------------------------------------------------------

GenericScalar generic_brace(long k) {
    return GenericScalar(LaurentPoly::monomial(1, static_cast<int>(2 * k)) -
                         LaurentPoly::monomial(1, static_cast<int>(-2 * k)));
}

GenericScalar generic_brace_prime(long k) {
    return GenericScalar(LaurentPoly::monomial(1, static_cast<int>(2 * k)) +
                         LaurentPoly::monomial(1, static_cast<int>(-2 * k)));
}

GenericScalar generic_int(long k) {
    if (k < 0) return -generic_int(-k);
    LaurentPoly p;
    for (long i = 0; i < k; ++i)
        p += LaurentPoly::monomial(1, static_cast<int>(2 * (k - 1 - 2 * i)));
    return GenericScalar(p);
}

GenericScalar generic_factorial(long k) {
    if (k < 0) throw IndexOutOfRange("quantum factorial of a negative integer");
    GenericScalar s(1);
    for (long i = 2; i <= k; ++i) s = s * generic_int(i);
    return s;
}

Cyc root_brace(long k, const CycField* F) {
    return Cyc::q_power(F, k) - Cyc::q_power(F, -k);
}

Cyc root_brace_prime(long k, const CycField* F) {
    return Cyc::q_power(F, k) + Cyc::q_power(F, -k);
}

Cyc root_int(long k, const CycField* F) {
    if (k < 0) return -root_int(-k, F);
    Cyc s(F);
    for (long i = 0; i < k; ++i) s += Cyc::q_power(F, k - 1 - 2 * i);
    return s;
}

Cyc root_factorial(long k, const CycField* F) {
    if (k < 0) throw IndexOutOfRange("quantum factorial of a negative integer");
    Cyc s(F, 1);
    for (long i = 2; i <= k; ++i) s = s * root_int(i, F);
    return s;
}

Scalar quantum_brace(long k, RingTag tag) {
    return tag.is_root() ? Scalar(root_brace(k, CycField::get(tag.r))) : Scalar(generic_brace(k));
}

Scalar quantum_brace_prime(long k, RingTag tag) {
    return tag.is_root() ? Scalar(root_brace_prime(k, CycField::get(tag.r))) : Scalar(generic_brace_prime(k));
}

Scalar quantum_int(long k, RingTag tag) {
    return tag.is_root() ? Scalar(root_int(k, CycField::get(tag.r))) : Scalar(generic_int(k));
}

Scalar quantum_factorial(long k, RingTag tag) {
    return tag.is_root() ? Scalar(root_factorial(k, CycField::get(tag.r))) : Scalar(generic_factorial(k));
}

// ---------------------------------------------------------------------------
// specialize
// ---------------------------------------------------------------------------

Cyc specialize(const GenericScalar& s, int r) {
    const CycField* F = CycField::get(r);
    long half = (static_cast<long>(r) + 1) / 2;
    auto eval = [&](const LaurentPoly& p) {
        Cyc acc(F);
        p.for_terms([&](int e, const mpz_class& c) {
            acc += Cyc(F, mpq_class(c)) * Cyc::q_power(F, half * e);
        });
        return acc;
    };
    Cyc den = eval(s.den());
    if (den.is_zero())
        throw PoleAtRootOfUnity("specialize: denominator vanishes at the root of unity (r=" + std::to_string(r) + ")");
    return eval(s.num()) / den;
}

std::ostream& operator<<(std::ostream& os, const GenericScalar& s) { return os << s.to_string(); }
std::ostream& operator<<(std::ostream& os, const Cyc& c) { return os << c.to_string(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace smalltl

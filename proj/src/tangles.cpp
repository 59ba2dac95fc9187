#include "smalltl/tangles.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>

namespace smalltl {

// ---------------------------------------------------------------------------
// Tangle
// ---------------------------------------------------------------------------

Tangle::Tangle(int bottom, int top, const std::vector<std::pair<int, int>>& pairs)
    : bottom_(bottom), top_(top) {
    if (bottom < 0 || top < 0) throw ShapeMismatch("Tangle: negative boundary size");
    int n = bottom + top;
    if (static_cast<int>(pairs.size()) * 2 != n)
        throw ShapeMismatch("Tangle: expected " + std::to_string(n / 2) + " pairs on " +
                            std::to_string(n) + " points");
    match_.assign(static_cast<size_t>(n), -1);
    for (auto [a, b] : pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b)
            throw ShapeMismatch("Tangle: pair out of range");
        if (match_[static_cast<size_t>(a)] != -1 || match_[static_cast<size_t>(b)] != -1)
            throw ShapeMismatch("Tangle: point matched twice");
        match_[static_cast<size_t>(a)] = b;
        match_[static_cast<size_t>(b)] = a;
    }
    auto ps = this->pairs();
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j) {
            auto [a, b] = ps[i];
            auto [c, d] = ps[j];
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b))
                throw ShapeMismatch("Tangle: chords (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") and (" + std::to_string(c) + "," + std::to_string(d) + ") cross");
        }
}

Tangle Tangle::identity(int m) {
    std::vector<std::pair<int, int>> ps;
    for (int j = 0; j < m; ++j) ps.push_back({j, 2 * m - 1 - j});
    return {m, m, ps};
}

Tangle Tangle::cup() { return cup_nest(1); }
Tangle Tangle::cap() { return cap_nest(1); }

Tangle Tangle::cup_nest(int k) {
    std::vector<std::pair<int, int>> ps;
    for (int i = 0; i < k; ++i) ps.push_back({k - 1 - i, k + i});
    return {0, 2 * k, ps};
}

Tangle Tangle::cap_nest(int k) {
    std::vector<std::pair<int, int>> ps;
    for (int i = 0; i < k; ++i) ps.push_back({k - 1 - i, k + i});
    return {2 * k, 0, ps};
}

Tangle Tangle::e(int m, int i) {
    if (m < 2 || i < 0 || i > m - 2) throw IndexOutOfRange("Tangle::e: generator index");
    std::vector<std::pair<int, int>> ps;
    ps.push_back({i, i + 1});
    ps.push_back({2 * m - 2 - i, 2 * m - 1 - i});
    for (int j = 0; j < m; ++j)
        if (j != i && j != i + 1) ps.push_back({j, 2 * m - 1 - j});
    return {m, m, ps};
}

int Tangle::partner(int p) const {
    if (p < 0 || p >= points()) throw IndexOutOfRange("Tangle::partner");
    return match_[static_cast<size_t>(p)];
}

std::vector<std::pair<int, int>> Tangle::pairs() const {
    std::vector<std::pair<int, int>> ps;
    for (int a = 0; a < points(); ++a)
        if (match_[static_cast<size_t>(a)] > a) ps.push_back({a, match_[static_cast<size_t>(a)]});
    return ps;
}

Tangle::Decomposition Tangle::decompose() const {
    Decomposition d;
    int n = points();
    for (auto [a, b] : pairs()) {
        if (b < bottom_) {
            d.caps.push_back({a, b});
        } else if (a >= bottom_) {
            d.cups.push_back({n - 1 - b, n - 1 - a});
        } else {
            d.through.push_back({a, n - 1 - b});
        }
    }
    std::sort(d.cups.begin(), d.cups.end());
    std::sort(d.through.begin(), d.through.end());
    return d;
}

std::string Tangle::to_string() const {
    std::ostringstream os;
    os << bottom_ << "->" << top_ << ":[";
    bool first = true;
    for (auto [a, b] : pairs()) {
        if (!first) os << ",";
        first = false;
        os << "(" << a << "," << b << ")";
    }
    os << "]";
    return os.str();
}

Tangle Tangle::parse(const std::string& text) {
    size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError("tangle: " + what + " at offset " + std::to_string(pos));
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&]() -> int {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stoi(text.substr(start, pos - start));
    };
    auto expect = [&](const std::string& tok) {
        skip_ws();
        if (text.compare(pos, tok.size(), tok) != 0) fail("expected '" + tok + "'");
        pos += tok.size();
    };
    int m = number();
    expect("->");
    int mp = number();
    expect(":");
    expect("[");
    std::vector<std::pair<int, int>> ps;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            expect("(");
            int a = number();
            expect(",");
            int b = number();
            expect(")");
            ps.push_back({a, b});
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            expect("]");
            break;
        }
    }
    skip_ws();
    if (pos != text.size()) fail("trailing input");
    return {m, mp, ps};
}

size_t Tangle::hash() const {
    size_t h = 0x7a9;
    h = h * 1000003 + static_cast<size_t>(bottom_);
    for (int v : match_) h = h * 1000003 + static_cast<size_t>(v + 1);
    return h;
}

// ---------------------------------------------------------------------------
// Tangle operations
// ---------------------------------------------------------------------------

std::pair<Tangle, int> compose_tangles(const Tangle& f, const Tangle& g) {
    if (g.top() != f.bottom())
        throw ShapeMismatch("compose: middle boundary mismatch (" + std::to_string(g.top()) +
                            " vs " + std::to_string(f.bottom()) + ")");
    int a = g.bottom(), b = g.top(), c = f.top();
    std::vector<char> jvis(static_cast<size_t>(b), 0);
    std::vector<char> evis(static_cast<size_t>(a + c), 0);
    std::vector<std::pair<int, int>> ps;

    // Walks from a result endpoint to its partner. Endpoint coordinates:
    // result i < a is g's bottom i; result a+t is f's top b+t.
    auto walk = [&](int start) -> int {
        bool in_f = start >= a;
        int p = in_f ? b + (start - a) : start;
        while (true) {
            int q = in_f ? f.partner(p) : g.partner(p);
            if (in_f && q >= b) return a + (q - b);
            if (!in_f && q < a) return q;
            int j = in_f ? q : a + b - 1 - q;
            jvis[static_cast<size_t>(j)] = 1;
            p = in_f ? a + b - 1 - j : j;
            in_f = !in_f;
        }
    };
    for (int s = 0; s < a + c; ++s) {
        if (evis[static_cast<size_t>(s)]) continue;
        int t = walk(s);
        evis[static_cast<size_t>(s)] = evis[static_cast<size_t>(t)] = 1;
        ps.push_back({s, t});
    }

    int loops = 0;
    for (int j0 = 0; j0 < b; ++j0) {
        if (jvis[static_cast<size_t>(j0)]) continue;
        ++loops;
        int j = j0;
        do {
            jvis[static_cast<size_t>(j)] = 1;
            int q = f.partner(j);  // f bottom, i.e. junction q
            jvis[static_cast<size_t>(q)] = 1;
            int p = g.partner(a + b - 1 - q);  // g top
            j = a + b - 1 - p;
        } while (j != j0);
    }
    return {Tangle(a, c, ps), loops};
}

Tangle tensor_tangles(const Tangle& f, const Tangle& g) {
    int m1 = f.bottom(), m2 = g.bottom(), n2 = g.top();
    auto remap_f = [&](int p) { return p < m1 ? p : p + m2 + n2; };
    auto remap_g = [&](int p) { return p < m2 ? m1 + p : p + m1; };
    std::vector<std::pair<int, int>> ps;
    for (auto [x, y] : f.pairs()) ps.push_back({remap_f(x), remap_f(y)});
    for (auto [x, y] : g.pairs()) ps.push_back({remap_g(x), remap_g(y)});
    return {m1 + m2, f.top() + n2, ps};
}

Tangle rotate_pi(const Tangle& t) {
    int m = t.bottom(), mp = t.top();
    auto remap = [&](int p) { return p < m ? mp + p : p - m; };
    std::vector<std::pair<int, int>> ps;
    for (auto [x, y] : t.pairs()) ps.push_back({remap(x), remap(y)});
    return {mp, m, ps};
}

std::pair<Tangle, int> partial_trace_right_tangle(const Tangle& t, int k) {
    int m = t.bottom(), mp = t.top();
    if (k < 0 || k > std::min(m, mp))
        throw IndexOutOfRange("partial_trace_right: cannot close " + std::to_string(k) + " strands");
    // Junction i glues bottom m-1-i to top m+i.
    auto junction_of = [&](int p) -> int {
        if (p >= m - k && p < m) return m - 1 - p;
        if (p >= m && p < m + k) return p - m;
        return -1;
    };
    auto across = [&](int p) { return p < m ? 2 * m - 1 - p : m - 1 - (p - m); };
    auto to_result = [&](int p) { return p < m ? p : p - 2 * k; };

    std::vector<char> jvis(static_cast<size_t>(k), 0);
    std::vector<char> evis(static_cast<size_t>(m + mp), 0);
    std::vector<std::pair<int, int>> ps;
    for (int s = 0; s < m + mp; ++s) {
        if (junction_of(s) >= 0 || evis[static_cast<size_t>(s)]) continue;
        int p = s;
        while (true) {
            int q = t.partner(p);
            int j = junction_of(q);
            if (j < 0) {
                evis[static_cast<size_t>(s)] = evis[static_cast<size_t>(q)] = 1;
                ps.push_back({to_result(s), to_result(q)});
                break;
            }
            jvis[static_cast<size_t>(j)] = 1;
            p = across(q);
        }
    }
    int loops = 0;
    for (int j0 = 0; j0 < k; ++j0) {
        if (jvis[static_cast<size_t>(j0)]) continue;
        ++loops;
        int p = m - 1 - j0;
        do {
            int q = t.partner(p);
            jvis[static_cast<size_t>(junction_of(q))] = 1;
            p = across(q);
        } while (p != m - 1 - j0);
    }
    return {Tangle(m - k, mp - k, ps), loops};
}

std::vector<Tangle> enumerate_tangles(int m, int mp) {
    int n = m + mp;
    std::vector<Tangle> out;
    if (n % 2 != 0 || m < 0 || mp < 0) return out;
    using Matching = std::vector<std::pair<int, int>>;
    // Matching the first point to pts[i] splits the rest into an inside and
    // an outside block that are matched independently.
    std::function<std::vector<Matching>(std::vector<int>)> gen =
        [&](std::vector<int> pts) -> std::vector<Matching> {
        if (pts.empty()) return {Matching{}};
        std::vector<Matching> res;
        for (size_t i = 1; i < pts.size(); i += 2) {
            auto ins = gen({pts.begin() + 1, pts.begin() + static_cast<long>(i)});
            auto outs = gen({pts.begin() + static_cast<long>(i) + 1, pts.end()});
            for (const auto& x : ins)
                for (const auto& y : outs) {
                    Matching w = {{pts[0], pts[i]}};
                    w.insert(w.end(), x.begin(), x.end());
                    w.insert(w.end(), y.begin(), y.end());
                    res.push_back(std::move(w));
                }
        }
        return res;
    };
    std::vector<int> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    for (const auto& w : gen(std::move(all))) out.push_back(Tangle(m, mp, w));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// TLMorphism
// ---------------------------------------------------------------------------

TLMorphism::TLMorphism(int bottom, int top, RingTag tag)
    : bottom_(bottom), top_(top), tag_(tag) {
    if (bottom < 0 || top < 0) throw ShapeMismatch("TLMorphism: negative boundary size");
}

TLMorphism TLMorphism::identity(int m, RingTag tag) {
    return from_tangle(Tangle::identity(m), tag);
}

TLMorphism TLMorphism::from_tangle(const Tangle& t, RingTag tag) {
    TLMorphism f(t.bottom(), t.top(), tag);
    f.terms_.emplace(t, Scalar::one(tag));
    return f;
}

Scalar TLMorphism::loop_value(RingTag tag) {
    return -quantum_brace_prime(1, tag);
}

Scalar TLMorphism::coefficient(const Tangle& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Scalar::zero(tag_) : it->second;
}

void TLMorphism::add_term(const Tangle& t, const Scalar& c) {
    if (t.bottom() != bottom_ || t.top() != top_)
        throw ShapeMismatch("TLMorphism::add_term: tangle shape " + std::to_string(t.bottom()) +
                            "->" + std::to_string(t.top()) + " does not match morphism " +
                            std::to_string(bottom_) + "->" + std::to_string(top_));
    if (!(c.tag() == tag_)) throw RingMismatch("TLMorphism::add_term: ring mismatch");
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (c.is_zero()) {
        terms_.erase(it);
    }
}

TLMorphism TLMorphism::operator-() const {
    TLMorphism f(*this);
    for (auto& [t, c] : f.terms_) c = -c;
    return f;
}

TLMorphism TLMorphism::operator+(const TLMorphism& o) const {
    if (o.bottom_ != bottom_ || o.top_ != top_)
        throw ShapeMismatch("TLMorphism: adding morphisms of different shapes");
    if (!(o.tag_ == tag_)) throw RingMismatch("TLMorphism: adding over different rings");
    TLMorphism f(*this);
    for (const auto& [t, c] : o.terms_) f.add_term(t, c);
    return f;
}

TLMorphism TLMorphism::operator-(const TLMorphism& o) const { return *this + (-o); }

TLMorphism TLMorphism::operator*(const Scalar& c) const {
    if (!(c.tag() == tag_)) throw RingMismatch("TLMorphism: scalar ring mismatch");
    TLMorphism f(bottom_, top_, tag_);
    if (c.is_zero()) return f;
    for (const auto& [t, v] : terms_) f.terms_.emplace(t, v * c);
    return f;
}

namespace {

// Cleared-denominator view of a generic-ring morphism: coefficients as
// integer Laurent polynomials over one common denominator. Keeps the hot
// loops of compose/tensor free of rational-function gcds.
struct Cleared {
    LaurentPoly den = LaurentPoly::constant(1);
    std::vector<std::pair<const Tangle*, LaurentPoly>> terms;

    explicit Cleared(const std::map<Tangle, Scalar>& ts) {
        for (const auto& [t, c] : ts) {
            const LaurentPoly& d = c.generic().den();
            den = den.divide_exact(LaurentPoly::gcd(den, d)) * d;
        }
        for (const auto& [t, c] : ts) {
            const GenericScalar& g = c.generic();
            terms.push_back({&t, g.num() * den.divide_exact(g.den())});
        }
    }
};

LaurentPoly loop_poly() {
    return LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
}

}  // namespace

TLMorphism TLMorphism::compose(const TLMorphism& o) const {
    if (o.top_ != bottom_)
        throw ShapeMismatch("TLMorphism::compose: " + std::to_string(o.bottom_) + "->" +
                            std::to_string(o.top_) + " then " + std::to_string(bottom_) + "->" +
                            std::to_string(top_));
    if (!(o.tag_ == tag_)) throw RingMismatch("TLMorphism::compose: ring mismatch");
    TLMorphism out(o.bottom_, top_, tag_);
    if (is_zero() || o.is_zero()) return out;

    if (tag_.is_root()) {
        const Cyc delta = loop_value(tag_).root();
        std::map<Tangle, Cyc> acc;
        for (const auto& [t1, c1] : terms_)
            for (const auto& [t2, c2] : o.terms_) {
                auto [t, loops] = compose_tangles(t1, t2);
                Cyc c = c1.root() * c2.root();
                for (int i = 0; i < loops; ++i) c = c * delta;
                acc[t] += c;
            }
        for (auto& [t, c] : acc)
            if (!c.is_zero()) out.terms_.emplace(t, Scalar(std::move(c)));
        return out;
    }

    Cleared a(terms_), b(o.terms_);
    const LaurentPoly dl = loop_poly();
    std::vector<LaurentPoly> dl_pow = {LaurentPoly::constant(1)};
    std::map<Tangle, LaurentPoly> acc;
    for (const auto& [t1, c1] : a.terms)
        for (const auto& [t2, c2] : b.terms) {
            auto [t, loops] = compose_tangles(*t1, *t2);
            while (static_cast<int>(dl_pow.size()) <= loops) dl_pow.push_back(dl_pow.back() * dl);
            acc[t] += c1 * c2 * dl_pow[static_cast<size_t>(loops)];
        }
    LaurentPoly den = a.den * b.den;
    for (auto& [t, num] : acc) {
        if (num.is_zero()) continue;
        out.terms_.emplace(t, Scalar(GenericScalar::fraction(std::move(num), den)));
    }
    return out;
}

TLMorphism TLMorphism::tensor(const TLMorphism& o) const {
    if (!(o.tag_ == tag_)) throw RingMismatch("TLMorphism::tensor: ring mismatch");
    TLMorphism out(bottom_ + o.bottom_, top_ + o.top_, tag_);
    if (is_zero() || o.is_zero()) return out;

    if (tag_.is_root()) {
        for (const auto& [t1, c1] : terms_)
            for (const auto& [t2, c2] : o.terms_)
                out.terms_.emplace(tensor_tangles(t1, t2), c1 * c2);
        return out;
    }
    Cleared a(terms_), b(o.terms_);
    LaurentPoly den = a.den * b.den;
    for (const auto& [t1, c1] : a.terms)
        for (const auto& [t2, c2] : b.terms)
            out.terms_.emplace(tensor_tangles(*t1, *t2),
                               Scalar(GenericScalar::fraction(c1 * c2, den)));
    return out;
}

TLMorphism TLMorphism::rotated_pi() const {
    TLMorphism out(top_, bottom_, tag_);
    for (const auto& [t, c] : terms_) out.terms_.emplace(rotate_pi(t), c);
    return out;
}

TLMorphism TLMorphism::partial_trace_right(int k) const {
    if (k < 0 || k > std::min(bottom_, top_))
        throw IndexOutOfRange("TLMorphism::partial_trace_right: cannot close " +
                              std::to_string(k) + " strands of " + std::to_string(bottom_) +
                              "->" + std::to_string(top_));
    TLMorphism out(bottom_ - k, top_ - k, tag_);
    const Scalar delta = loop_value(tag_);
    for (const auto& [t, c] : terms_) {
        auto [rt, loops] = partial_trace_right_tangle(t, k);
        Scalar v = c;
        for (int i = 0; i < loops; ++i) v = v * delta;
        out.add_term(rt, v);
    }
    return out;
}

TLMorphism TLMorphism::specialized(int r) const {
    if (tag_.is_root()) throw RingMismatch("TLMorphism::specialized: already at a root of unity");
    TLMorphism out(bottom_, top_, RingTag::root(r));
    for (const auto& [t, c] : terms_) {
        Cyc v = specialize(c.generic(), r);
        if (!v.is_zero()) out.terms_.emplace(t, Scalar(std::move(v)));
    }
    return out;
}

std::string TLMorphism::to_string() const {
    std::ostringstream os;
    os << bottom_ << "->" << top_ << " over " << tag_.to_string();
    if (is_zero()) {
        os << ": 0";
        return os.str();
    }
    for (const auto& [t, c] : terms_) {
        os << "\n  (" << c.to_string() << ") ";
        std::string ts = t.to_string();
        os << ts.substr(ts.find(':') + 1);
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Tangle& t) { return os << t.to_string(); }
std::ostream& operator<<(std::ostream& os, const TLMorphism& f) { return os << f.to_string(); }

}  // namespace smalltl

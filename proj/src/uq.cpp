#include "smalltl/uq.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "smalltl/errors.hpp"

namespace smalltl {

namespace {

Cyc qpow(const CycField* F, long e) { return Cyc::q_power(F, e); }
Cyc qi(const CycField* F, long k) { return root_int(k, F); }
Cyc qf(const CycField* F, long k) { return root_factorial(k, F); }

Cyc sign_pow(const CycField* F, long k) {
    return ((k % 2 + 2) % 2 == 0) ? Cyc(F, 1) : Cyc(F, -1);
}

void check_r(int r) {
    if (r < 3 || r % 2 == 0) throw IndexOutOfRange("r must be odd and at least 3");
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw IndexOutOfRange("sign must be +1 or -1");
}

CycVec vadd(const CycVec& a, const CycVec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vector addition shape mismatch");
    CycVec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

CycVec vsub(const CycVec& a, const CycVec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vector subtraction shape mismatch");
    CycVec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

CycVec vscale(const Cyc& s, const CycVec& a) {
    CycVec c(a.size());
    if (s.is_zero()) return c;
    for (size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) c[i] = s * a[i];
    return c;
}

bool veq(const CycVec& a, const CycVec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

bool vzero(const CycVec& a) {
    for (const Cyc& c : a)
        if (!c.is_zero()) return false;
    return true;
}

CycVec unit_vec(int dim, int i, const CycField* F) {
    CycVec v(dim);
    v[i] = Cyc(F, 1);
    return v;
}

CycVec apply_pow(const SparseMat& op, CycVec v, int k) {
    for (int i = 0; i < k; ++i) v = op.apply(v);
    return v;
}

CycMatrix matpow(const CycMatrix& a, int k, const CycField* F) {
    CycMatrix p = CycMatrix::identity(F, a.rows());
    for (int i = 0; i < k; ++i) p = p * a;
    return p;
}

/// Basis offsets of P_m: a_0.., x_0.., y_0.., b_0..
struct POff {
    int A, s;
    POff(int m, int r) : A(2 * r - m - 1), s(m - r + 1) {}
    int a(int j) const { return j; }
    int x(int k) const { return A + k; }
    int y(int k) const { return A + s + k; }
    int b(int j) const { return A + 2 * s + j; }
};

void check_projective_range(int m, int r) {
    if (m < r || m > 2 * r - 2) throw IndexOutOfRange("projective index out of range");
}

CycVec unit2(const CycField* F, int which) {
    CycVec v(2);
    v[which] = Cyc(F, 1);
    return v;
}

std::string lbl(const char* family, int j) { return family + std::to_string(j); }

}  // namespace

bool hopf_invariants_hold(const BasedModule& M) {
    const CycField* F = M.field();
    const Cyc q = qpow(F, 1);
    const CycMatrix id = CycMatrix::identity(F, M.dim());
    const CycMatrix &E = M.actE, &Fm = M.actF, &K = M.actK;
    const CycMatrix Kinv = inverse(K);
    if (!(K * E == (E * K) * (q * q))) return false;
    if (!(K * Fm == (Fm * K) * (q * q).inverse())) return false;
    const CycMatrix rhs = (K - Kinv) * (q - q.inverse()).inverse();
    if (!(E * Fm - Fm * E == rhs)) return false;
    if (!matpow(E, M.r, F).is_zero()) return false;
    if (!matpow(Fm, M.r, F).is_zero()) return false;
    return matpow(K, M.r, F) == id;
}

BasedModule simple_module(int m, int r) {
    check_r(r);
    if (m < 0 || m > r - 1) throw IndexOutOfRange("simple index out of range");
    const CycField* F = CycField::get(r);
    BasedModule M;
    M.r = r;
    const int d = m + 1;
    M.actE = CycMatrix(d, d);
    M.actF = CycMatrix(d, d);
    M.actK = CycMatrix(d, d);
    for (int j = 0; j <= m; ++j) {
        M.labels.push_back(lbl("a", j));
        M.actK.set(j, j, qpow(F, m - 2 * j));
        if (j >= 1) M.actE.set(j - 1, j, qi(F, j) * qi(F, m - j + 1));
        if (j < m) M.actF.set(j + 1, j, Cyc(F, 1));
    }
    return M;
}

BasedModule projective_module(int m, int r) {
    check_r(r);
    check_projective_range(m, r);
    const CycField* F = CycField::get(r);
    const Cyc one(F, 1);
    BasedModule M;
    M.r = r;
    const POff o(m, r);
    const int d = 2 * r;
    M.actE = CycMatrix(d, d);
    M.actF = CycMatrix(d, d);
    M.actK = CycMatrix(d, d);
    M.labels.resize(d);
    for (int j = 0; j <= 2 * r - m - 2; ++j) {
        M.labels[o.a(j)] = lbl("a", j);
        M.actK.set(o.a(j), o.a(j), qpow(F, -m - 2 * j - 2));
        if (j >= 1) M.actE.set(o.a(j - 1), o.a(j), -(qi(F, j) * qi(F, m + j + 1)));
        if (j < 2 * r - m - 2) M.actF.set(o.a(j + 1), o.a(j), one);
    }
    for (int k = 0; k <= m - r; ++k) {
        M.labels[o.x(k)] = lbl("x", k);
        M.actK.set(o.x(k), o.x(k), qpow(F, m - 2 * k));
        if (k >= 1) M.actE.set(o.x(k - 1), o.x(k), qi(F, k) * qi(F, m - k + 1));
        if (k < m - r)
            M.actF.set(o.x(k + 1), o.x(k), one);
        else
            M.actF.set(o.a(0), o.x(k), one);
    }
    for (int k = 0; k <= m - r; ++k) {
        M.labels[o.y(k)] = lbl("y", k);
        M.actK.set(o.y(k), o.y(k), qpow(F, m - 2 * k));
        if (k == 0)
            M.actE.set(o.a(2 * r - m - 2), o.y(0), one);
        else
            M.actE.set(o.y(k - 1), o.y(k), qi(F, k) * qi(F, m - k + 1));
        if (k < m - r) M.actF.set(o.y(k + 1), o.y(k), one);
    }
    for (int j = 0; j <= 2 * r - m - 2; ++j) {
        M.labels[o.b(j)] = lbl("b", j);
        M.actK.set(o.b(j), o.b(j), qpow(F, -m - 2 * j - 2));
        if (j == 0) {
            M.actE.set(o.x(m - r), o.b(0), one);
        } else {
            M.actE.set(o.a(j - 1), o.b(j), one);
            M.actE.set(o.b(j - 1), o.b(j), -(qi(F, j) * qi(F, m + j + 1)));
        }
        if (j < 2 * r - m - 2)
            M.actF.set(o.b(j + 1), o.b(j), one);
        else
            M.actF.set(o.y(0), o.b(j), one);
    }
    return M;
}

BasedModule big_module(int r) {
    check_r(r);
    return direct_sum(simple_module(r - 1, r), simple_module(r - 1, r));
}

BasedModule direct_sum(const BasedModule& M, const BasedModule& N) {
    if (M.r != N.r) throw RingMismatch("direct_sum over different roots");
    BasedModule S;
    S.r = M.r;
    const int d = M.dim() + N.dim();
    S.actE = CycMatrix(d, d);
    S.actF = CycMatrix(d, d);
    S.actK = CycMatrix(d, d);
    for (const std::string& l : M.labels) S.labels.push_back(l + "+");
    for (const std::string& l : N.labels) S.labels.push_back(l + "-");
    auto put = [&](CycMatrix& dst, const CycMatrix& src, int off) {
        for (int i = 0; i < src.rows(); ++i)
            for (int j = 0; j < src.cols(); ++j)
                if (!src.at(i, j).is_zero()) dst.set(off + i, off + j, src.at(i, j));
    };
    put(S.actE, M.actE, 0);
    put(S.actF, M.actF, 0);
    put(S.actK, M.actK, 0);
    put(S.actE, N.actE, M.dim());
    put(S.actF, N.actF, M.dim());
    put(S.actK, N.actK, M.dim());
    return S;
}

BasedModule tensor_product(const BasedModule& M, const BasedModule& N) {
    if (M.r != N.r) throw RingMismatch("tensor_product over different roots");
    const CycField* F = M.field();
    BasedModule T;
    T.r = M.r;
    for (const std::string& a : M.labels)
        for (const std::string& b : N.labels) T.labels.push_back(a + "*" + b);
    const CycMatrix idM = CycMatrix::identity(F, M.dim());
    const CycMatrix idN = CycMatrix::identity(F, N.dim());
    T.actK = M.actK.kronecker(N.actK);
    T.actE = M.actE.kronecker(N.actK) + idM.kronecker(N.actE);
    T.actF = inverse(M.actK).kronecker(N.actF) + M.actF.kronecker(idN);
    return T;
}

BasedModule tensor_power(int n, int r) {
    check_r(r);
    if (n < 0) throw IndexOutOfRange("tensor power exponent out of range");
    if (n > 12) throw Error("tensor_power too large to store densely; use the sparse actions");
    BasedModule T;
    T.r = r;
    for (int b = 0; b < (1 << n); ++b) {
        std::string s(n, '0');
        for (int i = 0; i < n; ++i)
            if ((b >> (n - 1 - i)) & 1) s[i] = '1';
        T.labels.push_back(s);
    }
    T.actE = tensor_E(n, r).to_dense();
    T.actF = tensor_F(n, r).to_dense();
    T.actK = tensor_K(n, r).to_dense();
    return T;
}

const SparseMat& tensor_E(int n, int r) {
    check_r(r);
    if (n < 0) throw IndexOutOfRange("tensor power exponent out of range");
    static std::map<std::pair<int, int>, SparseMat> cache;
    const auto key = std::make_pair(n, r);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const CycField* F = CycField::get(r);
    const int dim = 1 << n;
    SparseMat m(dim, dim);
    for (int b = 0; b < dim; ++b) {
        long suf = 0;
        for (int i = n - 1; i >= 0; --i) {
            const int bit = (b >> (n - 1 - i)) & 1;
            if (bit) m.add_at(b & ~(1 << (n - 1 - i)), b, qpow(F, suf));
            suf += 1 - 2 * bit;
        }
    }
    return cache.emplace(key, std::move(m)).first->second;
}

const SparseMat& tensor_F(int n, int r) {
    check_r(r);
    if (n < 0) throw IndexOutOfRange("tensor power exponent out of range");
    static std::map<std::pair<int, int>, SparseMat> cache;
    const auto key = std::make_pair(n, r);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const CycField* F = CycField::get(r);
    const int dim = 1 << n;
    SparseMat m(dim, dim);
    for (int b = 0; b < dim; ++b) {
        long pre = 0;
        for (int i = 0; i < n; ++i) {
            const int bit = (b >> (n - 1 - i)) & 1;
            if (!bit) m.add_at(b | (1 << (n - 1 - i)), b, qpow(F, -pre));
            pre += 1 - 2 * bit;
        }
    }
    return cache.emplace(key, std::move(m)).first->second;
}

const SparseMat& tensor_K(int n, int r) {
    check_r(r);
    if (n < 0) throw IndexOutOfRange("tensor power exponent out of range");
    static std::map<std::pair<int, int>, SparseMat> cache;
    const auto key = std::make_pair(n, r);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const CycField* F = CycField::get(r);
    const int dim = 1 << n;
    SparseMat m(dim, dim);
    for (int b = 0; b < dim; ++b) m.add_at(b, b, qpow(F, n - 2 * __builtin_popcount(b)));
    return cache.emplace(key, std::move(m)).first->second;
}

CycVec vec_tensor(const CycVec& a, const CycVec& b) {
    CycVec c(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) c[i * b.size() + j] = a[i] * b[j];
    }
    return c;
}

int EmbeddedBasis::index_of(const std::string& label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    throw IndexOutOfRange("unknown basis label " + label);
}

EmbeddedBasis embed_simple(int m, int r) {
    check_r(r);
    if (m < 0 || m > r - 1) throw IndexOutOfRange("simple index out of range");
    static std::map<std::pair<int, int>, EmbeddedBasis> cache;
    const auto key = std::make_pair(m, r);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const CycField* F = CycField::get(r);
    EmbeddedBasis B;
    B.n = m;
    B.r = r;
    if (m == 0) {
        B.labels = {"a0"};
        B.vectors = {CycVec{Cyc(F, 1)}};
    } else {
        const EmbeddedBasis prev = embed_simple(m - 1, r);
        const SparseMat& Fop = tensor_F(m, r);
        B.labels.push_back("a0");
        B.vectors.push_back(vec_tensor(prev.vec("a0"), unit2(F, 0)));
        for (int j = 1; j <= m; ++j) {
            B.labels.push_back(lbl("a", j));
            B.vectors.push_back(Fop.apply(B.vectors.back()));
        }
    }
    return cache.emplace(key, std::move(B)).first->second;
}

EmbeddedBasis embed_projective(int m, int r) {
    check_r(r);
    check_projective_range(m, r);
    static std::map<std::pair<int, int>, EmbeddedBasis> cache;
    const auto key = std::make_pair(m, r);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const CycField* F = CycField::get(r);
    const Cyc q = qpow(F, 1);
    EmbeddedBasis B;
    B.n = m;
    B.r = r;
    CycVec a0, x0, y0, b0;
    if (m == r) {
        const EmbeddedBasis S = embed_simple(r - 1, r);
        a0 = vadd(vscale(q, vec_tensor(S.vec("a0"), unit2(F, 1))),
                  vec_tensor(S.vec("a1"), unit2(F, 0)));
        x0 = vec_tensor(S.vec("a0"), unit2(F, 0));
        y0 = vec_tensor(S.vec(lbl("a", r - 1)), unit2(F, 1));
        b0 = vec_tensor(S.vec("a0"), unit2(F, 1));
    } else {
        const EmbeddedBasis P = embed_projective(m - 1, r);
        const Cyc im = qi(F, m), im1 = qi(F, m + 1);
        a0 = vadd(vscale(im1 * q, vec_tensor(P.vec("a0"), unit2(F, 1))),
                  vec_tensor(P.vec("a1"), unit2(F, 0)));
        x0 = vec_tensor(P.vec("x0"), unit2(F, 0));
        y0 = vadd(vscale(qpow(F, -m) / im1, vec_tensor(P.vec(lbl("a", 2 * r - m - 1)), unit2(F, 1))),
                  vscale(im / im1, vec_tensor(P.vec("y0"), unit2(F, 0))));
        b0 = vadd(vadd(vscale(qpow(F, -m) / im1, vec_tensor(P.vec("a0"), unit2(F, 1))),
                       vscale(im * q, vec_tensor(P.vec("b0"), unit2(F, 1)))),
                  vscale(im / im1, vec_tensor(P.vec("b1"), unit2(F, 0))));
    }
    const SparseMat& Fop = tensor_F(m, r);
    auto family = [&](const char* name, CycVec head, int top) {
        B.labels.push_back(lbl(name, 0));
        B.vectors.push_back(std::move(head));
        for (int j = 1; j <= top; ++j) {
            B.labels.push_back(lbl(name, j));
            B.vectors.push_back(Fop.apply(B.vectors.back()));
        }
    };
    family("a", std::move(a0), 2 * r - m - 2);
    family("x", std::move(x0), m - r);
    family("y", std::move(y0), m - r);
    family("b", std::move(b0), 2 * r - m - 2);
    return cache.emplace(key, std::move(B)).first->second;
}

EmbeddedBasis embed_two_sided(int r) {
    check_r(r);
    static std::map<int, EmbeddedBasis> cache;
    if (auto it = cache.find(r); it != cache.end()) return it->second;
    const CycField* F = CycField::get(r);
    const Cyc q = qpow(F, 1);
    const EmbeddedBasis P = embed_projective(2 * r - 2, r);
    const SparseMat& Fop = tensor_F(2 * r - 1, r);
    EmbeddedBasis B;
    B.n = 2 * r - 1;
    B.r = r;
    CycVec plus = vec_tensor(P.vec("x0"), unit2(F, 0));
    CycVec minus = vsub(vscale(q, vec_tensor(P.vec("a0"), unit2(F, 1))),
                        vec_tensor(P.vec("y0"), unit2(F, 0)));
    auto family = [&](CycVec head, const char* suffix) {
        B.labels.push_back(std::string("a0") + suffix);
        B.vectors.push_back(std::move(head));
        for (int j = 1; j <= r - 1; ++j) {
            B.labels.push_back(lbl("a", j) + suffix);
            B.vectors.push_back(Fop.apply(B.vectors.back()));
        }
    };
    family(std::move(plus), "+");
    family(std::move(minus), "-");
    return cache.emplace(r, std::move(B)).first->second;
}

EmbeddedBasis embed_simple_supplement(int m, int r) {
    check_r(r);
    if (m < 2 || m > r - 1) throw IndexOutOfRange("simple supplement index out of range");
    const CycField* F = CycField::get(r);
    const Cyc q = qpow(F, 1);
    EmbeddedBasis B;
    B.n = m;
    B.r = r;
    CycVec head;
    if (m == 2) {
        head = vsub(vscale(q, vec_tensor(unit2(F, 0), unit2(F, 1))),
                    vec_tensor(unit2(F, 1), unit2(F, 0)));
    } else {
        const EmbeddedBasis S = embed_simple(m - 1, r);
        head = vsub(vscale(qi(F, m - 1) * q, vec_tensor(S.vec("a0"), unit2(F, 1))),
                    vec_tensor(S.vec("a1"), unit2(F, 0)));
    }
    const SparseMat& Fop = tensor_F(m, r);
    B.labels.push_back("a'0");
    B.vectors.push_back(std::move(head));
    for (int j = 1; j <= m - 2; ++j) {
        B.labels.push_back(lbl("a'", j));
        B.vectors.push_back(Fop.apply(B.vectors.back()));
    }
    return B;
}

EmbeddedBasis embed_two_sided_supplement(int r) {
    check_r(r);
    const CycField* F = CycField::get(r);
    const Cyc q = qpow(F, 1);
    const EmbeddedBasis S = embed_simple(r - 1, r);
    const SparseMat& Fop = tensor_F(r + 1, r);
    const CycVec e00 = vec_tensor(unit2(F, 0), unit2(F, 0));
    const CycVec e01 = vec_tensor(unit2(F, 0), unit2(F, 1));
    const CycVec e10 = vec_tensor(unit2(F, 1), unit2(F, 0));
    EmbeddedBasis B;
    B.n = r + 1;
    B.r = r;
    CycVec plus = vsub(vscale(q, vec_tensor(S.vec("a0"), e01)), vec_tensor(S.vec("a0"), e10));
    CycVec minus = vadd(vscale(q, vec_tensor(S.vec("a0"), e10)), vec_tensor(S.vec("a1"), e00));
    auto family = [&](CycVec head, const char* suffix) {
        B.labels.push_back(std::string("a'0") + suffix);
        B.vectors.push_back(std::move(head));
        for (int j = 1; j <= r - 1; ++j) {
            B.labels.push_back(lbl("a'", j) + suffix);
            B.vectors.push_back(Fop.apply(B.vectors.back()));
        }
    };
    family(std::move(plus), "+");
    family(std::move(minus), "-");
    return B;
}

EmbeddedBasis embed_projective_supplement(int m, int r) {
    check_r(r);
    if (m < r + 2 || m > 2 * r - 1) throw IndexOutOfRange("projective supplement index out of range");
    const CycField* F = CycField::get(r);
    const Cyc q = qpow(F, 1);
    const EmbeddedBasis P = embed_projective(m - 1, r);
    const SparseMat& Fop = tensor_F(m, r);
    const Cyc im = qi(F, m), im1 = qi(F, m - 1);
    EmbeddedBasis B;
    B.n = m;
    B.r = r;
    CycVec a0 = vscale(Cyc(F, -1), vec_tensor(P.vec("a0"), unit2(F, 0)));
    CycVec x0 = vsub(vscale(im1 * q, vec_tensor(P.vec("x0"), unit2(F, 1))),
                     vec_tensor(P.vec("x1"), unit2(F, 0)));
    CycVec y0 = vsub(vscale(im * q, vec_tensor(P.vec("y0"), unit2(F, 1))),
                     vscale(im / im1, vec_tensor(P.vec("y1"), unit2(F, 0))));
    CycVec b0 = vsub(vscale(qpow(F, m) / im1, vec_tensor(P.vec(lbl("x", m - r - 1)), unit2(F, 1))),
                     vscale(im / im1, vec_tensor(P.vec("b0"), unit2(F, 0))));
    auto family = [&](const char* name, CycVec head, int top) {
        B.labels.push_back(std::string(name) + "0");
        B.vectors.push_back(std::move(head));
        for (int j = 1; j <= top; ++j) {
            B.labels.push_back(name + std::to_string(j));
            B.vectors.push_back(Fop.apply(B.vectors.back()));
        }
    };
    family("a'", std::move(a0), 2 * r - m);
    family("x'", std::move(x0), m - r - 2);
    family("y'", std::move(y0), m - r - 2);
    family("b'", std::move(b0), 2 * r - m);
    return B;
}

BasedModule restrict_to_span(const EmbeddedBasis& basis) {
    const int d = static_cast<int>(basis.vectors.size());
    if (d == 0) throw SolverFailure("restrict_to_span of an empty family");
    const CycMatrix B = CycMatrix::from_columns(basis.vectors);
    if (rank(B) != d) throw SolverFailure("restrict_to_span of a dependent family");
    BasedModule M;
    M.r = basis.r;
    M.labels = basis.labels;
    auto restricted = [&](const SparseMat& G) {
        std::vector<CycVec> cols;
        cols.reserve(basis.vectors.size());
        for (const CycVec& v : basis.vectors) cols.push_back(G.apply(v));
        auto X = try_solve(B, CycMatrix::from_columns(cols));
        if (!X) throw SolverFailure("restrict_to_span of a non-invariant family");
        return *X;
    };
    M.actE = restricted(tensor_E(basis.n, basis.r));
    M.actF = restricted(tensor_F(basis.n, basis.r));
    M.actK = restricted(tensor_K(basis.n, basis.r));
    return M;
}

bool is_intertwiner(const BasedModule& src, const BasedModule& dst, const CycMatrix& f) {
    if (f.cols() != src.dim() || f.rows() != dst.dim())
        throw ShapeMismatch("intertwiner shape mismatch");
    return f * src.actE == dst.actE * f && f * src.actF == dst.actF * f &&
           f * src.actK == dst.actK * f;
}

CycMatrix morphism_epsilon(int m, int r) {
    check_r(r);
    check_projective_range(m, r);
    const CycField* F = CycField::get(r);
    const POff o(m, r);
    CycMatrix f(2 * r, 2 * r);
    for (int j = 0; j <= 2 * r - m - 2; ++j) f.set(o.a(j), o.b(j), Cyc(F, 1));
    return f;
}

CycMatrix morphism_pi(int m, int r) {
    check_r(r);
    check_projective_range(m, r);
    const CycField* F = CycField::get(r);
    const POff o(m, r);
    CycMatrix f(2 * r - m - 1, 2 * r);
    for (int j = 0; j <= 2 * r - m - 2; ++j) f.set(j, o.b(j), Cyc(F, 1));
    return f;
}

CycMatrix morphism_iota(int m, int r) {
    check_r(r);
    check_projective_range(m, r);
    const CycField* F = CycField::get(r);
    const POff o(m, r);
    CycMatrix f(2 * r, 2 * r - m - 1);
    for (int j = 0; j <= 2 * r - m - 2; ++j) f.set(o.a(j), j, Cyc(F, 1));
    return f;
}

CycMatrix morphism_gamma(int m, int r, int sign) {
    check_r(r);
    check_projective_range(m, r);
    check_sign(sign);
    const CycField* F = CycField::get(r);
    const POff o(m, r), t(3 * r - m - 2, r);
    CycMatrix f(2 * r, 2 * r);
    if (sign > 0) {
        for (int k = 0; k <= m - r; ++k) f.set(t.a(k), o.y(k), Cyc(F, 1));
        for (int j = 0; j <= 2 * r - m - 2; ++j) f.set(t.x(j), o.b(j), Cyc(F, 1));
    } else {
        for (int k = 0; k <= m - r; ++k) f.set(t.a(k), o.x(k), Cyc(F, 1));
        for (int j = 0; j <= 2 * r - m - 2; ++j) f.set(t.y(j), o.b(j), Cyc(F, 1));
    }
    return f;
}

CycMatrix morphism_pi_pm(int r, int sign) {
    check_r(r);
    check_sign(sign);
    const CycField* F = CycField::get(r);
    const int off = sign > 0 ? 0 : r;
    CycMatrix f(r, 2 * r);
    for (int j = 0; j < r; ++j) f.set(j, off + j, Cyc(F, 1));
    return f;
}

CycMatrix morphism_iota_pm(int r, int sign) {
    check_r(r);
    check_sign(sign);
    const CycField* F = CycField::get(r);
    const int off = sign > 0 ? 0 : r;
    CycMatrix f(2 * r, r);
    for (int j = 0; j < r; ++j) f.set(off + j, j, Cyc(F, 1));
    return f;
}

std::vector<CycMatrix> hom_space(const BasedModule& src, const BasedModule& dst) {
    if (src.r != dst.r) throw RingMismatch("hom_space over different roots");
    const CycField* F = src.field();
    auto diagonal = [](const CycMatrix& k) {
        for (int i = 0; i < k.rows(); ++i)
            for (int j = 0; j < k.cols(); ++j)
                if (i != j && !k.at(i, j).is_zero()) return false;
        return true;
    };
    if (!diagonal(src.actK) || !diagonal(dst.actK))
        throw Error("hom_space requires diagonal K actions");
    std::vector<std::pair<int, int>> unknowns;
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < dst.dim(); ++i)
        for (int j = 0; j < src.dim(); ++j)
            if (dst.actK.at(i, i) == src.actK.at(j, j)) {
                index[{i, j}] = static_cast<int>(unknowns.size());
                unknowns.emplace_back(i, j);
            }
    std::vector<CycVec> rows;
    auto add_rows = [&](const CycMatrix& Gs, const CycMatrix& Gd) {
        for (int i = 0; i < dst.dim(); ++i)
            for (int j = 0; j < src.dim(); ++j) {
                CycVec row(unknowns.size());
                bool nonzero = false;
                for (int k = 0; k < src.dim(); ++k) {
                    if (Gs.at(k, j).is_zero()) continue;
                    if (auto it = index.find({i, k}); it != index.end()) {
                        row[it->second] += Gs.at(k, j);
                        nonzero = true;
                    }
                }
                for (int k = 0; k < dst.dim(); ++k) {
                    if (Gd.at(i, k).is_zero()) continue;
                    if (auto it = index.find({k, j}); it != index.end()) {
                        row[it->second] += -Gd.at(i, k);
                        nonzero = true;
                    }
                }
                if (nonzero) rows.push_back(std::move(row));
            }
    };
    add_rows(src.actE, dst.actE);
    add_rows(src.actF, dst.actF);
    CycMatrix constraints(static_cast<int>(rows.size()), static_cast<int>(unknowns.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t u = 0; u < unknowns.size(); ++u)
            if (!rows[i][u].is_zero()) constraints.set(static_cast<int>(i), static_cast<int>(u), rows[i][u]);
    std::vector<CycMatrix> basis;
    for (const CycVec& v : nullspace(constraints, F)) {
        CycMatrix f(dst.dim(), src.dim());
        for (size_t u = 0; u < unknowns.size(); ++u)
            if (!v[u].is_zero()) f.set(unknowns[u].first, unknowns[u].second, v[u]);
        basis.push_back(std::move(f));
    }
    return basis;
}

namespace {

std::vector<int> block_indices(int n, int ones) {
    std::vector<int> idx;
    for (int b = 0; b < (1 << n); ++b)
        if (__builtin_popcount(static_cast<unsigned>(b)) == ones) idx.push_back(b);
    return idx;
}

CycVec restrict_to_block(const CycVec& v, const std::vector<int>& idx) {
    std::vector<char> inside(v.size(), 0);
    for (int b : idx) inside[b] = 1;
    for (size_t i = 0; i < v.size(); ++i)
        if (!inside[i] && !v[i].is_zero())
            throw SolverFailure("vector is not supported on the expected weight block");
    CycVec out(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) out[i] = v[idx[i]];
    return out;
}

CycMatrix block_power_matrix(const SparseMat& op, int power, const std::vector<int>& src,
                             const std::vector<int>& tgt, int ambient_dim, const CycField* F) {
    CycMatrix A(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
    for (size_t c = 0; c < src.size(); ++c) {
        CycVec v = apply_pow(op, unit_vec(ambient_dim, src[c], F), power);
        const CycVec w = restrict_to_block(v, tgt);
        for (size_t i = 0; i < tgt.size(); ++i)
            if (!w[i].is_zero()) A.set(static_cast<int>(i), static_cast<int>(c), w[i]);
    }
    return A;
}

/// Place image * (first row of [image | kernel]^{-1}) on the block.
void scatter_block(SparseMat& out, const std::vector<int>& idx, const CycVec& image,
                   const std::vector<CycVec>& kernel, const CycField* F) {
    const int c = static_cast<int>(idx.size());
    if (static_cast<int>(kernel.size()) + 1 != c)
        throw SolverFailure("projector block has the wrong kernel dimension");
    CycMatrix B(c, c);
    for (int i = 0; i < c; ++i) {
        if (!image[i].is_zero()) B.set(i, 0, image[i]);
        for (int k = 0; k + 1 < c; ++k)
            if (!kernel[k][i].is_zero()) B.set(i, k + 1, kernel[k][i]);
    }
    if (rank(B) != c) throw SolverFailure("projector block basis is singular");
    CycMatrix e0(c, 1);
    e0.set(0, 0, Cyc(F, 1));
    const CycMatrix y = solve(B.transposed(), e0);
    for (int i = 0; i < c; ++i) {
        if (image[i].is_zero()) continue;
        for (int j = 0; j < c; ++j) {
            const Cyc v = image[i] * y.at(j, 0);
            if (!v.is_zero()) out.add_at(idx[i], idx[j], v);
        }
    }
}

}  // namespace

SparseMat phi_oracle(int m, int r, KernelRoute route) {
    check_r(r);
    if (m < 0 || m > r - 1) throw IndexOutOfRange("simple index out of range");
    const CycField* F = CycField::get(r);
    const EmbeddedBasis X = embed_simple(m, r);
    const int dim = 1 << m;
    SparseMat out(dim, dim);
    for (int j = 0; j <= m; ++j) {
        const auto idx = block_indices(m, j);
        const bool byE = route == KernelRoute::ByE;
        const SparseMat& op = byE ? tensor_E(m, r) : tensor_F(m, r);
        const int power = byE ? j : m - j;
        const auto tgt = block_indices(m, byE ? 0 : m);
        const CycMatrix A = block_power_matrix(op, power, idx, tgt, dim, F);
        scatter_block(out, idx, restrict_to_block(X.vectors[j], idx), nullspace(A, F), F);
    }
    return out;
}

SparseMat phi_pm_oracle(int r, int sign) {
    check_r(r);
    check_sign(sign);
    const CycField* F = CycField::get(r);
    const int n = 2 * r - 1, dim = 1 << n;
    const EmbeddedBasis W = embed_two_sided(r);
    SparseMat out(dim, dim);
    for (int j = 0; j <= r - 1; ++j) {
        if (sign > 0) {
            const auto idx = block_indices(n, j);
            const CycMatrix A =
                block_power_matrix(tensor_E(n, r), j, idx, block_indices(n, 0), dim, F);
            scatter_block(out, idx, restrict_to_block(W.vec(lbl("a", j) + "+"), idx),
                          nullspace(A, F), F);
        } else {
            const auto idx = block_indices(n, 2 * r - 1 - j);
            const CycMatrix A =
                block_power_matrix(tensor_F(n, r), j, idx, block_indices(n, n), dim, F);
            scatter_block(out, idx, restrict_to_block(W.vec(lbl("a", r - 1 - j) + "-"), idx),
                          nullspace(A, F), F);
        }
    }
    return out;
}

std::string module_map_to_json(const CycMatrix& f) {
    nlohmann::json out;
    out["source_dim"] = f.cols();
    out["target_dim"] = f.rows();
    auto entries = nlohmann::json::array();
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) {
            const Cyc& c = f.at(i, j);
            if (c.is_zero()) continue;
            auto coeffs = nlohmann::json::array();
            for (int k = 0; k < c.field()->degree(); ++k) coeffs.push_back(c.coeff(k).get_str());
            entries.push_back(nlohmann::json::array({i, j, std::move(coeffs)}));
        }
    out["entries"] = std::move(entries);
    return out.dump();
}

CycMatrix module_map_from_json(const std::string& text, int r) {
    check_r(r);
    const CycField* F = CycField::get(r);
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        if (!j.is_object() || !j.contains("source_dim") || !j.contains("target_dim") ||
            !j.contains("entries"))
            throw ParseError("module map: expected source_dim, target_dim and entries");
        const int cols = j.at("source_dim").get<int>();
        const int rows = j.at("target_dim").get<int>();
        if (rows < 0 || cols < 0) throw ParseError("module map: negative dimension");
        CycMatrix f(rows, cols);
        std::pair<int, int> last{-1, -1};
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 3) throw ParseError("module map: malformed entry");
            const int row = e.at(0).get<int>(), col = e.at(1).get<int>();
            if (row < 0 || row >= rows || col < 0 || col >= cols)
                throw ParseError("module map: entry out of range");
            if (std::pair<int, int>{row, col} <= last)
                throw ParseError("module map: entries must be sorted row-major");
            last = {row, col};
            const auto& cs = e.at(2);
            if (!cs.is_array() || static_cast<int>(cs.size()) != F->degree())
                throw ParseError("module map: wrong coefficient count");
            Cyc v(F);
            for (int k = 0; k < F->degree(); ++k) {
                mpq_class x(cs.at(k).get<std::string>());
                x.canonicalize();
                v.set_coeff(k, x);
            }
            f.set(row, col, v);
        }
        return f;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string("module map: ") + e.what());
    }
}

namespace {

struct Checks {
    std::vector<std::pair<std::string, bool>> out;
    void add(const std::string& label, bool ok) {
        for (auto& p : out)
            if (p.first == label) {
                p.second = p.second && ok;
                return;
            }
        out.emplace_back(label, ok);
    }
};

bool same_actions(const BasedModule& a, const BasedModule& b) {
    return a.actE == b.actE && a.actF == b.actF && a.actK == b.actK;
}

}  // namespace

std::vector<std::pair<std::string, bool>> module_structure_checks(int r) {
    check_r(r);
    const CycField* F = CycField::get(r);
    Checks C;

    for (int m = 0; m <= r - 1; ++m)
        C.add("hopf:simple", hopf_invariants_hold(simple_module(m, r)));
    for (int m = r; m <= 2 * r - 2; ++m)
        C.add("hopf:projective", hopf_invariants_hold(projective_module(m, r)));
    C.add("hopf:big", hopf_invariants_hold(big_module(r)));
    for (int n = 0; n <= 3; ++n) C.add("hopf:tensor", hopf_invariants_hold(tensor_power(n, r)));
    C.add("hopf:tensor",
          hopf_invariants_hold(tensor_product(simple_module(r - 1, r), projective_module(r, r))));
    C.add("hopf:tensor",
          hopf_invariants_hold(tensor_product(projective_module(2 * r - 2, r), simple_module(1, r))));

    {
        const BasedModule t2 = tensor_product(simple_module(1, r), simple_module(1, r));
        const BasedModule p2 = tensor_power(2, r);
        C.add("tensor:consistency", same_actions(t2, p2));
    }

    for (int m = 0; m <= r - 1; ++m)
        for (int k = 0; k <= r - 1; ++k)
            C.add("dim:simple_simple",
                  hom_space(simple_module(m, r), simple_module(k, r)).size() == (m == k ? 1u : 0u));
    for (int m = r; m <= 2 * r - 2; ++m) {
        const BasedModule P = projective_module(m, r);
        C.add("dim:End_P", hom_space(P, P).size() == 2);
        C.add("dim:P_to_X", hom_space(P, simple_module(2 * r - m - 2, r)).size() == 1);
        C.add("dim:X_to_P", hom_space(simple_module(2 * r - m - 2, r), P).size() == 1);
        for (int k = 0; k <= r - 1; ++k)
            if (k != 2 * r - m - 2) {
                C.add("dim:P_to_X", hom_space(P, simple_module(k, r)).empty());
                C.add("dim:X_to_P", hom_space(simple_module(k, r), P).empty());
            }
        for (int k = r; k <= 2 * r - 2; ++k) {
            const size_t expected = (k == m || k == 3 * r - m - 2) ? 2 : 0;
            C.add("dim:P_to_P", hom_space(P, projective_module(k, r)).size() == expected);
        }
    }
    {
        const BasedModule big = big_module(r);
        C.add("dim:End_big", hom_space(big, big).size() == 4);
        for (int m = 0; m <= r - 1; ++m) {
            const size_t expected = m == r - 1 ? 2 : 0;
            C.add("dim:X_to_big", hom_space(simple_module(m, r), big).size() == expected);
            C.add("dim:big_to_X", hom_space(big, simple_module(m, r)).size() == expected);
        }
    }

    for (int m = r; m <= 2 * r - 2; ++m) {
        const BasedModule P = projective_module(m, r);
        const BasedModule Pp = projective_module(3 * r - m - 2, r);
        const BasedModule X = simple_module(2 * r - m - 2, r);
        const CycMatrix eps = morphism_epsilon(m, r);
        const CycMatrix pi = morphism_pi(m, r), io = morphism_iota(m, r);
        const CycMatrix gp = morphism_gamma(m, r, +1), gm = morphism_gamma(m, r, -1);
        const CycMatrix gp2 = morphism_gamma(3 * r - m - 2, r, +1);
        const CycMatrix gm2 = morphism_gamma(3 * r - m - 2, r, -1);
        C.add("rel:intertwiner", is_intertwiner(P, P, eps) && is_intertwiner(P, X, pi) &&
                                     is_intertwiner(X, P, io) && is_intertwiner(P, Pp, gp) &&
                                     is_intertwiner(P, Pp, gm));
        C.add("E:epsilon_m_rel_1", eps == io * pi && eps == gp2 * gm && eps == gm2 * gp);
        C.add("E:epsilon_m_rel_2",
              (eps * eps).is_zero() && (gp2 * gp).is_zero() && (gm2 * gm).is_zero());
    }
    {
        const BasedModule big = big_module(r);
        const BasedModule X = simple_module(r - 1, r);
        const CycMatrix idX = CycMatrix::identity(F, r);
        bool rel1 = true;
        for (int e1 : {+1, -1}) {
            C.add("rel:intertwiner", is_intertwiner(big, X, morphism_pi_pm(r, e1)) &&
                                         is_intertwiner(X, big, morphism_iota_pm(r, e1)));
            for (int e2 : {+1, -1}) {
                const CycMatrix prod = morphism_pi_pm(r, e2) * morphism_iota_pm(r, e1);
                rel1 = rel1 && (e1 == e2 ? prod == idX : prod.is_zero());
            }
        }
        C.add("E:pi_iota_rel_1", rel1);
        C.add("E:pi_iota_rel_2",
              morphism_iota_pm(r, +1) * morphism_pi_pm(r, +1) +
                      morphism_iota_pm(r, -1) * morphism_pi_pm(r, -1) ==
                  CycMatrix::identity(F, 2 * r));
    }

    for (int m = 0; m <= r - 1; ++m)
        C.add("basis:simple", same_actions(restrict_to_span(embed_simple(m, r)), simple_module(m, r)));
    for (int m = r; m <= 2 * r - 2; ++m)
        C.add("basis:projective",
              same_actions(restrict_to_span(embed_projective(m, r)), projective_module(m, r)));
    C.add("basis:two_sided", same_actions(restrict_to_span(embed_two_sided(r)), big_module(r)));
    for (int m = 2; m <= r - 1; ++m)
        C.add("basis:simple_supplement",
              same_actions(restrict_to_span(embed_simple_supplement(m, r)), simple_module(m - 2, r)));
    C.add("basis:two_sided_supplement",
          same_actions(restrict_to_span(embed_two_sided_supplement(r)), big_module(r)));
    for (int m = r + 2; m <= 2 * r - 1; ++m)
        C.add("basis:projective_supplement",
              same_actions(restrict_to_span(embed_projective_supplement(m, r)),
                           projective_module(m - 2, r)));

    return C.out;
}

std::vector<std::pair<std::string, bool>> appendix_checks(int r) {
    check_r(r);
    const CycField* F = CycField::get(r);
    Checks C;

    {
        bool ok = true;
        for (int j = 0; j <= r - 1; ++j)
            ok = ok && qf(F, r - j - 1) == sign_pow(F, j) * qf(F, r - 1) / qf(F, j);
        C.add("E:reversal", ok);
    }

    {
        auto coproduct_powers = [&](const BasedModule& M, const BasedModule& N) {
            const BasedModule T = tensor_product(M, N);
            const CycMatrix KMinv = inverse(M.actK);
            bool ok = true;
            for (int j = 0; j <= r - 1 && ok; ++j) {
                CycMatrix rhsE(T.dim(), T.dim()), rhsF(T.dim(), T.dim());
                for (int k = 0; k <= j; ++k) {
                    const Cyc c =
                        qf(F, j) / (qf(F, k) * qf(F, j - k)) * qpow(F, (long)k * (j - k));
                    rhsE = rhsE + matpow(M.actE, j - k, F)
                                          .kronecker(matpow(N.actE, k, F) * matpow(N.actK, j - k, F)) *
                                      c;
                    rhsF = rhsF + (matpow(M.actF, k, F) * matpow(KMinv, j - k, F))
                                          .kronecker(matpow(N.actF, j - k, F)) *
                                      c;
                }
                ok = matpow(T.actE, j, F) == rhsE && matpow(T.actF, j, F) == rhsF;
            }
            return ok;
        };
        C.add("E:coproduct", coproduct_powers(simple_module(r - 1, r), projective_module(r, r)));
        C.add("E:coproduct", coproduct_powers(projective_module(r, r), simple_module(r - 1, r)));
    }

    {
        bool v0 = true, hl = true, js = true;
        for (int m = 0; m <= r - 1; ++m) {
            const EmbeddedBasis X = embed_simple(m, r);
            const SparseMat &E = tensor_E(m, r), &Fo = tensor_F(m, r);
            const int dim = 1 << m;
            v0 = v0 && veq(X.vectors[0], unit_vec(dim, 0, F)) &&
                 veq(X.vectors[m], vscale(qf(F, m), unit_vec(dim, dim - 1, F)));
            for (int j = 0; j <= m; ++j) {
                hl = hl && veq(apply_pow(E, X.vectors[j], j),
                               vscale(qf(F, m) * qf(F, j) / qf(F, m - j), X.vectors[0]));
                hl = hl && veq(apply_pow(Fo, X.vectors[j], m - j), X.vectors[m]);
                js = js && veq(apply_pow(Fo, X.vectors[0], j), X.vectors[j]);
                js = js && veq(apply_pow(E, X.vectors[m], m - j),
                               vscale(qf(F, m) * qf(F, m - j) / qf(F, j), X.vectors[j]));
            }
        }
        C.add("E:v_0_m_simple", v0);
        C.add("E:highest_lowest_simple", hl);
        C.add("E:j_simple", js);
    }

    {
        bool v0 = true, hl = true, kl = true;
        for (int m = r; m <= 2 * r - 2; ++m) {
            const EmbeddedBasis P = embed_projective(m, r);
            const SparseMat &E = tensor_E(m, r), &Fo = tensor_F(m, r);
            const int dim = 1 << m;
            auto a = [&](int j) { return P.vec(lbl("a", j)); };
            auto x = [&](int k) { return P.vec(lbl("x", k)); };
            auto y = [&](int k) { return P.vec(lbl("y", k)); };
            auto b = [&](int j) { return P.vec(lbl("b", j)); };
            v0 = v0 && veq(x(0), unit_vec(dim, 0, F)) &&
                 veq(y(m - r),
                     vscale(qf(F, m - r) * qf(F, r - 1) / qi(F, m + 1), unit_vec(dim, dim - 1, F)));
            for (int k = 0; k <= m - r; ++k) {
                hl = hl && veq(apply_pow(E, x(k), k),
                               vscale(qf(F, m - r) * qf(F, k) / qf(F, m - k - r), x(0)));
                hl = hl && veq(apply_pow(Fo, y(k), m - k - r), y(m - r));
                kl = kl && veq(apply_pow(Fo, x(0), k), x(k));
                kl = kl && veq(apply_pow(E, y(m - r), m - k - r),
                               vscale(qf(F, m - r) * qf(F, m - k - r) / qf(F, k), y(k)));
            }
            for (int l = 0; l <= 2 * r - m - 2; ++l) {
                hl = hl && veq(apply_pow(E, b(l), m + l - r + 1),
                               vscale(sign_pow(F, l) * qf(F, m - r) * qf(F, m + l - r + 1) *
                                          qf(F, l) / qi(F, m + 1),
                                      x(0)));
                hl = hl && veq(apply_pow(Fo, b(l), r - l - 1), y(m - r));
                kl = kl && veq(apply_pow(Fo, x(0), m + l - r + 1), a(l));
                kl = kl && veq(apply_pow(E, y(m - r), r - l - 1),
                               vscale(sign_pow(F, l) * qf(F, m - r) * qf(F, r - 1) * qf(F, r - 1) /
                                          (qf(F, m + l - r + 1) * qf(F, l) * qi(F, m + 1)),
                                      a(l)));
            }
        }
        C.add("E:v_0_m_projective", v0);
        C.add("E:highest_lowest_projective", hl);
        C.add("E:k_l_projective", kl);
    }

    {
        const EmbeddedBasis W = embed_two_sided(r);
        const int n = 2 * r - 1, dim = 1 << n;
        const SparseMat &E = tensor_E(n, r), &Fo = tensor_F(n, r);
        auto ap = [&](int j) { return W.vec(lbl("a", j) + "+"); };
        auto am = [&](int j) { return W.vec(lbl("a", j) + "-"); };
        C.add("E:v_0_m_2r-1",
              veq(ap(0), unit_vec(dim, 0, F)) &&
                  veq(am(r - 1), vscale(qf(F, r - 1) * qf(F, r - 1), unit_vec(dim, dim - 1, F))));
        bool hl = true, j2 = true;
        for (int j = 0; j <= r - 1; ++j) {
            hl = hl && veq(apply_pow(E, ap(j), j), vscale(sign_pow(F, j) * qf(F, j) * qf(F, j), ap(0)));
            hl = hl && veq(apply_pow(Fo, am(j), r - j - 1), am(r - 1));
            j2 = j2 && veq(apply_pow(Fo, ap(0), j), ap(j));
            j2 = j2 && veq(apply_pow(E, am(r - 1), r - j - 1),
                           vscale(sign_pow(F, j) * qf(F, r - 1) * qf(F, r - 1) / (qf(F, j) * qf(F, j)),
                                  am(j)));
        }
        C.add("E:highest_lowest_2r-1", hl);
        C.add("E:j_2r-1", j2);
    }

    {
        const SparseMat phi = phi_oracle(r - 1, r, KernelRoute::ByE);
        const EmbeddedBasis Xt = embed_simple(r - 1, r);
        bool ok = true;
        for (int m = 0; m <= r - 1; ++m) {
            const EmbeddedBasis Xm = embed_simple(m, r);
            const EmbeddedBasis Xc = embed_simple(r - 1 - m, r);
            for (int j = 0; j <= m; ++j)
                for (int k = 0; k <= r - 1 - m; ++k) {
                    const Cyc c = sign_pow(F, j) * qf(F, m + k) / (qf(F, m - j) * qf(F, j + k));
                    ok = ok && veq(phi.apply(vec_tensor(Xm.vectors[j], Xc.vectors[k])),
                                   vscale(c * qpow(F, -(long)j * (m + k + 1)), Xt.vectors[j + k]));
                    ok = ok && veq(phi.apply(vec_tensor(Xc.vectors[k], Xm.vectors[j])),
                                   vscale(c * qpow(F, (long)(m - j) * k), Xt.vectors[j + k]));
                }
        }
        C.add("E:alpha_r-1", ok);
    }

    {
        const SparseMat php = phi_pm_oracle(r, +1), phm = phi_pm_oracle(r, -1);
        const EmbeddedBasis W = embed_two_sided(r);
        auto ap = [&](int j) { return W.vec(lbl("a", j) + "+"); };
        auto am = [&](int j) { return W.vec(lbl("a", j) + "-"); };
        bool okp = true, okm = true;
        for (int m = 1; m <= r - 1; ++m) {
            const EmbeddedBasis Xm = embed_simple(m, r);
            const EmbeddedBasis P = embed_projective(2 * r - m - 1, r);
            for (int j = 0; j <= m; ++j) {
                const CycVec& aj = Xm.vectors[j];
                for (int l = 0; l <= m - 1; ++l) {
                    okp = okp && vzero(php.apply(vec_tensor(aj, P.vec(lbl("a", l))))) &&
                          vzero(php.apply(vec_tensor(P.vec(lbl("a", l)), aj)));
                    okm = okm && vzero(phm.apply(vec_tensor(aj, P.vec(lbl("a", l))))) &&
                          vzero(phm.apply(vec_tensor(P.vec(lbl("a", l)), aj)));
                }
                for (int k = 0; k <= r - m - 1; ++k) {
                    const Cyc cp = sign_pow(F, j) * qf(F, m + k) / (qf(F, m - j) * qf(F, j + k));
                    okp = okp && veq(php.apply(vec_tensor(aj, P.vec(lbl("x", k)))),
                                     vscale(cp * qpow(F, -(long)j * (m + k + 1)), ap(j + k)));
                    okp = okp && veq(php.apply(vec_tensor(P.vec(lbl("x", k)), aj)),
                                     vscale(cp * qpow(F, (long)(m - j) * k), ap(j + k)));
                    okp = okp && vzero(php.apply(vec_tensor(aj, P.vec(lbl("y", k))))) &&
                          vzero(php.apply(vec_tensor(P.vec(lbl("y", k)), aj)));
                    const Cyc cm = sign_pow(F, j + 1) * qf(F, m + k) /
                                   (qf(F, m - j) * qf(F, j + k) * qi(F, m));
                    okm = okm && veq(phm.apply(vec_tensor(aj, P.vec(lbl("y", k)))),
                                     vscale(cm * qpow(F, -(long)j * (m + k + 1)), am(j + k)));
                    okm = okm && veq(phm.apply(vec_tensor(P.vec(lbl("y", k)), aj)),
                                     vscale(cm * qpow(F, (long)(m - j) * k), am(j + k)));
                    okm = okm && vzero(phm.apply(vec_tensor(aj, P.vec(lbl("x", k))))) &&
                          vzero(phm.apply(vec_tensor(P.vec(lbl("x", k)), aj)));
                }
                for (int l = 0; l <= m - 1; ++l) {
                    const CycVec& bl = P.vec(lbl("b", l));
                    if (l <= m - j - 1) {
                        const Cyc c = sign_pow(F, m + l + 1) * qf(F, m - j - l - 1) * qf(F, l) /
                                      (qf(F, m - j) * qi(F, m));
                        okp = okp && veq(php.apply(vec_tensor(aj, bl)),
                                         vscale(c * qpow(F, -(long)j * (l + 1)),
                                                ap(j + l - m + r)));
                        okp = okp && veq(php.apply(vec_tensor(bl, aj)),
                                         vscale(c * qpow(F, -(long)(m - j) * (m - l)),
                                                ap(j + l - m + r)));
                    }
                    if (l >= m - j) {
                        const Cyc c = sign_pow(F, j + 1) * qf(F, l) /
                                      (qf(F, m - j) * qf(F, j + l - m) * qi(F, m));
                        okm = okm && veq(phm.apply(vec_tensor(aj, bl)),
                                         vscale(c * qpow(F, -(long)j * (l + 1)), am(j + l - m)));
                        okm = okm && veq(phm.apply(vec_tensor(bl, aj)),
                                         vscale(c * qpow(F, -(long)(m - j) * (m - l)),
                                                am(j + l - m)));
                    }
                }
            }
        }
        C.add("E:alpha_2r-1_+", okp);
        C.add("E:alpha_2r-1_-", okm);
    }

    {
        bool ok = true;
        const EmbeddedBasis Xt = embed_simple(r - 1, r);
        for (int m = 0; m <= r - 1; ++m) {
            const EmbeddedBasis Xm = embed_simple(m, r);
            const EmbeddedBasis Xc = embed_simple(r - 1 - m, r);
            for (int j = 0; j <= r - 1; ++j) {
                CycVec s1(1 << (r - 1)), s2(1 << (r - 1));
                for (int k = std::max(m + j - r + 1, 0); k <= std::min(m, j); ++k) {
                    const Cyc c = qf(F, j) / (qf(F, k) * qf(F, j - k));
                    s1 = vadd(s1, vscale(c * qpow(F, -(long)(m - k) * (j - k)),
                                         vec_tensor(Xm.vectors[k], Xc.vectors[j - k])));
                    s2 = vadd(s2, vscale(c * qpow(F, (long)(m + j - k + 1) * k),
                                         vec_tensor(Xc.vectors[j - k], Xm.vectors[k])));
                }
                ok = ok && veq(s1, Xt.vectors[j]) && veq(s2, Xt.vectors[j]);
            }
        }
        const EmbeddedBasis W = embed_two_sided(r);
        for (int m = 1; m <= r - 1; ++m) {
            const EmbeddedBasis Xm = embed_simple(m, r);
            const EmbeddedBasis P = embed_projective(2 * r - m - 1, r);
            const int dim = 1 << (2 * r - 1);
            for (int j = 0; j <= r - 1; ++j) {
                CycVec p1(dim), p2(dim), n1(dim), n2(dim);
                for (int k = 0; k <= m + j - r; ++k) {
                    const Cyc c = qf(F, j) / (qf(F, k) * qf(F, j - k));
                    p1 = vadd(p1, vscale(c * qpow(F, -(long)(m - k) * (j - k)),
                                         vec_tensor(Xm.vectors[k], P.vec(lbl("a", j - k + m - r)))));
                    p2 = vadd(p2, vscale(c * qpow(F, (long)(m + j - k + 1) * k),
                                         vec_tensor(P.vec(lbl("a", j - k + m - r)), Xm.vectors[k])));
                }
                for (int k = std::max(m + j - r + 1, 0); k <= std::min(m, j); ++k) {
                    const Cyc c = qf(F, j) / (qf(F, k) * qf(F, j - k));
                    p1 = vadd(p1, vscale(c * qpow(F, -(long)(m - k) * (j - k)),
                                         vec_tensor(Xm.vectors[k], P.vec(lbl("x", j - k)))));
                    p2 = vadd(p2, vscale(c * qpow(F, (long)(m + j - k + 1) * k),
                                         vec_tensor(P.vec(lbl("x", j - k)), Xm.vectors[k])));
                    const Cyc cm = qf(F, j) * qi(F, m) / (qf(F, k) * qf(F, j - k));
                    n1 = vsub(n1, vscale(cm * qpow(F, -(long)(m - k) * (j - k)),
                                         vec_tensor(Xm.vectors[k], P.vec(lbl("y", j - k)))));
                    n2 = vsub(n2, vscale(cm * qpow(F, (long)(m + j - k + 1) * k),
                                         vec_tensor(P.vec(lbl("y", j - k)), Xm.vectors[k])));
                }
                for (int k = std::min(m + 1, j + 1); k <= m; ++k) {
                    const Cyc c = qf(F, j) * qf(F, r - 1) / (qf(F, k) * qf(F, j - k + r));
                    n1 = vadd(n1, vscale(c * qpow(F, -(long)(m - k) * (j - k)),
                                         vec_tensor(Xm.vectors[k], P.vec(lbl("a", j - k + m)))));
                    n2 = vadd(n2, vscale(c * qpow(F, (long)(m + j - k + 1) * k),
                                         vec_tensor(P.vec(lbl("a", j - k + m)), Xm.vectors[k])));
                }
                ok = ok && veq(p1, W.vec(lbl("a", j) + "+")) && veq(p2, W.vec(lbl("a", j) + "+"));
                ok = ok && veq(n1, W.vec(lbl("a", j) + "-")) && veq(n2, W.vec(lbl("a", j) + "-"));
            }
        }
        C.add("E:a_j^r-1_+_-", ok);
    }

    {
        bool ok = true;
        for (int m = 0; m <= r - 1; ++m) {
            const SparseMat a = phi_oracle(m, r, KernelRoute::ByE);
            const SparseMat b = phi_oracle(m, r, KernelRoute::ByF);
            ok = ok && a == b && a * a == a;
            ok = ok && tensor_E(m, r) * a == a * tensor_E(m, r) &&
                 tensor_F(m, r) * a == a * tensor_F(m, r);
            for (const CycVec& v : embed_simple(m, r).vectors) ok = ok && veq(a.apply(v), v);
        }
        C.add("oracle:phi", ok);

        const SparseMat pp = phi_pm_oracle(r, +1), pm = phi_pm_oracle(r, -1);
        const SparseMat &E = tensor_E(2 * r - 1, r), &Fo = tensor_F(2 * r - 1, r);
        bool ok2 = pp * pp == pp && pm * pm == pm && (pp * pm).is_zero() && (pm * pp).is_zero();
        ok2 = ok2 && E * pp == pp * E && Fo * pp == pp * Fo;
        ok2 = ok2 && E * pm == pm * E && Fo * pm == pm * Fo;
        const EmbeddedBasis W = embed_two_sided(r);
        for (int j = 0; j <= r - 1; ++j) {
            const CycVec &vp = W.vec(lbl("a", j) + "+"), &vm = W.vec(lbl("a", j) + "-");
            ok2 = ok2 && veq(pp.apply(vp), vp) && vzero(pp.apply(vm));
            ok2 = ok2 && veq(pm.apply(vm), vm) && vzero(pm.apply(vp));
        }
        C.add("oracle:phi_pm", ok2);
    }

    return C.out;
}

}  // namespace smalltl

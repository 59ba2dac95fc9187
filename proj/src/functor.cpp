#include "smalltl/functor.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "smalltl/errors.hpp"

namespace smalltl {

namespace {

bool veq(const CycVec& a, const CycVec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

std::vector<int> block_indices(int n, int ones) {
    std::vector<int> idx;
    for (int b = 0; b < (1 << n); ++b)
        if (__builtin_popcount(static_cast<unsigned>(b)) == ones) idx.push_back(b);
    return idx;
}

void prune_zeros(std::map<int, Cyc>& v) {
    for (auto it = v.begin(); it != v.end();)
        it = it->second.is_zero() ? v.erase(it) : std::next(it);
}

std::map<int, Cyc> eval_column(const std::vector<SliceTerm>& terms, int j, const CycField* F) {
    std::map<int, Cyc> acc;
    for (const SliceTerm& t : terms) {
        if (t.coeff.is_zero()) continue;
        std::map<int, Cyc> v{{j, Cyc(F, 1)}};
        for (const IdSlice& s : t.word) v = apply_id_slice(s, v);
        for (const auto& [i, c] : v) acc[i] += t.coeff * c;
    }
    prune_zeros(acc);
    return acc;
}

}  // namespace

std::map<int, Cyc> apply_id_slice(const IdSlice& s, const std::map<int, Cyc>& v) {
    const int in_bits = __builtin_ctz(static_cast<unsigned>(s.m->cols()));
    const int out_bits = __builtin_ctz(static_cast<unsigned>(s.m->rows()));
    const int rshift = s.right;
    const int lowmask = (1 << rshift) - 1;
    const int midmask = (1 << in_bits) - 1;
    std::map<int, Cyc> out;
    for (const auto& [i, c] : v) {
        const int lo = i & lowmask;
        const int mid = (i >> rshift) & midmask;
        const int hi = i >> (rshift + in_bits);
        for (const auto& [k, w] : s.m->column(mid))
            out[(hi << (rshift + out_bits)) | (k << rshift) | lo] += c * w;
    }
    prune_zeros(out);
    return out;
}

bool slice_sums_equal(int source_dim, const std::vector<SliceTerm>& lhs,
                      const std::vector<SliceTerm>& rhs, const CycField* F) {
    for (int j = 0; j < source_dim; ++j)
        if (eval_column(lhs, j, F) != eval_column(rhs, j, F)) return false;
    return true;
}

SparseMat slice_sum_matrix(int source_strands, int target_strands,
                           const std::vector<SliceTerm>& terms, const CycField* F) {
    SparseMat out(1 << target_strands, 1 << source_strands);
    for (int j = 0; j < out.cols(); ++j)
        for (const auto& [i, c] : eval_column(terms, j, F)) out.add_at(i, j, c);
    return out;
}

FunctorContext::FunctorContext(int r) : r_(r), F_(CycField::get(RingTag::root(r).r)) {
    const Cyc q = Cyc::q_power(F_, 1);
    cap_ = SparseMat(1, 4);
    cap_.add_at(0, 1, Cyc(F_, -1));
    cap_.add_at(0, 2, q.inverse());
    cup_ = SparseMat(4, 1);
    cup_.add_at(1, 0, q);
    cup_.add_at(2, 0, Cyc(F_, -1));
}

SparseMat FunctorContext::uncached_tangle(const Tangle& t) {
    const Tangle::Decomposition d = t.decompose();
    auto caps = d.caps;
    std::sort(caps.begin(), caps.end(), [](const auto& a, const auto& b) {
        return a.second - a.first < b.second - b.first;
    });
    auto cups = d.cups;
    std::sort(cups.begin(), cups.end(), [](const auto& a, const auto& b) {
        return a.second - a.first > b.second - b.first;
    });

    std::vector<IdSlice> word;
    std::vector<int> active(t.bottom());
    for (int i = 0; i < t.bottom(); ++i) active[i] = i;
    for (const auto& [i, j] : caps) {
        const auto pos = std::lower_bound(active.begin(), active.end(), i);
        const int at = static_cast<int>(pos - active.begin());
        if (at + 1 >= static_cast<int>(active.size()) || active[at] != i || active[at + 1] != j)
            throw Error("tangle cap slices are out of order");
        word.push_back({&cap_, at, static_cast<int>(active.size()) - at - 2});
        active.erase(pos, pos + 2);
    }
    std::vector<int> present;
    for (const auto& [bot, top] : d.through) present.push_back(top);
    std::sort(present.begin(), present.end());
    for (const auto& [i, j] : cups) {
        const auto pos = std::lower_bound(present.begin(), present.end(), i);
        const int at = static_cast<int>(pos - present.begin());
        word.push_back({&cup_, at, static_cast<int>(present.size()) - at});
        present.insert(pos, {i, j});
    }

    SparseMat out(1 << t.top(), 1 << t.bottom());
    for (int c = 0; c < out.cols(); ++c) {
        std::map<int, Cyc> v{{c, Cyc(F_, 1)}};
        for (const IdSlice& s : word) v = apply_id_slice(s, v);
        for (const auto& [i, val] : v) out.add_at(i, c, val);
    }
    return out;
}

SparseMat FunctorContext::image_of_tangle(const Tangle& t) {
    if (auto it = tangle_cache_.find(t); it != tangle_cache_.end()) return it->second;
    SparseMat img = uncached_tangle(t);
    if (t.points() <= 12) tangle_cache_.emplace(t, img);
    return img;
}

SparseMat FunctorContext::image_of_morphism(const TLMorphism& f) {
    if (f.tag().is_root() && f.tag().r != r_)
        throw RingMismatch("morphism lives at a different root");
    const TLMorphism g = f.tag().is_root() ? f : f.specialized(r_);
    SparseMat out(1 << g.top(), 1 << g.bottom());
    for (const auto& [t, c] : g.terms()) {
        const Cyc& cc = c.root();
        const SparseMat img = image_of_tangle(t);
        for (int j = 0; j < img.cols(); ++j)
            for (const auto& [i, v] : img.column(j)) out.add_at(i, j, v * cc);
    }
    return out;
}

const SparseMat& FunctorContext::f_image(int m) {
    if (!((m >= 0 && m <= r_ - 1) || m == 2 * r_ - 1))
        throw IndexOutOfRange("f image index out of range");
    const std::string key = "f:" + std::to_string(m);
    if (auto it = named_.find(key); it != named_.end()) return it->second;
    return named_.emplace(key, image_of_morphism(build_f(m, tag()))).first->second;
}

const SparseMat& FunctorContext::g_image(int m) {
    const std::string key = "g:" + std::to_string(m);
    if (auto it = named_.find(key); it != named_.end()) return it->second;
    return named_.emplace(key, image_of_morphism(build_g(m, r_, tag()))).first->second;
}

const SparseMat& FunctorContext::h_image(int m) {
    const std::string key = "h:" + std::to_string(m);
    if (auto it = named_.find(key); it != named_.end()) return it->second;
    return named_.emplace(key, image_of_morphism(build_h(m, r_, tag()))).first->second;
}

const CycMatrix& FunctorContext::basis_simple(int m) {
    const std::string key = "Vx:" + std::to_string(m);
    if (auto it = bases_.find(key); it != bases_.end()) return it->second;
    return bases_.emplace(key, CycMatrix::from_columns(embed_simple(m, r_).vectors))
        .first->second;
}

const CycMatrix& FunctorContext::basis_projective(int m) {
    const std::string key = "Vp:" + std::to_string(m);
    if (auto it = bases_.find(key); it != bases_.end()) return it->second;
    return bases_.emplace(key, CycMatrix::from_columns(embed_projective(m, r_).vectors))
        .first->second;
}

const CycMatrix& FunctorContext::basis_big() {
    if (auto it = bases_.find("Vb"); it != bases_.end()) return it->second;
    return bases_.emplace("Vb", CycMatrix::from_columns(embed_two_sided(r_).vectors))
        .first->second;
}

const CycMatrix& FunctorContext::cobasis_simple(int m) {
    const std::string key = "Wx:" + std::to_string(m);
    if (auto it = bases_.find(key); it != bases_.end()) return it->second;
    return bases_.emplace(key, solve(basis_simple(m), f_image(m).to_dense())).first->second;
}

const CycMatrix& FunctorContext::cobasis_projective(int m) {
    const std::string key = "Wp:" + std::to_string(m);
    if (auto it = bases_.find(key); it != bases_.end()) return it->second;
    return bases_.emplace(key, solve(basis_projective(m), g_image(m).to_dense())).first->second;
}

const CycMatrix& FunctorContext::cobasis_big() {
    if (auto it = bases_.find("Wb"); it != bases_.end()) return it->second;
    return bases_.emplace("Wb", solve(basis_big(), f_image(2 * r_ - 1).to_dense())).first->second;
}

SparseMat FunctorContext::conjugated(const CycMatrix& v, const CycMatrix& mid,
                                     const CycMatrix& w) const {
    return SparseMat::from_dense(v * mid * w);
}

const SparseMat& FunctorContext::projector_half(int sign) {
    const std::string key = sign > 0 ? "p:+" : "p:-";
    if (auto it = named_.find(key); it != named_.end()) return it->second;
    SparseMat p = conjugated(basis_simple(r_ - 1), morphism_pi_pm(r_, sign), cobasis_big());
    return named_.emplace(key, std::move(p)).first->second;
}

const SparseMat& FunctorContext::injector_half(int sign) {
    const std::string key = sign > 0 ? "i:+" : "i:-";
    if (auto it = named_.find(key); it != named_.end()) return it->second;
    SparseMat p = conjugated(basis_big(), morphism_iota_pm(r_, sign), cobasis_simple(r_ - 1));
    return named_.emplace(key, std::move(p)).first->second;
}

SparseMat FunctorContext::hatted_epsilon(int m) {
    return conjugated(basis_projective(m), morphism_epsilon(m, r_), cobasis_projective(m));
}

SparseMat FunctorContext::hatted_pi(int m) {
    return conjugated(basis_simple(2 * r_ - m - 2), morphism_pi(m, r_), cobasis_projective(m));
}

SparseMat FunctorContext::hatted_iota(int m) {
    return conjugated(basis_projective(m), morphism_iota(m, r_),
                      cobasis_simple(2 * r_ - m - 2));
}

SparseMat FunctorContext::hatted_gamma(int m, int sign) {
    return conjugated(basis_projective(3 * r_ - m - 2), morphism_gamma(m, r_, sign),
                      cobasis_projective(m));
}

namespace {

struct Labeled {
    std::vector<std::pair<std::string, bool>> out;
    template <class Fn>
    void run(const std::string& label, Fn fn) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const Error&) {
            ok = false;
        }
        out.emplace_back(label, ok);
    }
};

bool projector_has_rank(const SparseMat& psi, int n, long expected) {
    long total = 0;
    for (int k = 0; k <= n; ++k) {
        const std::vector<int> idx = block_indices(n, k);
        std::vector<int> where(1 << n, -1);
        for (size_t i = 0; i < idx.size(); ++i) where[idx[i]] = static_cast<int>(i);
        CycMatrix sub(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
        for (size_t j = 0; j < idx.size(); ++j)
            for (const auto& [i, v] : psi.column(idx[j])) {
                if (where[i] < 0) return false;
                sub.set(where[i], static_cast<int>(j), v);
            }
        total += rank(sub);
    }
    return total == expected;
}

}  // namespace

std::vector<std::pair<std::string, bool>> functor_checks(int r, unsigned seed) {
    FunctorContext ctx(r);
    const CycField* F = ctx.field();
    const RingTag tag = ctx.tag();
    Labeled L;

    L.run("F:cup_cap", [&] {
        const SparseMat loop = ctx.image_of_morphism(
            TLMorphism::cap(tag).compose(TLMorphism::cup(tag)));
        bool ok = loop.rows() == 1 && loop.cols() == 1;
        ok = ok && loop.to_dense().at(0, 0) == -root_int(2, F);
        ok = ok && ctx.cap_matrix() * ctx.cup_matrix() == loop;
        ok = ok && ctx.image_of_tangle(Tangle::e(2, 0)) ==
                       ctx.cup_matrix() * ctx.cap_matrix();
        return ok;
    });

    L.run("E:F_f", [&] {
        for (int m = 0; m <= r - 1; ++m) {
            const SparseMat& f = ctx.f_image(m);
            if (!(f == phi_oracle(m, r, KernelRoute::ByE))) return false;
            if (!(f == phi_oracle(m, r, KernelRoute::ByF))) return false;
        }
        return true;
    });

    L.run("E:F_f_2r-1", [&] {
        return ctx.f_image(2 * r - 1) == phi_pm_oracle(r, +1) + phi_pm_oracle(r, -1);
    });

    L.run("E:F_g", [&] {
        for (int m = r; m <= 2 * r - 2; ++m) {
            const SparseMat& psi = ctx.g_image(m);
            if (!(psi * psi == psi)) return false;
            const SparseMat &E = tensor_E(m, r), &Fo = tensor_F(m, r), &K = tensor_K(m, r);
            if (!(E * psi == psi * E && Fo * psi == psi * Fo && K * psi == psi * K))
                return false;
            for (const CycVec& v : embed_projective(m, r).vectors)
                if (!veq(psi.apply(v), v)) return false;
            if (!projector_has_rank(psi, m, 2 * r)) return false;
        }
        return true;
    });

    L.run("E:F_h", [&] {
        for (int m = r; m <= 2 * r - 2; ++m) {
            const Cyc scale = -root_int(m + 1, F).inverse();
            if (!(ctx.h_image(m) == ctx.hatted_epsilon(m) * scale)) return false;
        }
        return true;
    });

    L.run("E:F_p", [&] {
        for (int m = r; m <= 2 * r - 2; ++m) {
            Cyc scale = root_factorial(m - r, F) / root_int(m + 1, F);
            if (m % 2 != 0) scale = -scale;
            if (!(ctx.image_of_morphism(build_p(m, r, tag)) == ctx.hatted_pi(m) * scale))
                return false;
        }
        return true;
    });

    L.run("E:F_i", [&] {
        for (int m = r; m <= 2 * r - 2; ++m) {
            const Cyc scale = root_factorial(m - r + 1, F).inverse();
            if (!(ctx.image_of_morphism(build_i(m, r, tag)) == ctx.hatted_iota(m) * scale))
                return false;
        }
        return true;
    });

    L.run("F:functorial", [&] {
        std::minstd_rand rng(seed);
        auto pick = [&](int a, int b) {
            const std::vector<Tangle> all = enumerate_tangles(a, b);
            return all[rng() % all.size()];
        };
        for (int trial = 0; trial < 36; ++trial) {
            const int a = rng() % 5;
            const int b = a % 2 + 2 * (rng() % 2);
            const int c = b % 2 + 2 * (rng() % 2);
            const Tangle t1 = pick(a, b), t2 = pick(b, c);
            const TLMorphism composed =
                TLMorphism::from_tangle(t2, tag).compose(TLMorphism::from_tangle(t1, tag));
            if (!(ctx.image_of_morphism(composed) ==
                  ctx.image_of_tangle(t2) * ctx.image_of_tangle(t1)))
                return false;
            if (!(ctx.image_of_tangle(tensor_tangles(t1, t2)) ==
                  ctx.image_of_tangle(t1).kronecker(ctx.image_of_tangle(t2))))
                return false;
        }
        return true;
    });

    return L.out;
}

}  // namespace smalltl

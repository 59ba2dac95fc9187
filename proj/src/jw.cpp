#include "smalltl/jw.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace smalltl {

namespace {

std::mutex cache_mu;
std::map<std::tuple<char, int, int, int>, TLMorphism> cache;

TLMorphism cached(char kind, int m, int r, RingTag tag,
                  const std::function<TLMorphism()>& make) {
    auto key = std::make_tuple(kind, m, r, tag.is_root() ? tag.r : -1);
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    TLMorphism v = make();
    std::lock_guard<std::mutex> lk(cache_mu);
    return cache.emplace(key, std::move(v)).first->second;
}

void require_range(const char* who, int m, int r, RingTag tag) {
    if (tag.is_root() && tag.r != r)
        throw RingMismatch(std::string(who) + ": ring is root(" + std::to_string(tag.r) +
                           ") but r = " + std::to_string(r));
    if (r < 3 || r % 2 == 0)
        throw IndexOutOfRange(std::string(who) + ": r must be odd and >= 3");
    if (m < r || m > 2 * r - 2)
        throw IndexOutOfRange(std::string(who) + ": need r <= m <= 2r-2, got m = " +
                              std::to_string(m) + ", r = " + std::to_string(r));
}

// Wenzl recursion step: f_m = f_{m-1} x 1 + ([m-1]/[m]) (f_{m-1} x 1) e_{m-1} (f_{m-1} x 1).
TLMorphism wenzl_step(int m, RingTag tag) {
    TLMorphism prev = build_f(m - 1, tag).tensor(TLMorphism::identity(1, tag));
    Scalar c = quantum_int(m - 1, tag) / quantum_int(m, tag);
    TLMorphism mid = prev.compose(TLMorphism::e(m, m - 2, tag)).compose(prev);
    return prev + mid * c;
}

// f_{2r-1} from the closed recursion that survives specialization:
// a + ([2r-2]/[2r-1]) b + ({r}'/[2r-1]) c with a = g_{2r-2} x 1,
// b = (g_{2r-2} x 1) e (g_{2r-2} x 1), c = (g_{2r-2} x 1) e (h_{2r-2} x 1).
TLMorphism f_top(int r, RingTag tag) {
    int m = 2 * r - 1;
    TLMorphism id1 = TLMorphism::identity(1, tag);
    TLMorphism a = build_g(m - 1, r, tag).tensor(id1);
    TLMorphism hh = build_h(m - 1, r, tag).tensor(id1);
    TLMorphism e = TLMorphism::e(m, m - 2, tag);
    TLMorphism ae = a.compose(e);
    Scalar cb = quantum_int(m - 1, tag) / quantum_int(m, tag);
    Scalar cc = quantum_brace_prime(r, tag) / quantum_int(m, tag);
    return a + ae.compose(a) * cb + ae.compose(hh) * cc;
}

}  // namespace

TLMorphism build_f(int m, RingTag tag) {
    if (m < 0) throw IndexOutOfRange("build_f: m must be >= 0");
    if (tag.is_root()) {
        int r = tag.r;
        if ((m >= r && m <= 2 * r - 2) || m > 2 * r - 1)
            throw PoleAtRootOfUnity("build_f: f_" + std::to_string(m) +
                                    " does not specialize at root(" + std::to_string(r) + ")");
        if (m == 2 * r - 1) return cached('f', m, r, tag, [&] { return f_top(r, tag); });
    }
    return cached('f', m, 0, tag, [&]() -> TLMorphism {
        if (m <= 1) return TLMorphism::identity(m, tag);
        return wenzl_step(m, tag);
    });
}

TLMorphism build_h(int m, int r, RingTag tag) {
    require_range("build_h", m, r, tag);
    return cached('h', m, r, tag, [&] {
        int s = m - r + 1, t = 2 * r - m - 2;
        TLMorphism fr1 = build_f(r - 1, tag);
        TLMorphism w = TLMorphism::identity(t, tag)
                           .tensor(TLMorphism::from_tangle(Tangle::cap_nest(s), tag))
                           .compose(fr1.tensor(TLMorphism::identity(s, tag)));
        TLMorphism u = fr1.tensor(TLMorphism::identity(s, tag))
                           .compose(TLMorphism::identity(t, tag).tensor(
                               TLMorphism::from_tangle(Tangle::cup_nest(s), tag)));
        Scalar c = quantum_int(2 * r - m - 1, tag);
        if (m % 2 != 0) c = -c;
        return u.compose(w) * c;
    });
}

TLMorphism build_g(int m, int r, RingTag tag) {
    require_range("build_g", m, r, tag);
    return cached('g', m, r, tag, [&]() -> TLMorphism {
        if (!tag.is_root())
            return build_f(m, tag) + build_h(m, r, tag) * quantum_int(r, tag).inverse();

        TLMorphism id1 = TLMorphism::identity(1, tag);
        if (m == r) return build_f(r - 1, tag).tensor(build_f(1, tag));
        if (m == r + 1) {
            // Four-term recursion; the [r]/[r+1] term drops at the root.
            TLMorphism a = build_g(r, r, tag).tensor(id1);
            TLMorphism e1 = TLMorphism::e(m, m - 3, tag);
            TLMorphism e2 = TLMorphism::e(m, m - 2, tag);
            TLMorphism c = a.compose(e1).compose(a).compose(e2).compose(a);
            TLMorphism d = a.compose(e2).compose(a).compose(e1).compose(a);
            TLMorphism w = a.compose(e1).compose(a).compose(e2).compose(e1).compose(a);
            Scalar ccd = quantum_int(r - 1, tag) / quantum_int(r + 1, tag);
            Scalar cw = ccd * quantum_int(2, tag);
            return a + (c + d) * ccd + w * cw;
        }
        TLMorphism a = build_g(m - 1, r, tag).tensor(id1);
        TLMorphism hh = build_h(m - 1, r, tag).tensor(id1);
        TLMorphism e = TLMorphism::e(m, m - 2, tag);
        TLMorphism ae = a.compose(e);
        Scalar cb = quantum_int(m - 1, tag) / quantum_int(m, tag);
        Scalar cc = quantum_brace_prime(r, tag) /
                    (quantum_int(2 * r - m, tag) * quantum_int(m, tag));
        return a + ae.compose(a) * cb + ae.compose(hh) * cc;
    });
}

TLMorphism build_p(int m, int r, RingTag tag) {
    require_range("build_p", m, r, tag);
    if (!tag.is_root()) throw RingMismatch("build_p: defined in the root ring only");
    return cached('p', m, r, tag, [&] {
        int s = m - r + 1, t = 2 * r - m - 2;
        TLMorphism caps = TLMorphism::identity(t, tag).tensor(
            TLMorphism::from_tangle(Tangle::cap_nest(s), tag));
        return caps.compose(build_g(m, r, tag));
    });
}

TLMorphism build_i(int m, int r, RingTag tag) {
    require_range("build_i", m, r, tag);
    if (!tag.is_root()) throw RingMismatch("build_i: defined in the root ring only");
    return cached('i', m, r, tag, [&] {
        int s = m - r + 1, t = 2 * r - m - 2;
        TLMorphism cups = TLMorphism::identity(t, tag).tensor(
            TLMorphism::from_tangle(Tangle::cup_nest(s), tag));
        return build_g(m, r, tag).compose(cups);
    });
}

}  // namespace smalltl

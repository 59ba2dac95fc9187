#include "smalltl/verify.hpp"

#include <algorithm>

#include "smalltl/errors.hpp"
#include "smalltl/extended.hpp"
#include "smalltl/functor.hpp"
#include "smalltl/jw.hpp"
#include "smalltl/scalars.hpp"
#include "smalltl/tangles.hpp"
#include "smalltl/uq.hpp"

namespace smalltl {

namespace {

void check_level(int r) {
    if (r < 3 || r % 2 == 0)
        throw IndexOutOfRange("verify: r must be odd and at least 3");
}

std::string itos(long v) { return std::to_string(v); }

struct Labeled {
    CheckList results;

    template <typename Fn>
    void run(const std::string& label, Fn&& fn) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const Error&) {
            ok = false;
        }
        results.emplace_back(label, ok);
    }
};

TLMorphism id_(int m, RingTag tag) { return TLMorphism::identity(m, tag); }

/// Cap applied above f on strands j, j+1 (1-indexed), cup applied below.
TLMorphism cap_at(const TLMorphism& f, int j) {
    RingTag tag = f.tag();
    return id_(j - 1, tag)
        .tensor(TLMorphism::cap(tag))
        .tensor(id_(f.top() - j - 1, tag))
        .compose(f);
}

TLMorphism cup_at(const TLMorphism& f, int j) {
    RingTag tag = f.tag();
    return f.compose(
        id_(j - 1, tag).tensor(TLMorphism::cup(tag)).tensor(id_(f.bottom() - j - 1, tag)));
}

Scalar sign_of(long k, RingTag tag) {
    return Scalar::integer(k % 2 == 0 ? 1 : -1, tag);
}

/// Indices n of the lower idempotent in absorption checks. Small levels are
/// cheap enough to sweep the full range; above that the representative
/// prefix r..r+1 keeps the suite inside its runtime budget while the
/// diagonal n = m stays covered by the idempotence checks.
std::vector<int> absorb_ns(int m, int r) {
    std::vector<int> ns;
    int hi = (r == 3) ? m : std::min(m, r + 1);
    for (int n = r; n <= hi; ++n) ns.push_back(n);
    return ns;
}

}  // namespace

CheckList scalar_checks(int r) {
    check_level(r);
    const CycField* F = CycField::get(r);
    Labeled out;

    out.run("Q:int_basic", [&] {
        if (!generic_int(0).is_zero() || !generic_int(1).is_one()) return false;
        LaurentPoly two = LaurentPoly::monomial(1, 2) + LaurentPoly::monomial(1, -2);
        if (generic_int(2) != GenericScalar(two)) return false;
        for (long k = 0; k <= 6; ++k)
            if (generic_int(-k) != -generic_int(k)) return false;
        return true;
    });

    out.run("Q:int_pascal", [&] {
        for (long k = 1; k <= 9; ++k) {
            if (generic_int(k + 1) != generic_int(2) * generic_int(k) - generic_int(k - 1))
                return false;
            if (generic_int(k) * generic_int(k) - generic_int(k + 1) * generic_int(k - 1) !=
                GenericScalar(1))
                return false;
        }
        return true;
    });

    out.run("Q:brace_factor", [&] {
        for (long k = 0; k <= 9; ++k) {
            if (generic_brace(k) != generic_int(k) * generic_brace(1)) return false;
            if (generic_int(2 * k) != generic_int(k) * generic_brace_prime(k)) return false;
            if (generic_brace(k) * generic_brace_prime(k) != generic_brace(2 * k)) return false;
        }
        return true;
    });

    out.run("Q:factorial", [&] {
        if (!generic_factorial(0).is_one()) return false;
        for (long k = 1; k <= 8; ++k)
            if (generic_factorial(k) != generic_int(k) * generic_factorial(k - 1)) return false;
        return true;
    });

    out.run("Q:qpower", [&] {
        Cyc q = Cyc::q_power(F, 1);
        Cyc acc(F, 1), sum(F, 0);
        for (int e = 0; e < r; ++e) {
            sum += acc;
            acc = acc * q;
        }
        if (acc != Cyc(F, 1)) return false;
        if (!sum.is_zero()) return false;
        for (int e = 1; e < r; ++e)
            if (Cyc::q_power(F, e).is_one()) return false;
        return true;
    });

    out.run("Q:inverse", [&] {
        for (int e = 1; e < r; ++e)
            if (Cyc::q_power(F, e).inverse() != Cyc::q_power(F, r - e)) return false;
        Cyc x(F, mpq_class(7, 3));
        if (!(x * x.inverse()).is_one()) return false;
        for (long k = 1; k < r; ++k)
            if (!(root_int(k, F) * root_int(k, F).inverse()).is_one()) return false;
        return true;
    });

    out.run("Q:root_vanish", [&] {
        return root_int(r, F).is_zero() && root_factorial(r, F).is_zero() &&
               !root_factorial(r - 1, F).is_zero();
    });

    out.run("Q:root_period", [&] {
        for (long k = 0; k <= r; ++k) {
            if (root_int(k + r, F) != root_int(k, F)) return false;
            if (root_int(r - k, F) != -root_int(k, F)) return false;
            if (root_int(2 * r - k, F) != -root_int(k, F)) return false;
        }
        return root_int(r + 1, F).is_one() && root_int(r - 1, F) == Cyc(F, -1) &&
               root_brace_prime(r, F) == Cyc(F, 2) && root_int(2 * r, F).is_zero();
    });

    out.run("Q:specialize", [&] {
        for (long k = 0; k < 2 * r; ++k)
            if (specialize(generic_int(k), r) != root_int(k, F)) return false;
        for (long k = 0; k <= r + 1; ++k) {
            if (specialize(generic_brace(k), r) != root_brace(k, F)) return false;
            if (specialize(generic_brace_prime(k), r) != root_brace_prime(k, F)) return false;
            if (specialize(generic_factorial(k), r) != root_factorial(k, F)) return false;
        }
        return true;
    });

    out.run("Q:pole", [&] {
        bool threw = false;
        try {
            specialize(GenericScalar(1) / generic_int(r), r);
        } catch (const PoleAtRootOfUnity&) {
            threw = true;
        }
        if (!threw) return false;
        if (specialize(generic_int(r) / generic_int(r - 1), r) !=
            root_int(r, F) / root_int(r - 1, F))
            return false;
        return specialize(generic_int(r) / generic_int(r), r).is_one();
    });

    return out.results;
}

CheckList tangle_checks(int r) {
    check_level(r);
    const RingTag G = RingTag::generic();
    const long cat[6] = {1, 1, 2, 5, 14, 42};
    Labeled out;

    for (int n = 0; n <= 10; n += 2) {
        out.run("T:catalan[n=" + itos(n) + "]", [&] {
            for (int m = 0; m <= n; ++m)
                if (enumerate_tangles(m, n - m).size() != static_cast<size_t>(cat[n / 2]))
                    return false;
            return true;
        });
    }
    out.run("T:catalan[odd]", [&] {
        return enumerate_tangles(1, 2).empty() && enumerate_tangles(3, 0).empty() &&
               enumerate_tangles(2, 5).empty();
    });

    out.run("T:parse_roundtrip", [&] {
        for (auto [m, mp] :
             {std::pair<int, int>{3, 3}, {4, 2}, {0, 6}, {5, 1}, {2, 2}}) {
            for (const Tangle& t : enumerate_tangles(m, mp))
                if (Tangle::parse(t.to_string()) != t) return false;
        }
        bool threw = false;
        try {
            Tangle(4, 0, {{0, 2}, {1, 3}});
        } catch (const Error&) {
            threw = true;
        }
        if (!threw) return false;
        threw = false;
        try {
            Tangle::parse("3->1:[");
        } catch (const Error&) {
            threw = true;
        }
        return threw;
    });

    out.run("T:snake", [&] {
        for (int k = 1; k <= 3; ++k) {
            TLMorphism idk = id_(k, G);
            TLMorphism cupn = TLMorphism::from_tangle(Tangle::cup_nest(k), G);
            TLMorphism capn = TLMorphism::from_tangle(Tangle::cap_nest(k), G);
            if (capn.tensor(idk).compose(idk.tensor(cupn)) != idk) return false;
            if (idk.tensor(capn).compose(cupn.tensor(idk)) != idk) return false;
        }
        return true;
    });

    out.run("T:loop", [&] {
        for (RingTag tag : {G, RingTag::root(r)}) {
            Scalar d = TLMorphism::loop_value(tag);
            if (d != -quantum_int(2, tag)) return false;
            if (TLMorphism::cap(tag).compose(TLMorphism::cup(tag)) != id_(0, tag) * d)
                return false;
            TLMorphism capn = TLMorphism::from_tangle(Tangle::cap_nest(2), tag);
            TLMorphism cupn = TLMorphism::from_tangle(Tangle::cup_nest(2), tag);
            if (capn.compose(cupn) != id_(0, tag) * (d * d)) return false;
        }
        return true;
    });

    out.run("T:tl_rel", [&] {
        Scalar d = TLMorphism::loop_value(G);
        for (int m : {4, 5}) {
            for (int i = 0; i + 2 <= m; ++i) {
                TLMorphism ei = TLMorphism::e(m, i, G);
                if (ei.compose(ei) != ei * d) return false;
                if (i + 3 <= m) {
                    TLMorphism ej = TLMorphism::e(m, i + 1, G);
                    if (ei.compose(ej).compose(ei) != ei) return false;
                    if (ej.compose(ei).compose(ej) != ej) return false;
                }
                for (int j = i + 2; j + 2 <= m; ++j) {
                    TLMorphism ej = TLMorphism::e(m, j, G);
                    if (ei.compose(ej) != ej.compose(ei)) return false;
                }
            }
        }
        return true;
    });

    out.run("T:assoc", [&] {
        std::vector<TLMorphism> gens;
        for (int i = 0; i <= 2; ++i) gens.push_back(TLMorphism::e(4, i, G));
        gens.push_back(id_(4, G));
        for (const TLMorphism& a : gens)
            for (const TLMorphism& b : gens)
                for (const TLMorphism& c : gens)
                    if (a.compose(b).compose(c) != a.compose(b.compose(c))) return false;
        Scalar s = quantum_int(3, G);
        TLMorphism a = gens[0], b = gens[1], c = gens[2];
        if ((a + b * s).compose(c) != a.compose(c) + b.compose(c) * s) return false;
        if (c.compose(a + b * s) != c.compose(a) + c.compose(b) * s) return false;
        TLMorphism f1 = TLMorphism::e(2, 0, G), g1 = id_(2, G);
        TLMorphism f2 = TLMorphism::e(3, 1, G), g2 = TLMorphism::e(3, 0, G);
        return (g1.compose(f1)).tensor(g2.compose(f2)) ==
               g1.tensor(g2).compose(f1.tensor(f2));
    });

    out.run("T:rotate", [&] {
        if (rotate_pi(Tangle::e(4, 0)) != Tangle::e(4, 2)) return false;
        if (rotate_pi(Tangle::cup()) != Tangle::cap()) return false;
        for (const Tangle& t : enumerate_tangles(3, 3))
            if (rotate_pi(rotate_pi(t)) != t) return false;
        TLMorphism x = TLMorphism::e(4, 0, G) + TLMorphism::e(4, 2, G) * quantum_int(2, G);
        if (x.rotated_pi().rotated_pi() != x) return false;
        TLMorphism f = TLMorphism::e(4, 1, G), g = TLMorphism::e(4, 2, G);
        if (g.compose(f).rotated_pi() != f.rotated_pi().compose(g.rotated_pi())) return false;
        TLMorphism a = TLMorphism::e(2, 0, G), b = id_(1, G);
        return a.tensor(b).rotated_pi() == b.rotated_pi().tensor(a.rotated_pi());
    });

    out.run("T:ptr", [&] {
        Scalar d = TLMorphism::loop_value(G);
        if (id_(3, G).partial_trace_right(1) != id_(2, G) * d) return false;
        if (id_(3, G).partial_trace_right(3) != id_(0, G) * (d * d * d)) return false;
        if (TLMorphism::e(3, 1, G).partial_trace_right(1) != id_(2, G)) return false;
        if (TLMorphism::e(4, 1, G).partial_trace_right(4) != id_(0, G) * (d * d * d))
            return false;
        TLMorphism f = TLMorphism::e(4, 2, G) + id_(4, G) * quantum_int(2, G);
        return f.partial_trace_right(2) ==
               f.partial_trace_right(1).partial_trace_right(1);
    });

    return out.results;
}

CheckList jw_generic_checks(int r) {
    check_level(r);
    const RingTag G = RingTag::generic();
    Labeled out;

    for (int m = 0; m <= 2 * r - 2; ++m) {
        out.run("E:f_f[m=" + itos(m) + "]", [&] {
            TLMorphism f = build_f(m, G);
            if (f.compose(f) != f) return false;
            if (f.rotated_pi() != f) return false;
            if (!f.coefficient(Tangle::identity(m)).is_one()) return false;
            int hi = std::min(m - 1, r);
            for (int n = 0; n <= hi; ++n) {
                TLMorphism low = build_f(n, G).tensor(id_(m - n, G));
                if (f.compose(low) != f) return false;
                if (low.compose(f) != f) return false;
            }
            return true;
        });
    }

    for (int m = 2; m <= 2 * r - 2; ++m) {
        out.run("E:f_cups_caps[m=" + itos(m) + "]", [&] {
            TLMorphism f = build_f(m, G);
            for (int j = 1; j <= m - 1; ++j)
                if (!cap_at(f, j).is_zero() || !cup_at(f, j).is_zero()) return false;
            return true;
        });
    }

    for (int m = 1; m <= 2 * r - 2; ++m) {
        out.run("E:f_ptr_k[m=" + itos(m) + "]", [&] {
            TLMorphism f = build_f(m, G);
            for (int k = 0; k <= m; ++k) {
                Scalar c = sign_of(k, G) * quantum_int(m + 1, G) / quantum_int(m - k + 1, G);
                if (f.partial_trace_right(k) != build_f(m - k, G) * c) return false;
            }
            return true;
        });
    }

    for (int m = r; m <= 2 * r - 2; ++m) {
        TLMorphism g = build_g(m, r, G), h = build_h(m, r, G), f = build_f(m, G);
        std::string at = "[m=" + itos(m) + "]";

        out.run("E:g_g" + at, [&] {
            if (g != f + h * quantum_int(r, G).inverse()) return false;
            if (g.compose(g) != g) return false;
            if (m == 2 * r - 2 && g.rotated_pi() != g) return false;
            for (int n : absorb_ns(m, r)) {
                if (n == m) continue;
                TLMorphism gn = build_g(n, r, G).tensor(id_(m - n, G));
                if (g.compose(gn) != g || gn.compose(g) != g) return false;
            }
            return true;
        });

        out.run("E:h_h" + at, [&] {
            Scalar qr = quantum_int(r, G);
            if (m == 2 * r - 2 && h.rotated_pi() != h) return false;
            for (int n : absorb_ns(m, r)) {
                TLMorphism hn = build_h(n, r, G).tensor(id_(m - n, G));
                if (h.compose(hn) != h * qr || hn.compose(h) != h * qr) return false;
            }
            return true;
        });

        out.run("E:f_g" + at, [&] {
            for (int n : absorb_ns(m, r)) {
                TLMorphism gn = build_g(n, r, G).tensor(id_(m - n, G));
                if (f.compose(gn) != f || gn.compose(f) != f) return false;
            }
            return true;
        });

        out.run("E:f_h" + at, [&] {
            for (int n : absorb_ns(m, r)) {
                TLMorphism hn = build_h(n, r, G).tensor(id_(m - n, G));
                if (!f.compose(hn).is_zero() || !hn.compose(f).is_zero()) return false;
            }
            return true;
        });

        out.run("E:g_h" + at, [&] {
            for (int n : absorb_ns(m, r)) {
                TLMorphism hn = build_h(n, r, G).tensor(id_(m - n, G));
                if (g.compose(hn) != h || hn.compose(g) != h) return false;
            }
            return true;
        });

        out.run("E:g_cups_caps" + at, [&] {
            for (int j = 1; j <= m - 1; ++j) {
                if (j == r - 1) continue;
                if (!cap_at(g, j).is_zero() || !cup_at(g, j).is_zero()) return false;
            }
            return !cap_at(g, r - 1).is_zero() && !cup_at(g, r - 1).is_zero();
        });

        out.run("E:h_cups_caps" + at, [&] {
            for (int j = 1; j <= m - 1; ++j) {
                if (j == r - 1) continue;
                if (!cap_at(h, j).is_zero() || !cup_at(h, j).is_zero()) return false;
            }
            return !cap_at(h, r - 1).is_zero() && !cup_at(h, r - 1).is_zero();
        });

        out.run("E:g_ptr_k_a" + at, [&] {
            for (int k = 0; k <= m - r; ++k) {
                Scalar c1 = sign_of(k, G) * quantum_int(m + 1, G) / quantum_int(m - k + 1, G);
                Scalar c2 = sign_of(k, G) * quantum_brace_prime(r, G) * quantum_int(k, G) /
                            (quantum_int(2 * r - m + k - 1, G) * quantum_int(m - k + 1, G));
                if (g.partial_trace_right(k) !=
                    build_g(m - k, r, G) * c1 - build_h(m - k, r, G) * c2)
                    return false;
            }
            return true;
        });

        out.run("E:h_ptr_k_a" + at, [&] {
            for (int k = 0; k <= m - r; ++k) {
                Scalar c = sign_of(k, G) * quantum_int(2 * r - m - 1, G) /
                           quantum_int(2 * r - m + k - 1, G);
                if (h.partial_trace_right(k) != build_h(m - k, r, G) * c) return false;
            }
            return true;
        });

        out.run("E:g_ptr_k_b" + at, [&] {
            for (int k = m - r + 1; k <= m; ++k) {
                Scalar c = sign_of(k, G) * quantum_int(r, G) *
                           quantum_brace_prime(m - r + 1, G) / quantum_int(m - k + 1, G);
                if (g.partial_trace_right(k) != build_f(m - k, G) * c) return false;
            }
            return true;
        });

        out.run("E:h_ptr_k_b" + at, [&] {
            for (int k = m - r + 1; k <= m; ++k) {
                Scalar c = sign_of(k, G) * quantum_int(r, G) *
                           quantum_int(2 * r - m - 1, G) / quantum_int(m - k + 1, G);
                if (h.partial_trace_right(k) != build_f(m - k, G) * c) return false;
            }
            return true;
        });
    }

    return out.results;
}

CheckList jw_root_checks(int r) {
    check_level(r);
    const RingTag G = RingTag::generic();
    const RingTag R = RingTag::root(r);
    Labeled out;

    out.run("E:f_pole", [&] {
        for (int m = 0; m <= 2 * r + 1; ++m) {
            bool pole = (m >= r && m <= 2 * r - 2) || m > 2 * r - 1;
            bool threw = false;
            try {
                build_f(m, R);
            } catch (const PoleAtRootOfUnity&) {
                threw = true;
            }
            if (threw != pole) return false;
        }
        return true;
    });

    out.run("X:f_root_idem", [&] {
        for (int m = 0; m <= r - 1; ++m) {
            TLMorphism f = build_f(m, R);
            if (f.compose(f) != f || f.rotated_pi() != f) return false;
        }
        TLMorphism top = build_f(2 * r - 1, R);
        return top.compose(top) == top && top.rotated_pi() == top;
    });

    for (int m = 0; m <= r - 1; ++m) {
        out.run("E:f_specialize[m=" + itos(m) + "]", [&] {
            return build_f(m, G).specialized(r) == build_f(m, R);
        });
    }

    out.run("E:g_r", [&] {
        if (build_g(r, r, G) != build_f(r - 1, G).tensor(build_f(1, G))) return false;
        return build_g(r, r, R) == build_f(r - 1, R).tensor(build_f(1, R));
    });

    out.run("E:g_r+1", [&] {
        int m = r + 1;
        TLMorphism a = build_g(r, r, G).tensor(id_(1, G));
        TLMorphism e1 = TLMorphism::e(m, m - 3, G), e2 = TLMorphism::e(m, m - 2, G);
        TLMorphism c = a.compose(e1).compose(a).compose(e2).compose(a);
        TLMorphism d = a.compose(e2).compose(a).compose(e1).compose(a);
        TLMorphism w = a.compose(e1).compose(a).compose(e2).compose(e1).compose(a);
        TLMorphism b = a.compose(e2).compose(a);
        Scalar ccd = quantum_int(r - 1, G) / quantum_int(r + 1, G);
        return build_g(m, r, G) ==
               a + (c + d) * ccd + w * (ccd * quantum_int(2, G)) +
                   b * (quantum_int(r, G) / quantum_int(r + 1, G));
    });

    for (int m = r + 2; m <= 2 * r - 2; ++m) {
        out.run("E:g_m[m=" + itos(m) + "]", [&] {
            TLMorphism a = build_g(m - 1, r, G).tensor(id_(1, G));
            TLMorphism ha = build_h(m - 1, r, G).tensor(id_(1, G));
            TLMorphism ae = a.compose(TLMorphism::e(m, m - 2, G));
            Scalar cb = quantum_int(m - 1, G) / quantum_int(m, G);
            Scalar cc = quantum_brace_prime(r, G) /
                        (quantum_int(2 * r - m, G) * quantum_int(m, G));
            return build_g(m, r, G) == a + ae.compose(a) * cb + ae.compose(ha) * cc;
        });
    }

    out.run("E:f_2r-1", [&] {
        int m = 2 * r - 1;
        TLMorphism ga = build_g(m - 1, r, G).tensor(id_(1, G));
        TLMorphism ha = build_h(m - 1, r, G).tensor(id_(1, G));
        TLMorphism gae = ga.compose(TLMorphism::e(m, m - 2, G));
        TLMorphism rhs = ga + gae.compose(ga) * (quantum_int(m - 1, G) / quantum_int(m, G)) +
                         gae.compose(ha) * (quantum_brace_prime(r, G) / quantum_int(m, G));
        if (build_f(m, G) != rhs) return false;
        if (r == 3) {
            TLMorphism hae = ha.compose(TLMorphism::e(m, m - 2, G));
            if (gae.compose(ha) != hae.compose(ga)) return false;
        }
        return true;
    });

    out.run("E:f_specialize[m=" + itos(2 * r - 1) + "]", [&] {
        return build_f(2 * r - 1, G).specialized(r) == build_f(2 * r - 1, R);
    });

    for (int m = r; m <= 2 * r - 2; ++m) {
        out.run("E:g_specialize[m=" + itos(m) + "]", [&] {
            TLMorphism g = build_g(m, r, R);
            return g == build_g(m, r, G).specialized(r) && g.compose(g) == g;
        });
        out.run("E:h_specialize[m=" + itos(m) + "]", [&] {
            TLMorphism h = build_h(m, r, R);
            return h == build_h(m, r, G).specialized(r) && h.rotated_pi() == h;
        });
    }

    out.run("E:f_ambi", [&] {
        TLMorphism f = build_f(r - 1, R);
        TLMorphism id1 = id_(1, R), side = id_(r - 2, R);
        TLMorphism cap = TLMorphism::cap(R), cup = TLMorphism::cup(R);
        if (side.tensor(cap).compose(f.tensor(id1)) !=
            -(cap.tensor(side).compose(id1.tensor(f))))
            return false;
        if (f.tensor(id1).compose(side.tensor(cup)) !=
            -(id1.tensor(f).compose(cup.tensor(side))))
            return false;
        TLMorphism fg = build_f(r - 1, G);
        TLMorphism gid1 = id_(1, G), gside = id_(r - 2, G);
        TLMorphism gcap = TLMorphism::cap(G);
        return gside.tensor(gcap).compose(fg.tensor(gid1)) !=
               -(gcap.tensor(gside).compose(gid1.tensor(fg)));
    });

    for (int m = r; m <= 2 * r - 2; ++m) {
        int s = m - r + 1, t = 2 * r - m - 2;
        out.run("E:p_i_def[m=" + itos(m) + "]", [&] {
            TLMorphism p = build_p(m, r, R), i = build_i(m, r, R), g = build_g(m, r, R);
            if (p.bottom() != m || p.top() != t || i.bottom() != t || i.top() != m)
                return false;
            TLMorphism ft = build_f(t, R);
            return p.compose(g) == p && g.compose(i) == i && ft.compose(p) == p &&
                   i.compose(ft) == i;
        });
        out.run("E:p_i_m[m=" + itos(m) + "]", [&] {
            TLMorphism g = build_g(m, r, R);
            TLMorphism caps = build_f(t, R).tensor(
                TLMorphism::from_tangle(Tangle::cap_nest(s), R));
            TLMorphism cups = build_f(t, R).tensor(
                TLMorphism::from_tangle(Tangle::cup_nest(s), R));
            return caps.compose(g) == build_p(m, r, R) &&
                   g.compose(cups) == build_i(m, r, R);
        });
    }

    return out.results;
}

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "scalars", "tangles", "jw-generic", "jw-root",
        "uq",      "appendix", "functor",   "extended",
    };
    return names;
}

CheckList run_suite(const std::string& name, int r, unsigned seed) {
    check_level(r);
    if (name == "all") {
        CheckList all;
        for (const std::string& part : verify_suite_names()) {
            CheckList one = run_suite(part, r, seed);
            all.insert(all.end(), one.begin(), one.end());
        }
        return all;
    }
    if (name == "scalars") return scalar_checks(r);
    if (name == "tangles") return tangle_checks(r);
    if (name == "jw-generic") return jw_generic_checks(r);
    if (name == "jw-root") return jw_root_checks(r);
    if (name == "uq") return module_structure_checks(r);
    if (name == "appendix") return appendix_checks(r);
    if (name == "functor") return functor_checks(r, seed);
    if (name == "extended") return extended_checks(r);
    throw IndexOutOfRange("verify: unknown suite '" + name + "'");
}

}  // namespace smalltl

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "smalltl/errors.hpp"
#include "smalltl/extended.hpp"
#include "smalltl/jw.hpp"

using namespace smalltl;

namespace {

const int R = 3;
const RingTag RT = RingTag::root(R);

void require_all(const std::vector<std::pair<std::string, bool>>& results) {
    for (const auto& [label, ok] : results) {
        CAPTURE(label);
        CHECK(ok);
    }
}

}  // namespace

TEST_CASE("factories validate eagerly") {
    CHECK_THROWS_AS(ExtMorphism::named_f(3, R), PoleAtRootOfUnity);
    CHECK_THROWS_AS(ExtMorphism::named_f(4, R), PoleAtRootOfUnity);
    CHECK_NOTHROW(ExtMorphism::named_f(5, R));
    CHECK_THROWS_AS(ExtMorphism::named_f(-1, R), IndexOutOfRange);
    CHECK_THROWS_AS(ExtMorphism::named_g(2, R), IndexOutOfRange);
    CHECK_THROWS_AS(ExtMorphism::named_g(5, R), IndexOutOfRange);
    CHECK_THROWS_AS(ExtMorphism::named_h(5, R), IndexOutOfRange);
    CHECK_THROWS_AS(ExtMorphism::proj_half(0, R), IndexOutOfRange);
    CHECK_THROWS_AS(
        ExtMorphism::compose(ExtMorphism::named_f(2, R), ExtMorphism::named_f(1, R)),
        ShapeMismatch);
    CHECK_THROWS_AS(ExtMorphism::tl(build_f(2, RingTag::generic()), R), RingMismatch);

    ExtMorphism p = ExtMorphism::proj_half(+1, R);
    CHECK(p.bottom() == 2 * R - 1);
    CHECK(p.top() == R - 1);
    ExtMorphism i = ExtMorphism::inj_half(-1, R);
    CHECK(i.bottom() == R - 1);
    CHECK(i.top() == 2 * R - 1);
}

TEST_CASE("text round trips and parse errors") {
    for (const char* text : {
             "p+ ; i+",
             "p- * i-",
             "(i+ ; p+) * id:1",
             "f:2 * g:3",
             "4->2:[(0,1),(2,5),(3,4)] ; f:2",
             "h:3 ; 3->1:[(1,2),(0,3)]",
         }) {
        ExtMorphism a = ExtMorphism::parse(text, R);
        ExtMorphism b = ExtMorphism::parse(a.to_text(), R);
        CHECK(a.to_text() == b.to_text());
        CHECK(a.to_json() == b.to_json());
    }

    CHECK_THROWS_AS(ExtMorphism::parse("p+ ;; i+", R), ParseError);
    CHECK_THROWS_AS(ExtMorphism::parse("", R), ParseError);
    CHECK_THROWS_AS(ExtMorphism::parse("(p+ ; i+", R), ParseError);
    CHECK_THROWS_AS(ExtMorphism::parse("q:2", R), ParseError);
    CHECK_THROWS_AS(ExtMorphism::parse("f:9", R), ParseError);
    CHECK_THROWS_AS(ExtMorphism::parse("p+ ; p+", R), ParseError);

    try {
        ExtMorphism::parse("p+ ; x", R);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("json round trips multi-term leaves exactly") {
    const CycField* F = CycField::get(R);
    TLMorphism x = TLMorphism::identity(2, RT);
    x.add_term(Tangle::e(2, 0), Scalar(Cyc(F, mpq_class(2, 3)) + Cyc::q_power(F, 1)));
    ExtMorphism leaf = ExtMorphism::tl(x, R);
    ExtMorphism tree = ExtMorphism::tensor(leaf, ExtMorphism::proj_half(-1, R));

    std::string j = tree.to_json();
    ExtMorphism back = ExtMorphism::from_json(j, R);
    CHECK(back.to_json() == j);

    FunctorContext ctx(R);
    CHECK(tree.image(ctx) == back.image(ctx));
    CHECK_THROWS_AS(ExtMorphism::from_json("{\"kind\":\"widget\"}", R), ParseError);
    CHECK_THROWS_AS(ExtMorphism::from_json("not json", R), ParseError);

    CHECK_THROWS_AS(tree.to_text(), ShapeMismatch);
}

TEST_CASE("as_tl flattens splitter-free trees") {
    ExtMorphism t = ExtMorphism::parse("f:2 * id:1", R);
    auto flat = t.as_tl();
    REQUIRE(flat.has_value());
    CHECK(*flat == build_f(2, RT).tensor(TLMorphism::identity(1, RT)));
    CHECK_FALSE(ExtMorphism::parse("p+ ; i+", R).as_tl().has_value());
}

TEST_CASE("splitting relations through ext_equal") {
    FunctorContext ctx(R);
    ExtMorphism pp = ExtMorphism::proj_half(+1, R);
    ExtMorphism pm = ExtMorphism::proj_half(-1, R);
    ExtMorphism ip = ExtMorphism::inj_half(+1, R);
    ExtMorphism im = ExtMorphism::inj_half(-1, R);
    ExtMorphism f = ExtMorphism::named_f(R - 1, R);
    ExtMorphism zf = ExtMorphism::tl(TLMorphism::zero(R - 1, R - 1, RT), R);

    CHECK(ext_equal(ExtMorphism::compose(pp, ip), f, ctx));
    CHECK(ext_equal(ExtMorphism::compose(pm, im), f, ctx));
    CHECK(ext_equal(ExtMorphism::compose(pp, im), zf, ctx));
    CHECK(ext_equal(ExtMorphism::compose(pm, ip), zf, ctx));
    CHECK_FALSE(ext_equal(ExtMorphism::compose(pp, ip), zf, ctx));
    CHECK_THROWS_AS(ext_equal(pp, ip, ctx), ShapeMismatch);
}

TEST_CASE("bent morphisms have the right shapes and images") {
    FunctorContext ctx(R);
    for (int m = R; m <= 2 * R - 2; ++m) {
        for (int sign : {+1, -1}) {
            ExtMorphism c = build_c(m, sign, R);
            CHECK(c.bottom() == m);
            CHECK(c.top() == 3 * R - 2 - m);
            ExtMorphism d = build_d(m, sign, R);
            CHECK(d.bottom() == 3 * R - 2 - m);
            CHECK(d.top() == m);
            CHECK_FALSE(c.image(ctx).is_zero());
            CHECK_FALSE(d.image(ctx).is_zero());
        }
    }
    CHECK_THROWS_AS(build_c(R - 1, +1, R), IndexOutOfRange);
    CHECK_THROWS_AS(build_c(2 * R - 1, +1, R), IndexOutOfRange);
    CHECK_THROWS_AS(build_d(R, 0, R), IndexOutOfRange);

    const CycField* F = CycField::get(R);
    SparseMat cm = build_c(R, +1, R).image(ctx);
    SparseMat expect = ctx.hatted_gamma(R, +1) *
                       (root_factorial(0, F) / root_int(R + 1, F) *
                        (R % 2 == 0 ? Cyc(F, 1) : Cyc(F, -1)));
    CHECK(cm == expect);
}

TEST_CASE("domination counts follow the slot recursion") {
    const std::map<int, std::vector<long>> expected = {
        {1, {0, 1, 0, 0, 0}}, {2, {1, 0, 1, 0, 0}}, {3, {0, 1, 0, 1, 0}},
        {4, {1, 0, 3, 0, 1}}, {5, {0, 1, 2, 4, 0}}, {6, {1, 0, 9, 2, 4}},
    };
    for (const auto& [m, want] : expected) {
        CHECK(domination_counts(m, R) == want);
        std::vector<long> histo(2 * R - 1, 0);
        for (const DomEntry& e : dominate(m, R)) {
            CHECK(e.u.bottom() == m);
            CHECK(e.u.top() == e.slot);
            CHECK(e.v.bottom() == e.slot);
            CHECK(e.v.top() == m);
            ++histo[e.slot];
        }
        CHECK(histo == want);
    }
}

TEST_CASE("dominated identities evaluate to the identity matrix") {
    FunctorContext ctx(R);
    ExtMorphism::ImageCache cache;
    for (int m = 1; m <= 4; ++m) {
        SparseMat sum(1 << m, 1 << m);
        for (const DomEntry& e : dominate(m, R)) {
            ExtMorphism mid = e.slot <= R - 1 ? ExtMorphism::named_f(e.slot, R)
                                              : ExtMorphism::named_g(e.slot, R);
            sum = sum + ExtMorphism::compose(e.v, ExtMorphism::compose(mid, e.u))
                            .image(ctx, cache);
        }
        CHECK(sum == SparseMat::identity(ctx.field(), 1 << m));
    }
}

TEST_CASE("low dominated identities already hold diagrammatically") {
    for (int m = 1; m <= R - 1; ++m) {
        TLMorphism sum = TLMorphism::zero(m, m, RT);
        for (const DomEntry& e : dominate(m, R)) {
            auto u = e.u.as_tl(), v = e.v.as_tl();
            REQUIRE(u.has_value());
            REQUIRE(v.has_value());
            sum = sum + v->compose(build_f(e.slot, RT)).compose(*u);
        }
        CHECK(sum == TLMorphism::identity(m, RT));
    }
}

TEST_CASE("fullness verdicts at small sizes") {
    FullnessReport easy = fullness_check(2, 2, R);
    CHECK(easy.full());
    CHECK(easy.hom_dim == 2);
    CHECK(easy.tangle_rank == 2);
    CHECK(easy.words_tried == 0);

    FullnessReport gap = fullness_check(5, 2, R);
    CHECK(gap.full());
    CHECK(gap.hom_dim == 2);
    CHECK(gap.tangle_rank == 0);
    CHECK(gap.extended_rank == 2);
    CHECK(gap.words_tried == 2);

    FullnessReport capped = fullness_check(5, 2, R, 1);
    CHECK_FALSE(capped.full());
    CHECK(capped.budget_exhausted);
    CHECK(capped.words_tried == 1);
}

TEST_CASE("image cache is stable across expression lifetimes") {
    FunctorContext ctx(R);
    ExtMorphism::ImageCache cache;
    SparseMat first = build_c(R, +1, R).image(ctx, cache);
    for (int k = 0; k < 24; ++k) {
        ExtMorphism scratch = ExtMorphism::compose(
            ExtMorphism::proj_half(k % 2 ? +1 : -1, R),
            ExtMorphism::inj_half(k % 2 ? +1 : -1, R));
        (void)scratch.image(ctx, cache);
    }
    CHECK(build_c(R, +1, R).image(ctx, cache) == first);
}

TEST_CASE("extended relation suite r=3") {
    require_all(extended_checks(R));
}

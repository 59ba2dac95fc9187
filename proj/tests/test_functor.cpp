#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "smalltl/errors.hpp"
#include "smalltl/functor.hpp"

using namespace smalltl;

namespace {

void require_all(const std::vector<std::pair<std::string, bool>>& results) {
    for (const auto& [label, ok] : results) {
        CAPTURE(label);
        CHECK(ok);
    }
}

/// Right closure of a matrix image by nested arcs, as slice composites.
SparseMat closed_right(FunctorContext& ctx, const SparseMat& img, int bottom, int top, int k) {
    const SparseMat bend_up = ctx.image_of_tangle(Tangle::cup_nest(k));
    const SparseMat bend_down = ctx.image_of_tangle(Tangle::cap_nest(k));
    const SparseMat id_k = SparseMat::identity(ctx.field(), 1 << k);
    const SparseMat idb = SparseMat::identity(ctx.field(), 1 << (bottom - k));
    const SparseMat idt = SparseMat::identity(ctx.field(), 1 << (top - k));
    return idt.kronecker(bend_down) * img.kronecker(id_k) * idb.kronecker(bend_up);
}

}  // namespace

TEST_CASE("cup and cap images") {
    FunctorContext ctx(3);
    const CycField* F = ctx.field();
    const Cyc q = Cyc::q_power(F, 1);
    CHECK(ctx.cup_matrix().column(0) == (std::map<int, Cyc>{{1, q}, {2, Cyc(F, -1)}}));
    CHECK(ctx.cap_matrix().column(1) == (std::map<int, Cyc>{{0, Cyc(F, -1)}}));
    CHECK(ctx.cap_matrix().column(2) == (std::map<int, Cyc>{{0, q.inverse()}}));
    CHECK(ctx.image_of_tangle(Tangle::cup()) == ctx.cup_matrix());
    CHECK(ctx.image_of_tangle(Tangle::cap()) == ctx.cap_matrix());
    CHECK(ctx.image_of_tangle(Tangle::identity(3)) == SparseMat::identity(F, 8));
    CHECK(ctx.image_of_tangle(Tangle(0, 0, {})) == SparseMat::identity(F, 1));
}

TEST_CASE("tangle images respect nesting") {
    FunctorContext ctx(3);
    // cap_nest(2) evaluated directly against its slice composition.
    const SparseMat nested = ctx.image_of_tangle(Tangle::cap_nest(2));
    const SparseMat id2 = SparseMat::identity(ctx.field(), 2);
    const SparseMat inner = id2.kronecker(ctx.cap_matrix()).kronecker(id2);
    const SparseMat outer = ctx.cap_matrix();
    CHECK(nested == outer * inner);
    CHECK(ctx.image_of_tangle(Tangle::cup_nest(2)) ==
          id2.kronecker(ctx.cup_matrix()).kronecker(id2) * ctx.cup_matrix());
}

TEST_CASE("images are functorial on all small tangles") {
    FunctorContext ctx(3);
    const RingTag tag = ctx.tag();
    for (int a : {0, 1, 2, 3})
        for (int b : {a % 2, a % 2 + 2})
            for (int c : {b % 2, b % 2 + 2})
                for (const Tangle& t1 : enumerate_tangles(a, b))
                    for (const Tangle& t2 : enumerate_tangles(b, c)) {
                        const TLMorphism composed = TLMorphism::from_tangle(t2, tag).compose(
                            TLMorphism::from_tangle(t1, tag));
                        CHECK(ctx.image_of_morphism(composed) ==
                              ctx.image_of_tangle(t2) * ctx.image_of_tangle(t1));
                    }
    for (const Tangle& t1 : enumerate_tangles(1, 3))
        for (const Tangle& t2 : enumerate_tangles(2, 2))
            CHECK(ctx.image_of_tangle(tensor_tangles(t1, t2)) ==
                  ctx.image_of_tangle(t1).kronecker(ctx.image_of_tangle(t2)));
}

TEST_CASE("matrix closure matches the diagram partial trace") {
    FunctorContext ctx(3);
    const RingTag tag = ctx.tag();
    for (const Tangle& t : enumerate_tangles(3, 3))
        for (int k = 1; k <= 3; ++k) {
            const TLMorphism closed = TLMorphism::from_tangle(t, tag).partial_trace_right(k);
            CHECK(ctx.image_of_morphism(closed) ==
                  closed_right(ctx, ctx.image_of_tangle(t), 3, 3, k));
        }
}

TEST_CASE("slice words evaluate like explicit products") {
    FunctorContext ctx(3);
    const CycField* F = ctx.field();
    const SparseMat& f2 = ctx.f_image(2);
    // id x cap x id composed with f_2 x id_2, as a slice word on 4 strands.
    std::vector<SliceTerm> word{{Cyc(F, 1),
                                 {IdSlice{&f2, 0, 2}, IdSlice{&ctx.cap_matrix(), 1, 1}}}};
    const SparseMat id2 = SparseMat::identity(F, 2);
    const SparseMat direct =
        id2.kronecker(ctx.cap_matrix()).kronecker(id2) * f2.kronecker(id2.kronecker(id2));
    CHECK(slice_sum_matrix(4, 2, word, F) == direct);
    std::vector<SliceTerm> rhs{{Cyc(F, 1), {IdSlice{&direct, 0, 0}}}};
    CHECK(slice_sums_equal(1 << 4, word, rhs, F));
    rhs[0].coeff = Cyc(F, 2);
    CHECK_FALSE(slice_sums_equal(1 << 4, word, rhs, F));
}

TEST_CASE("projector and injector halves compose to the idempotents") {
    FunctorContext ctx(3);
    const SparseMat& phi = ctx.f_image(2);
    for (int s1 : {+1, -1})
        for (int s2 : {+1, -1}) {
            const SparseMat prod = ctx.projector_half(s1) * ctx.injector_half(s2);
            if (s1 == s2)
                CHECK(prod == phi);
            else
                CHECK(prod.is_zero());
        }
    CHECK(ctx.injector_half(+1) * ctx.projector_half(+1) +
              ctx.injector_half(-1) * ctx.projector_half(-1) ==
          ctx.f_image(5));
}

TEST_CASE("functor checks") {
    for (int r : {3, 5}) {
        CAPTURE(r);
        require_all(functor_checks(r));
    }
}

TEST_CASE("image argument validation") {
    FunctorContext ctx(3);
    CHECK_THROWS_AS(ctx.f_image(3), IndexOutOfRange);
    CHECK_THROWS_AS(ctx.f_image(4), IndexOutOfRange);
    CHECK_THROWS_AS(ctx.image_of_morphism(TLMorphism::identity(1, RingTag::root(5))),
                    RingMismatch);
    CHECK_THROWS_AS(ctx.image_of_morphism(build_f(4, RingTag::generic())),
                    PoleAtRootOfUnity);
    CHECK(ctx.image_of_morphism(build_f(2, RingTag::generic())) == ctx.f_image(2));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "smalltl/errors.hpp"
#include "smalltl/uq.hpp"

using namespace smalltl;

namespace {

Cyc q3(long e) { return Cyc::q_power(CycField::get(3), e); }

void require_all(const std::vector<std::pair<std::string, bool>>& results) {
    for (const auto& [label, ok] : results) {
        CAPTURE(label);
        CHECK(ok);
    }
}

}  // namespace

TEST_CASE("fundamental actions on one strand") {
    const BasedModule X = simple_module(1, 3);
    const CycField* F = CycField::get(3);
    CHECK(X.labels == std::vector<std::string>{"a0", "a1"});
    CHECK(X.actE.at(0, 1) == Cyc(F, 1));
    CHECK(X.actF.at(1, 0) == Cyc(F, 1));
    CHECK(X.actK.at(0, 0) == q3(1));
    CHECK(X.actK.at(1, 1) == q3(-1));
    CHECK(tensor_E(1, 3).to_dense() == X.actE);
    CHECK(tensor_F(1, 3).to_dense() == X.actF);
    CHECK(tensor_K(1, 3).to_dense() == X.actK);
}

TEST_CASE("coproduct convention on two strands") {
    // F(v0 x v0) = q^{-1} v0 x v1 + v1 x v0, E(v1 x v1) = v0 x q^{-1} v1 + v1 x v0.
    const SparseMat& Fo = tensor_F(2, 3);
    const SparseMat& E = tensor_E(2, 3);
    CHECK(Fo.column(0) == (std::map<int, Cyc>{{1, q3(-1)}, {2, q3(0)}}));
    CHECK(E.column(3) == (std::map<int, Cyc>{{1, q3(-1)}, {2, q3(0)}}));
    CHECK(tensor_K(2, 3).column(1) == (std::map<int, Cyc>{{1, q3(0)}}));
}

TEST_CASE("hopf invariants hold for every module family") {
    for (int r : {3, 5}) {
        for (int m = 0; m <= r - 1; ++m) CHECK(hopf_invariants_hold(simple_module(m, r)));
        for (int m = r; m <= 2 * r - 2; ++m) CHECK(hopf_invariants_hold(projective_module(m, r)));
        CHECK(hopf_invariants_hold(big_module(r)));
        for (int n = 0; n <= 4; ++n) CHECK(hopf_invariants_hold(tensor_power(n, r)));
    }
}

TEST_CASE("tensor_product agrees with the sparse tensor power actions") {
    const BasedModule a = tensor_product(tensor_power(2, 3), tensor_power(1, 3));
    const BasedModule b = tensor_power(3, 3);
    CHECK(a.actE == b.actE);
    CHECK(a.actF == b.actF);
    CHECK(a.actK == b.actK);
    CHECK(a.labels[3] == "01*1");
    CHECK(b.labels[3] == "011");
}

TEST_CASE("direct sum blocks and labels") {
    const BasedModule big = big_module(3);
    CHECK(big.dim() == 6);
    CHECK(big.labels.front() == "a0+");
    CHECK(big.labels.back() == "a2-");
    const BasedModule X = simple_module(2, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(big.actE.at(i, j) == X.actE.at(i, j));
            CHECK(big.actE.at(3 + i, 3 + j) == X.actE.at(i, j));
            CHECK(big.actE.at(i, 3 + j).is_zero());
            CHECK(big.actE.at(3 + i, j).is_zero());
        }
}

TEST_CASE("embedded families restrict to the abstract action matrices") {
    for (int m = 0; m <= 2; ++m) {
        const BasedModule R = restrict_to_span(embed_simple(m, 3));
        const BasedModule M = simple_module(m, 3);
        CHECK(R.actE == M.actE);
        CHECK(R.actF == M.actF);
        CHECK(R.actK == M.actK);
    }
    for (int m = 3; m <= 4; ++m) {
        const BasedModule R = restrict_to_span(embed_projective(m, 3));
        const BasedModule M = projective_module(m, 3);
        CHECK(R.actE == M.actE);
        CHECK(R.actF == M.actF);
        CHECK(R.actK == M.actK);
    }
    const BasedModule W = restrict_to_span(embed_two_sided(3));
    const BasedModule big = big_module(3);
    CHECK(W.actE == big.actE);
    CHECK(W.actF == big.actF);
    CHECK(W.actK == big.actK);
}

TEST_CASE("supplements restrict to the expected smaller modules") {
    CHECK(restrict_to_span(embed_simple_supplement(2, 3)).actK ==
          simple_module(0, 3).actK);
    const BasedModule S = restrict_to_span(embed_two_sided_supplement(3));
    const BasedModule big = big_module(3);
    CHECK(S.actE == big.actE);
    CHECK(S.actF == big.actF);
    CHECK(S.actK == big.actK);
    const BasedModule P = restrict_to_span(embed_projective_supplement(5, 3));
    const BasedModule M = projective_module(3, 3);
    CHECK(P.actE == M.actE);
    CHECK(P.actF == M.actF);
    CHECK(P.actK == M.actK);
}

TEST_CASE("hom space dimensions track the decomposition of tensor powers") {
    const BasedModule t2 = tensor_power(2, 3);
    const BasedModule t3 = tensor_power(3, 3);
    CHECK(hom_space(t2, t2).size() == 2);
    CHECK(hom_space(t3, t3).size() == 5);
    CHECK(hom_space(t3, tensor_power(1, 3)).size() == 2);
    CHECK(hom_space(t2, simple_module(0, 3)).size() == 1);
    CHECK(hom_space(simple_module(1, 3), simple_module(2, 3)).empty());
    for (const CycMatrix& f : hom_space(t3, t3))
        CHECK(is_intertwiner(t3, t3, f));
}

TEST_CASE("named morphisms satisfy their relations") {
    const CycMatrix eps = morphism_epsilon(3, 3);
    CHECK(eps == morphism_iota(3, 3) * morphism_pi(3, 3));
    CHECK(eps == morphism_gamma(4, 3, +1) * morphism_gamma(3, 3, -1));
    CHECK((eps * eps).is_zero());
    CHECK(is_intertwiner(projective_module(3, 3), projective_module(3, 3), eps));
    const CycMatrix id6 = CycMatrix::identity(CycField::get(3), 6);
    CHECK(morphism_iota_pm(3, +1) * morphism_pi_pm(3, +1) +
              morphism_iota_pm(3, -1) * morphism_pi_pm(3, -1) ==
          id6);
}

TEST_CASE("projector oracles fix their image and kill the complement") {
    const SparseMat id2 = phi_oracle(1, 3, KernelRoute::ByE);
    CHECK(id2.to_dense() == CycMatrix::identity(CycField::get(3), 2));
    const SparseMat phi2 = phi_oracle(2, 3, KernelRoute::ByF);
    CHECK(phi2 * phi2 == phi2);
    CHECK(rank(phi2.to_dense()) == 3);
    const SparseMat pp = phi_pm_oracle(3, +1);
    const SparseMat pm = phi_pm_oracle(3, -1);
    CHECK((pp * pm).is_zero());
    CHECK(rank((pp + pm).to_dense()) == 6);
}

TEST_CASE("module structure checks") {
    for (int r : {3, 5}) {
        CAPTURE(r);
        require_all(module_structure_checks(r));
    }
}

TEST_CASE("basis identity checks") {
    for (int r : {3, 5}) {
        CAPTURE(r);
        require_all(appendix_checks(r));
    }
}

TEST_CASE("module map json round trip") {
    const CycField* F = CycField::get(3);
    CycMatrix f(2, 3);
    Cyc v(F, mpq_class(-7, 6));
    v.set_coeff(1, mpq_class(2, 5));
    f.set(0, 1, v);
    f.set(1, 2, Cyc(F, 4));
    const std::string text = module_map_to_json(f);
    CHECK(module_map_from_json(text, 3) == f);
    CHECK(text.find("\"source_dim\":3") != std::string::npos);

    CHECK_THROWS_AS(module_map_from_json("not json", 3), ParseError);
    CHECK_THROWS_AS(module_map_from_json("{\"source_dim\":1}", 3), ParseError);
    CHECK_THROWS_AS(module_map_from_json(
                        "{\"source_dim\":1,\"target_dim\":1,\"entries\":[[0,0,[\"1\"]]]}", 3),
                    ParseError);
    CHECK_THROWS_AS(module_map_from_json(
                        "{\"source_dim\":1,\"target_dim\":1,\"entries\":[[0,2,[\"1\",\"0\"]]]}", 3),
                    ParseError);
    CHECK_THROWS_AS(
        module_map_from_json("{\"source_dim\":2,\"target_dim\":2,\"entries\":"
                             "[[1,1,[\"1\",\"0\"]],[0,0,[\"1\",\"0\"]]]}",
                             3),
        ParseError);
    CHECK_THROWS_AS(module_map_from_json(
                        "{\"source_dim\":1,\"target_dim\":1,\"entries\":[[0,0,[\"x\",\"0\"]]]}", 3),
                    ParseError);
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(simple_module(3, 3), IndexOutOfRange);
    CHECK_THROWS_AS(simple_module(-1, 3), IndexOutOfRange);
    CHECK_THROWS_AS(projective_module(2, 3), IndexOutOfRange);
    CHECK_THROWS_AS(projective_module(5, 3), IndexOutOfRange);
    CHECK_THROWS_AS(simple_module(1, 4), IndexOutOfRange);
    CHECK_THROWS_AS(tensor_power(-1, 3), IndexOutOfRange);
    CHECK_THROWS_AS(embed_projective_supplement(4, 3), IndexOutOfRange);
    CHECK_THROWS_AS(morphism_gamma(3, 3, 0), IndexOutOfRange);
    CHECK_THROWS_AS(direct_sum(simple_module(1, 3), simple_module(1, 5)), RingMismatch);

    EmbeddedBasis bad;
    bad.n = 1;
    bad.r = 3;
    bad.labels = {"v"};
    bad.vectors = {CycVec{Cyc(CycField::get(3), 1), Cyc(CycField::get(3))}};
    CHECK_THROWS_AS(restrict_to_span(bad), SolverFailure);
    CHECK_THROWS_AS(bad.vec("w"), IndexOutOfRange);
}

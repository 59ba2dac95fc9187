#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "smalltl/scalars.hpp"

using namespace smalltl;

namespace {
const RingTag G = RingTag::generic();
}

TEST_CASE("Laurent polynomial basics") {
    LaurentPoly z;
    CHECK(z.is_zero());
    CHECK(z == LaurentPoly::constant(0));
    CHECK_THROWS_AS(z.low_exp(), Error);

    LaurentPoly p = LaurentPoly::monomial(3, 2) + LaurentPoly::monomial(-1, -1);
    CHECK(p.low_exp() == -1);
    CHECK(p.high_exp() == 2);
    CHECK(p.coeff(2) == 3);
    CHECK(p.coeff(-1) == -1);
    CHECK(p.coeff(0) == 0);
    CHECK(p.term_count() == 2);
    CHECK(p.to_string() == "3*A^2 - A^-1");

    CHECK((p - p).is_zero());
    CHECK(p.shifted(5).low_exp() == 4);
    CHECK(p * LaurentPoly::constant(1) == p);

    LaurentPoly q = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1);
    CHECK((q * q).to_string() == "A^2 + 2 + A^-2");
}

TEST_CASE("Exact division and gcd") {
    LaurentPoly a = LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, -2);
    LaurentPoly b = LaurentPoly::monomial(1, 1) - LaurentPoly::monomial(1, -1);
    LaurentPoly c = a.divide_exact(b);
    CHECK(c == LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1));
    CHECK_THROWS_AS(b.divide_exact(a), Error);
    CHECK_THROWS_AS(a.divide_exact(LaurentPoly()), Error);

    // gcd works on primitive parts: A^4 - 1 and A^2 - 1.
    CHECK(LaurentPoly::gcd(a, b) == LaurentPoly::monomial(1, 2) - LaurentPoly::constant(1));
}

TEST_CASE("gcd is the primitive common factor") {
    LaurentPoly x = LaurentPoly::monomial(1, 1);
    LaurentPoly f = (x + LaurentPoly::constant(1)) * (x + LaurentPoly::constant(2));
    LaurentPoly g = (x + LaurentPoly::constant(1)) * (x + LaurentPoly::constant(3));
    CHECK(LaurentPoly::gcd(f, g) == x + LaurentPoly::constant(1));
    CHECK(LaurentPoly::gcd(f * LaurentPoly::constant(6), g * LaurentPoly::constant(10)) ==
          x + LaurentPoly::constant(1));
    CHECK(LaurentPoly::gcd(f.shifted(-7), g.shifted(4)) == x + LaurentPoly::constant(1));
    CHECK(LaurentPoly::gcd(f, LaurentPoly()) == (x + LaurentPoly::constant(1)) * (x + LaurentPoly::constant(2)));
}

TEST_CASE("Cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1).to_string() == "A - 1");
    CHECK(cyclotomic_polynomial(3).to_string() == "A^2 + A + 1");
    CHECK(cyclotomic_polynomial(5).to_string() == "A^4 + A^3 + A^2 + A + 1");
    CHECK(cyclotomic_polynomial(9).to_string() == "A^6 + A^3 + 1");
    CHECK(cyclotomic_polynomial(15).to_string() == "A^8 - A^7 + A^5 - A^4 + A^3 - A + 1");

    LaurentPoly prod = LaurentPoly::constant(1);
    for (int d : {1, 3, 5, 15}) prod = prod * cyclotomic_polynomial(d);
    CHECK(prod == LaurentPoly::monomial(1, 15) - LaurentPoly::constant(1));
}

TEST_CASE("GenericScalar canonical form") {
    GenericScalar two_int = generic_int(2);
    CHECK(two_int.to_string() == "A^2 + A^-2");
    CHECK(GenericScalar::fraction(generic_brace(2).num(), generic_brace(1).num()) == two_int);

    GenericScalar s = GenericScalar::fraction(
        LaurentPoly::monomial(6, 3), LaurentPoly::monomial(4, -2));
    CHECK(s.num() == LaurentPoly::monomial(3, 5));
    CHECK(s.den() == LaurentPoly::constant(2));

    GenericScalar t = GenericScalar::fraction(
        LaurentPoly::monomial(1, 0) - LaurentPoly::monomial(1, 4),
        LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, 0));
    CHECK(t.num() == -(LaurentPoly::monomial(1, 2) + LaurentPoly::constant(1)));
    CHECK(t.den() == LaurentPoly::constant(1));

    CHECK_THROWS_AS(GenericScalar::fraction(LaurentPoly::constant(1), LaurentPoly()), Error);
    CHECK((two_int - two_int).is_zero());
    CHECK((two_int / two_int).is_one());
    CHECK((two_int * two_int.inverse()).is_one());
    CHECK_THROWS_AS(GenericScalar().inverse(), Error);

    GenericScalar neg = GenericScalar::fraction(LaurentPoly::constant(1), LaurentPoly::constant(-2));
    CHECK(neg.den().leading() > 0);
    CHECK(neg == GenericScalar::fraction(LaurentPoly::constant(-1), LaurentPoly::constant(2)));
    CHECK(neg.hash() == GenericScalar::fraction(LaurentPoly::constant(-1), LaurentPoly::constant(2)).hash());
}

TEST_CASE("Generic quantum integers") {
    CHECK(generic_int(0).is_zero());
    CHECK(generic_int(1).is_one());
    CHECK(generic_int(-3) == -generic_int(3));
    CHECK(generic_int(3).to_string() == "A^4 + 1 + A^-4");
    CHECK(generic_brace(1).to_string() == "A^2 - A^-2");
    CHECK(generic_brace_prime(1).to_string() == "A^2 + A^-2");

    for (long k = 1; k <= 6; ++k) {
        CHECK(generic_brace(k) == generic_int(k) * generic_brace(1));
        CHECK(generic_int(2 * k) == generic_int(k) * generic_brace_prime(k));
    }
    for (long k = 2; k <= 5; ++k)
        CHECK(generic_int(k) * generic_int(k) - generic_int(k + 1) * generic_int(k - 1) ==
              GenericScalar(1));

    CHECK(generic_factorial(0).is_one());
    CHECK(generic_factorial(4) ==
          generic_int(2) * generic_int(3) * generic_int(4));
    CHECK_THROWS_AS(generic_factorial(-1), Error);
}

TEST_CASE("Cyclotomic field arithmetic") {
    const CycField* F3 = CycField::get(3);
    CHECK(F3->degree() == 2);
    CHECK(CycField::get(3) == F3);
    CHECK_THROWS_AS(CycField::get(2), Error);
    CHECK_THROWS_AS(CycField::get(1), Error);

    Cyc q = Cyc::q_power(F3, 1);
    CHECK(Cyc::q_power(F3, 3).is_one());
    CHECK(Cyc::q_power(F3, -1) * q == Cyc(F3, 1));
    CHECK(q * q + q + Cyc(F3, 1) == Cyc(F3));
    CHECK((Cyc(F3, 1) + q) * (-q) == Cyc(F3, 1));
    CHECK((Cyc(F3, 1) + q).inverse() == -q);
    CHECK_THROWS_AS(Cyc(F3).inverse(), Error);
    CHECK_THROWS_AS(Cyc(F3, 1) / Cyc(F3), Error);

    const CycField* F5 = CycField::get(5);
    CHECK(F5->degree() == 4);
    Cyc s(F5);
    for (long e = 0; e < 5; ++e) s += Cyc::q_power(F5, e);
    CHECK(s.is_zero());
    CHECK_THROWS_AS(Cyc(F3, 1) + Cyc(F5, 1), RingMismatch);

    Cyc dflt;
    CHECK(dflt.is_zero());
    CHECK(dflt + Cyc(F5, 7) == Cyc(F5, 7));
    CHECK((dflt * Cyc(F5, 7)).is_zero());

    Cyc r = Cyc(F5, mpq_class(3, 4));
    CHECK(r.is_rational());
    CHECK(r.rational() == mpq_class(3, 4));
    CHECK_FALSE(Cyc::q_power(F5, 1).is_rational());
    CHECK_THROWS_AS(Cyc::q_power(F5, 1).rational(), Error);

    for (long e = 0; e < 15; ++e) {
        Cyc a = Cyc::q_power(F5, e);
        CHECK(a * a.inverse() == Cyc(F5, 1));
    }
}

TEST_CASE("Root quantum integers") {
    const CycField* F3 = CycField::get(3);
    CHECK(root_int(2, F3) == Cyc(F3, -1));
    CHECK(root_int(3, F3).is_zero());
    CHECK(root_int(4, F3).is_one());

    for (int r : {3, 5, 7}) {
        const CycField* F = CycField::get(r);
        CHECK(root_int(r, F).is_zero());
        CHECK(root_int(r + 1, F) == Cyc(F, 1));
        CHECK(root_int(r - 1, F) == Cyc(F, -1));
        CHECK(root_brace_prime(r, F) == Cyc(F, 2));
        CHECK(root_int(r - 2, F) == -root_int(2, F));
        for (long k = 0; k <= 2 * r; ++k) {
            CHECK(root_int(k + r, F) == root_int(k, F));
            CHECK(root_int(r - k, F) == -root_int(k, F));
        }
        CHECK(root_factorial(r - 1, F) != Cyc(F));
        CHECK(root_factorial(r, F).is_zero());
    }
}

TEST_CASE("Specialization") {
    for (int r : {3, 5, 7}) {
        const CycField* F = CycField::get(r);
        CHECK(specialize(generic_brace_prime(r), r) == Cyc(F, 2));
        CHECK(specialize(generic_int(r), r).is_zero());
        CHECK(specialize(generic_int(r + 1), r) == Cyc(F, 1));
        for (long k = 1; k < 2 * r; ++k)
            CHECK(specialize(generic_int(k), r) == root_int(k, F));
        CHECK_THROWS_AS(specialize(generic_int(r).inverse(), r), PoleAtRootOfUnity);

        GenericScalar a = generic_int(2) + GenericScalar(5);
        GenericScalar b = GenericScalar::fraction(generic_brace(2).num(), generic_brace_prime(1).num());
        CHECK(specialize(a * b, r) == specialize(a, r) * specialize(b, r));
        CHECK(specialize(a + b, r) == specialize(a, r) + specialize(b, r));
    }
    CHECK(specialize(GenericScalar(LaurentPoly::monomial(1, 2)), 3) == Cyc::q_power(CycField::get(3), 1));
    CHECK(specialize(GenericScalar(LaurentPoly::monomial(1, 1)), 3) == Cyc::q_power(CycField::get(3), 2));
}

TEST_CASE("Tagged scalars") {
    RingTag R3 = RingTag::root(3);
    CHECK_THROWS_AS(RingTag::root(4), Error);
    CHECK_THROWS_AS(RingTag::root(-3), Error);
    CHECK(R3.to_string() == "root(3)");
    CHECK(G.to_string() == "generic");

    Scalar a = quantum_int(2, G);
    Scalar b = quantum_int(2, R3);
    CHECK(a.tag() == G);
    CHECK(b.tag() == R3);
    CHECK(b == Scalar::integer(-1, R3));
    CHECK_THROWS_AS(a + b, RingMismatch);
    CHECK_THROWS_AS(a.root(), RingMismatch);
    CHECK_THROWS_AS(b.generic(), RingMismatch);

    for (RingTag tag : {G, R3}) {
        Scalar x = quantum_int(2, tag);
        CHECK((x - x).is_zero());
        CHECK((x / x).is_one());
        CHECK(x * x.inverse() == Scalar::one(tag));
        CHECK(-(-x) == x);
        CHECK(Scalar::zero(tag).is_zero());
        CHECK(quantum_brace(2, tag) == quantum_int(2, tag) * quantum_brace(1, tag));
        CHECK(quantum_brace_prime(1, tag) + Scalar::zero(tag) == quantum_brace_prime(1, tag));
        CHECK(quantum_factorial(3, tag) == quantum_int(2, tag) * quantum_int(3, tag));
    }

    CHECK(quantum_int(3, R3).is_zero());
    CHECK(quantum_int(2, R3).to_string() == "-1");
    CHECK(quantum_int(2, G).to_string() == "A^2 + A^-2");
}

TEST_CASE("Ordering is total and consistent") {
    std::vector<Scalar> vals = {Scalar::zero(G), Scalar::one(G), quantum_int(2, G),
                                quantum_int(3, G), -quantum_int(2, G)};
    for (const auto& x : vals)
        for (const auto& y : vals) {
            int lt = x < y, gt = x > y, eq = x == y;
            CHECK(lt + gt + eq == 1);
        }
}

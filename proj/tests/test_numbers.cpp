#include "doctest.h"
#include "support.hpp"

using namespace realdescent;
using testsupport::make_rng;
using testsupport::random_element;
using testsupport::random_nonzero_element;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kQi = FieldSpec::gaussian();
const FieldSpec kQs2 = FieldSpec::quadratic(-2);

FieldElement gauss(long a, long b) {
    return FieldElement(make_rational(a), make_rational(b), kQi);
}

} // namespace

TEST_SUITE("numbers") {

TEST_CASE("field specs validate the radicand") {
    CHECK(kQ.is_rationals());
    CHECK(kQi.is_quadratic());
    CHECK(kQi.radicand() == -1);
    CHECK(kQs2.radicand() == -2);
    CHECK(kQi == FieldSpec::quadratic(-1));
    CHECK(kQ.to_string() == "Q");
    CHECK(kQi.to_string() == "Q(i)");
    CHECK(kQs2.to_string() == "Q(sqrt -2)");
    CHECK(kQi.symbol() == "i");
    CHECK(kQs2.symbol() == "s");

    CHECK_THROWS_AS(FieldSpec::quadratic(-4), Error);   // not squarefree
    CHECK_THROWS_AS(FieldSpec::quadratic(-12), Error);  // 4 | 12
    CHECK_THROWS_AS(FieldSpec::quadratic(2), Error);    // not negative
    CHECK_THROWS_AS(FieldSpec::quadratic(0), Error);
}

TEST_CASE("rational normalization is canonical") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(-3, -6) == make_rational(1, 2));
    Rational q = make_rational(-3, 6);
    CHECK(q.get_den() == 2);
    CHECK(q.get_num() == -1);
    CHECK(is_integer(make_rational(8, 4)));
    CHECK(!is_integer(make_rational(1, 3)));
    CHECK(to_string(make_rational(7)) == "7");
    CHECK(to_string(make_rational(-3, 4)) == "-3/4");
}

TEST_CASE("arithmetic matches the defining relation sqrt(m)^2 = m") {
    CHECK(gauss(1, 1) * gauss(1, -1) == gauss(2, 0));
    CHECK(gauss(0, 1) * gauss(0, 1) == gauss(-1, 0));

    FieldElement a(make_rational(1), make_rational(2), kQs2);
    FieldElement b(make_rational(3), make_rational(-2), kQs2);
    CHECK(a + b == FieldElement(make_rational(4), kQs2));

    // (1 + 2s)(3 - 2s) = 3 - 2s + 6s - 4*(-2) = 11 + 4s over Q(sqrt -2)
    CHECK(a * b ==
          FieldElement(make_rational(11), make_rational(4), kQs2));

    CHECK_THROWS_AS(gauss(1, 0) + FieldElement(make_rational(1), kQs2),
                    FieldMismatchError);
    CHECK_THROWS_AS(gauss(1, 0) + FieldElement(make_rational(1), kQ),
                    FieldMismatchError);
}

TEST_CASE("inverse uses the field norm") {
    FieldElement two(make_rational(2), kQ);
    CHECK(two.inverse() == FieldElement(make_rational(1, 2), kQ));
    CHECK(gauss(0, 1).inverse() == gauss(0, -1));
    CHECK(gauss(1, 1).inverse() ==
          FieldElement(make_rational(1, 2), make_rational(-1, 2), kQi));
    CHECK_THROWS_AS(FieldElement::zero(kQi).inverse(), DivisionByZeroError);
    CHECK_THROWS_AS(gauss(1, 1) / FieldElement::zero(kQi),
                    DivisionByZeroError);

    auto rng = make_rng(11);
    for (int round = 0; round < 50; ++round) {
        for (const auto& spec : {kQ, kQi, kQs2}) {
            FieldElement x = random_nonzero_element(rng, spec);
            CHECK(x * x.inverse() == FieldElement::one(spec));
        }
    }
}

TEST_CASE("norm is multiplicative and positive") {
    CHECK(gauss(1, 1).norm() == 2);
    CHECK(gauss(3, 0).norm() == 9);
    auto rng = make_rng(12);
    for (int round = 0; round < 50; ++round) {
        FieldElement x = random_element(rng, kQs2);
        FieldElement y = random_element(rng, kQs2);
        CHECK((x * y).norm() == x.norm() * y.norm());
        if (!x.is_zero())
            CHECK(sign(x.norm()) > 0);
    }
}

TEST_CASE("conjugation is the order-two field automorphism") {
    CHECK(gauss(2, 3).conj() == gauss(2, -3));
    CHECK(FieldElement(make_rational(5), kQ).conj() ==
          FieldElement(make_rational(5), kQ));

    FieldElement x(make_rational(1), make_rational(1), kQs2);
    FieldElement y(make_rational(2), make_rational(-1), kQs2);
    CHECK((x * y).conj() == x.conj() * y.conj());

    auto rng = make_rng(13);
    for (int round = 0; round < 50; ++round) {
        for (const auto& spec : {kQ, kQi, kQs2}) {
            FieldElement a = random_element(rng, spec);
            FieldElement b = random_element(rng, spec);
            CHECK(a.conj().conj() == a);
            CHECK((a + b).conj() == a.conj() + b.conj());
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK((a + a.conj()).is_fixed());
            CHECK((a * a.conj()).is_fixed());
        }
    }
}

TEST_CASE("is_fixed detects the real subfield") {
    CHECK(FieldElement(make_rational(7, 3), kQ).is_fixed());
    CHECK(FieldElement(make_rational(7, 3), kQi).is_fixed());
    CHECK(!gauss(0, 1).is_fixed());
}

TEST_CASE("exact square roots") {
    FieldElement four(make_rational(4), kQ);
    CHECK(four.sqrt().value() == FieldElement(make_rational(2), kQ));
    CHECK(!FieldElement(make_rational(2), kQ).sqrt().has_value());
    CHECK(!FieldElement(make_rational(-1), kQ).sqrt().has_value());

    // Over Q(i): sqrt(-1) = i and sqrt(2i) = 1 + i.
    CHECK(FieldElement(make_rational(-1), kQi).sqrt().value() ==
          gauss(0, 1));
    CHECK(gauss(0, 2).sqrt().value() == gauss(1, 1));
    CHECK(!gauss(1, 2).sqrt().has_value()); // norm 5 is not a square

    // sqrt(-2) over Q(sqrt -2) is the adjoined root itself.
    FieldElement minus_two(make_rational(-2), kQs2);
    CHECK(minus_two.sqrt().value() == FieldElement::root(kQs2));

    auto rng = make_rng(14);
    for (int round = 0; round < 50; ++round) {
        for (const auto& spec : {kQ, kQi, kQs2}) {
            FieldElement x = random_element(rng, spec);
            auto r = (x * x).sqrt();
            REQUIRE(r.has_value());
            CHECK((*r == x || *r == -x));
        }
    }
}

TEST_CASE("lifting embeds Q into quadratic fields") {
    FieldElement q(make_rational(3, 2), kQ);
    FieldElement lifted = q.lifted_to(kQi);
    CHECK(lifted.spec() == kQi);
    CHECK(lifted.a() == make_rational(3, 2));
    CHECK(lifted.b() == 0);
    CHECK(reconcile(kQ, kQs2) == kQs2);
    CHECK(reconcile(kQi, kQi) == kQi);
    CHECK_THROWS_AS(reconcile(kQi, kQs2), FieldMismatchError);
    CHECK_THROWS_AS(q.lifted_to(kQ).lifted_to(kQi).lifted_to(kQs2),
                    FieldMismatchError);
}

TEST_CASE("bit size tracks coefficient growth") {
    CHECK(bit_size(make_rational(0)) >= 1);
    CHECK(bit_size(make_rational(1)) >= 1);
    Rational big("123456789123456789");
    CHECK(bit_size(big) > 50);
    CHECK(bit_size(gauss(1, 1)) >= 2);
}

} // TEST_SUITE

#include "doctest.h"
#include "support.hpp"

using namespace realdescent;
using testsupport::make_rng;
using testsupport::random_poly;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kQi = FieldSpec::gaussian();
const FieldSpec kQs2 = FieldSpec::quadratic(-2);

const VariableContext kXy({"x1", "x2"});

Polynomial parse2(const std::string& text, FieldSpec field = kQi) {
    return parse_poly(text, kXy, field);
}

} // namespace

TEST_SUITE("poly") {

TEST_CASE("monomial arithmetic") {
    Monomial a({2, 1});
    Monomial b({1, 3});
    CHECK(a.degree() == 3);
    CHECK(a.times(b) == Monomial({3, 4}));
    CHECK(Monomial::lcm(a, b) == Monomial({2, 3}));
    CHECK(!a.divides(b));
    CHECK(a.divides(a.times(b)));
    CHECK(a.quotient_of(a.times(b)) == b);
    CHECK(Monomial::coprime(Monomial({2, 0}), Monomial({0, 3})));
    CHECK(!Monomial::coprime(a, b));
}

TEST_CASE("monomial orders: lex vs grevlex vs block") {
    // x1^2*x3 vs x1*x2^2 (three variables, degree 3 each).
    Monomial xxz({2, 0, 1});
    Monomial xyy({1, 2, 0});
    MonomialOrder lex = MonomialOrder::lex();
    MonomialOrder grevlex = MonomialOrder::grevlex();
    CHECK(lex.greater(xxz, xyy));
    CHECK(grevlex.greater(xyy, xxz)); // smaller exponent at the last slot

    // Degree dominates in grevlex.
    CHECK(grevlex.greater(Monomial({0, 0, 4}), Monomial({2, 1, 0})));
    CHECK(lex.greater(Monomial({2, 1, 0}), Monomial({0, 0, 4})));

    // Block order: the eliminated block dominates regardless of degree.
    MonomialOrder block = MonomialOrder::block_elimination(1);
    CHECK(block.greater(Monomial({1, 0, 0}), Monomial({0, 5, 5})));
    CHECK(block.greater(Monomial({0, 0, 4}), Monomial({0, 2, 1})));

    CHECK(lex.compare(xxz, xxz) == 0);
    CHECK_THROWS_AS(MonomialOrder::block_elimination(0), Error);
}

TEST_CASE("ring arithmetic on named contexts") {
    Polynomial p = parse2("x1 + 1", kQ);
    Polynomial q = parse2("x1 - 1", kQ);
    CHECK(p * q == parse2("x1^2 - 1", kQ));
    CHECK(p + Polynomial::zero(kXy, kQ) == p);
    CHECK((p - p).is_zero());

    // (x1 + i*x2)(x1 - i*x2) = x1^2 + x2^2 over Q(i).
    CHECK(parse2("x1 + i*x2") * parse2("x1 - i*x2") ==
          parse2("x1^2 + x2^2"));

    VariableContext other({"y"});
    CHECK_THROWS_AS(p + Polynomial::zero(other, kQ),
                    ContextMismatchError);
}

TEST_CASE("from_terms merges duplicates and drops zeros") {
    std::vector<Term> terms;
    terms.push_back(Term{Monomial({1, 0}), FieldElement::one(kQ)});
    terms.push_back(Term{Monomial({1, 0}), FieldElement::one(kQ)});
    terms.push_back(Term{Monomial({0, 1}), FieldElement::zero(kQ)});
    Polynomial p = Polynomial::from_terms(kXy, kQ, std::move(terms));
    CHECK(p == parse2("2*x1", kQ));
    CHECK(p.num_terms() == 1);
}

TEST_CASE("conjugation acts on coefficients only") {
    CHECK(parse2("i*x1").conjugated() == parse2("-i*x1"));
    CHECK(parse2("x1^2 + 1").conjugated() == parse2("x1^2 + 1"));
    CHECK(parse2("x1^2 + 1").is_conjugation_fixed());
    CHECK(!parse2("i*x1").is_conjugation_fixed());

    auto rng = make_rng(21);
    for (int round = 0; round < 40; ++round) {
        Polynomial p = random_poly(rng, kXy, kQi);
        Polynomial q = random_poly(rng, kXy, kQi);
        CHECK((p + q).conjugated() == p.conjugated() + q.conjugated());
        CHECK((p * q).conjugated() == p.conjugated() * q.conjugated());
        CHECK(p.conjugated().conjugated() == p);
    }
}

TEST_CASE("trace lands in the fixed field") {
    CHECK(parse2("i*x1").trace().is_zero());
    CHECK(parse2("x1^2").trace() == parse2("2*x1^2"));
    CHECK(parse2("(1 + i)*x1^2").trace() == parse2("2*x1^2"));

    auto rng = make_rng(22);
    for (int round = 0; round < 40; ++round) {
        Polynomial p = random_poly(rng, kXy, kQs2);
        Polynomial tr = p.trace();
        CHECK(tr.conjugated() == tr);
        CHECK(tr.is_conjugation_fixed());
    }
}

TEST_CASE("trace pair and the reconstruction identity") {
    auto [t0, t1] = parse2("i*x1").trace_pair();
    CHECK(t0.is_zero());
    CHECK(t1 == parse2("-2*x1"));

    auto [u0, u1] = parse2("x1").trace_pair();
    CHECK(u0 == parse2("2*x1"));
    CHECK(u1.is_zero());

    CHECK_THROWS_AS(parse2("x1", kQ).trace_pair(), Error);

    // p = (1/2) tr(p) + (1/(2m)) sqrt(m) tr(sqrt(m) p), exercised on a
    // hand-picked polynomial and on random samples over two fields.
    auto reconstruct = [](const Polynomial& p) {
        const FieldSpec& spec = p.field();
        long m = spec.radicand();
        auto [tr, tr_root] = p.trace_pair();
        Polynomial half = tr.scaled(FieldElement(make_rational(1, 2), spec));
        Polynomial rest = tr_root.scaled(
            FieldElement(Rational(0), make_rational(1, 2 * m), spec));
        return half + rest;
    };
    Polynomial fixture = parse2("(1 + i)*x1^2 + 3*x2");
    CHECK(reconstruct(fixture) == fixture);

    auto rng = make_rng(23);
    for (int round = 0; round < 60; ++round) {
        for (const auto& spec : {kQi, kQs2}) {
            Polynomial p = random_poly(rng, kXy, spec);
            CHECK(reconstruct(p) == p);
        }
    }
}

TEST_CASE("composition substitutes map components") {
    VariableContext xz({"x", "z"});
    VariableContext x({"x"});
    // f: x -> (x, i*x) into the (x, z) plane.
    PolyMap f(x, xz,
              {parse_poly("x", x, kQi), parse_poly("i*x", x, kQi)});
    Polynomial graph_eq = parse_poly("z - i*x", xz, kQi);
    CHECK(compose(graph_eq, f).is_zero());

    PolyMap id = PolyMap::identity(kXy, kQi);
    Polynomial p = parse2("x1^2 - i*x2 + 3");
    CHECK(compose(p, id) == p);

    PolyMap swap(kXy, kXy, {parse2("x2"), parse2("x1")});
    CHECK(compose(parse2("x1*x2"), swap) == parse2("x1*x2"));
    CHECK(compose(parse2("x1 - x2"), swap) == parse2("x2 - x1"));

    CHECK_THROWS_AS(compose(parse_poly("x", x, kQi), f),
                    ContextMismatchError);
}

TEST_CASE("conjugate map and the equivariance diagram") {
    VariableContext x4({"x1", "x2", "x3", "x4"});
    auto mk = [&](const std::string& s) { return parse_poly(s, x4, kQi); };
    PolyMap humbert_f(x4, x4,
                      {mk("i*x1"), mk("i*x3"), mk("i*x2"), mk("i*x4")});
    PolyMap conj_f = humbert_f.conjugated();
    CHECK(conj_f.component(0) == mk("-i*x1"));
    CHECK(conj_f.component(1) == mk("-i*x3"));
    CHECK(conj_f.conjugated() == humbert_f);

    PolyMap rational(kXy, kXy, {parse2("x2", kQ), parse2("x1", kQ)});
    CHECK(rational.conjugated() == rational);

    // (p o f)^sigma = p^sigma o f^sigma on random samples.
    auto rng = make_rng(24);
    for (int round = 0; round < 30; ++round) {
        Polynomial p = random_poly(rng, kXy, kQi, 2, 4);
        PolyMap f(kXy, kXy,
                  {random_poly(rng, kXy, kQi, 2, 3),
                   random_poly(rng, kXy, kQi, 2, 3)});
        CHECK(compose(p, f).conjugated() ==
              compose(p.conjugated(), f.conjugated()));
    }
}

TEST_CASE("map-map composition is associative with evaluation") {
    auto rng = make_rng(25);
    for (int round = 0; round < 20; ++round) {
        PolyMap f(kXy, kXy,
                  {random_poly(rng, kXy, kQi, 2, 3),
                   random_poly(rng, kXy, kQi, 2, 3)});
        PolyMap g(kXy, kXy,
                  {random_poly(rng, kXy, kQi, 2, 3),
                   random_poly(rng, kXy, kQi, 2, 3)});
        Polynomial p = random_poly(rng, kXy, kQi, 2, 3);
        CHECK(compose(p, compose(g, f)) == compose(compose(p, g), f));

        std::vector<FieldElement> point{
            testsupport::random_element(rng, kQi),
            testsupport::random_element(rng, kQi)};
        CHECK(compose(g, f).evaluate(point) == g.evaluate(f.evaluate(point)));
    }
}

TEST_CASE("canonical printing") {
    CHECK(Polynomial::zero(kXy, kQ).to_string() == "0");
    CHECK(parse2("x1^2 - 1", kQ).to_string() == "x1^2 - 1");
    CHECK(parse2("x1^2 + 2*i*x1*x2 - 1/2").to_string() ==
          "x1^2 + 2*i*x1*x2 - 1/2");
    CHECK(parse2("-i*x1").to_string() == "-i*x1");
    CHECK(parse2("(1 + i)*x1").to_string() == "(1 + i)*x1");
    CHECK(parse2("x2 + i*x1").to_string() == "i*x1 + x2");
    CHECK(parse2("3/4").to_string() == "3/4");

    // Descending grevlex term order.
    CHECK(parse2("1 + x1 + x1^2", kQ).to_string() == "x1^2 + x1 + 1");
    CHECK(parse2("x2^2 + x1*x2 + x1^2", kQ).to_string() ==
          "x1^2 + x1*x2 + x2^2");
}

TEST_CASE("print/parse round trip on random polynomials") {
    auto rng = make_rng(26);
    for (int round = 0; round < 60; ++round) {
        for (const auto& spec : {kQ, kQi, kQs2}) {
            Polynomial p = random_poly(rng, kXy, spec, 4, 6);
            CHECK(parse_poly(p.to_string(), kXy, spec) == p);
        }
    }
}

TEST_CASE("content normalization and monic scaling") {
    Polynomial p = parse2("2*x1 + 2*x2", kQ);
    CHECK(p.content_normalized() == parse2("x1 + x2", kQ));
    CHECK(parse2("-3*x1 - 6", kQ).content_normalized() ==
          parse2("x1 + 2", kQ));
    CHECK(parse2("1/2*x1 + 1/3", kQ).content_normalized() ==
          parse2("3*x1 + 2", kQ));
    // Sign is taken from the grevlex leading coefficient.
    CHECK(parse2("-x1^2 + x2", kQ).content_normalized() ==
          parse2("x1^2 - x2", kQ));

    MonomialOrder grevlex = MonomialOrder::grevlex();
    Polynomial m = parse2("2*x1^2 + 4*x2", kQ).monic(grevlex);
    CHECK(m == parse2("x1^2 + 2*x2", kQ));
    CHECK(Polynomial::zero(kXy, kQ).content_normalized().is_zero());
}

TEST_CASE("reindexing between contexts") {
    VariableContext big({"a", "x1", "x2", "b"});
    std::vector<std::size_t> map{1, 2}; // x1 -> slot 1, x2 -> slot 2
    Polynomial p = parse2("x1^2 - x2", kQ);
    Polynomial moved = p.reindexed(big, map);
    CHECK(moved == parse_poly("x1^2 - x2", big, kQ));
    CHECK(moved.has_variable(1));
    CHECK(!moved.has_variable(0));

    // Dropping a used variable is a hard error.
    std::vector<std::size_t> bad{Polynomial::npos, 2};
    CHECK_THROWS_AS(p.reindexed(big, bad), Error);
}

TEST_CASE("evaluation and degree bookkeeping") {
    Polynomial p = parse2("x1^2 + 2*x2 - 1", kQ);
    std::vector<FieldElement> at{FieldElement(make_rational(3), kQ),
                                 FieldElement(make_rational(4), kQ)};
    CHECK(p.evaluate(at) == FieldElement(make_rational(16), kQ));
    CHECK(p.total_degree() == 2);
    CHECK(p.pow(2) == p * p);
    CHECK(p.pow(0) == Polynomial::constant(kXy, kQ, Rational(1)));
    CHECK(parse2("0", kQ).total_degree() == 0);
}

TEST_CASE("variable context bookkeeping") {
    CHECK_THROWS_AS(VariableContext({"x", "x"}), Error);
    VariableContext ctx({"x", "y"});
    CHECK(ctx.index_of("y").value() == 1);
    CHECK(!ctx.index_of("z").has_value());
    auto fresh = fresh_names("y", 2, ctx.names());
    CHECK(fresh.size() == 2);
    CHECK(!ctx.index_of(fresh[0]).has_value());
    CHECK(fresh[0] != fresh[1]);
}

} // TEST_SUITE

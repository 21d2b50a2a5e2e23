#include "realdescent/descent.hpp"
#include "realdescent/parser.hpp"

#include <benchmark/benchmark.h>

using namespace realdescent;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kQi = FieldSpec::gaussian();

Polynomial dense_poly(const VariableContext& ctx, const FieldSpec& field,
                      std::uint32_t degree) {
    // Deterministic dense-ish polynomial: all monomials of total degree
    // <= degree in two variables, with small varying coefficients.
    std::vector<Term> terms;
    long c = 1;
    for (std::uint32_t a = 0; a <= degree; ++a)
        for (std::uint32_t b = 0; a + b <= degree; ++b) {
            terms.push_back(Term{Monomial({a, b, 0}),
                                 FieldElement(make_rational(c), field)});
            c = (c * 3 + 1) % 17 - 8;
            if (c == 0)
                c = 5;
        }
    return Polynomial::from_terms(ctx, field, std::move(terms));
}

void BM_PolynomialMultiply(benchmark::State& state) {
    VariableContext ctx({"x", "y", "z"});
    const std::uint32_t degree = static_cast<std::uint32_t>(state.range(0));
    Polynomial f = dense_poly(ctx, kQ, degree);
    Polynomial g = dense_poly(ctx, kQ, degree) +
                   Polynomial::variable(ctx, kQ, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_PolynomialMultiply)->Arg(4)->Arg(8)->Arg(12);

void BM_NormalForm(benchmark::State& state) {
    VariableContext ctx({"x", "y", "z"});
    std::vector<Polynomial> gens = {
        parse_poly("x^2 - y", ctx, kQ),
        parse_poly("x*y - z", ctx, kQ),
        parse_poly("x*z - y^2", ctx, kQ),
    };
    MonomialOrder order = MonomialOrder::grevlex();
    auto basis = groebner_basis(gens, order);
    Polynomial p = dense_poly(ctx, kQ, 10);
    for (auto _ : state)
        benchmark::DoNotOptimize(normal_form(p, basis, order));
}
BENCHMARK(BM_NormalForm);

void BM_GroebnerCyclic4(benchmark::State& state) {
    VariableContext ctx({"a", "b", "c", "d"});
    std::vector<Polynomial> gens = {
        parse_poly("a + b + c + d", ctx, kQ),
        parse_poly("a*b + b*c + c*d + d*a", ctx, kQ),
        parse_poly("a*b*c + b*c*d + c*d*a + d*a*b", ctx, kQ),
        parse_poly("a*b*c*d - 1", ctx, kQ),
    };
    MonomialOrder order = MonomialOrder::grevlex();
    for (auto _ : state)
        benchmark::DoNotOptimize(groebner_basis(gens, order));
}
BENCHMARK(BM_GroebnerCyclic4)->Unit(benchmark::kMillisecond);

void BM_GroebnerKatsura4(benchmark::State& state) {
    VariableContext ctx({"u0", "u1", "u2", "u3"});
    std::vector<Polynomial> gens = {
        parse_poly("u0 + 2*u1 + 2*u2 + 2*u3 - 1", ctx, kQ),
        parse_poly("u0^2 + 2*u1^2 + 2*u2^2 + 2*u3^2 - u0", ctx, kQ),
        parse_poly("2*u0*u1 + 2*u1*u2 + 2*u2*u3 - u1", ctx, kQ),
        parse_poly("u1^2 + 2*u0*u2 + 2*u1*u3 - u2", ctx, kQ),
    };
    MonomialOrder order = MonomialOrder::grevlex();
    for (auto _ : state)
        benchmark::DoNotOptimize(groebner_basis(gens, order));
}
BENCHMARK(BM_GroebnerKatsura4)->Unit(benchmark::kMillisecond);

void BM_GroebnerGaussian(benchmark::State& state) {
    VariableContext ctx({"x", "y"});
    std::vector<Polynomial> gens = {
        parse_poly("x^2 + i*y^2 - 1", ctx, kQi),
        parse_poly("x*y - i", ctx, kQi),
    };
    MonomialOrder order = MonomialOrder::lex();
    for (auto _ : state)
        benchmark::DoNotOptimize(groebner_basis(gens, order));
}
BENCHMARK(BM_GroebnerGaussian);

const char* kToyProblem =
    "field Q(i)\n"
    "vars x\n"
    "ideal:\n"
    "  x^2 - i\n"
    "symmetry:\n"
    "  i*x\n";

void BM_DescentToy(benchmark::State& state) {
    DescentProblem problem = parse_problem(kToyProblem);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_descent(problem));
}
BENCHMARK(BM_DescentToy)->Unit(benchmark::kMillisecond);

void BM_EliminateTwistedCubic(benchmark::State& state) {
    VariableContext ctx({"x", "y", "z"});
    std::vector<Polynomial> gens = {
        parse_poly("x^2 - y", ctx, kQ),
        parse_poly("x*y - z", ctx, kQ),
        parse_poly("x*z - y^2", ctx, kQ),
    };
    Ideal ideal(ctx, kQ, gens);
    for (auto _ : state) {
        Ideal fresh(ctx, kQ, gens);
        benchmark::DoNotOptimize(eliminate(fresh, 1));
    }
}
BENCHMARK(BM_EliminateTwistedCubic);

} // namespace

BENCHMARK_MAIN();

#pragma once

#include "realdescent/descent.hpp"
#include "realdescent/parser.hpp"

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace testsupport {

using namespace realdescent;

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

inline Rational random_rational(std::mt19937_64& rng, long lo = -9,
                                long hi = 9) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return make_rational(dist(rng));
}

inline FieldElement random_element(std::mt19937_64& rng, FieldSpec spec) {
    if (spec.is_rationals())
        return FieldElement(random_rational(rng), spec);
    return FieldElement(random_rational(rng), random_rational(rng), spec);
}

inline FieldElement random_nonzero_element(std::mt19937_64& rng,
                                           FieldSpec spec) {
    for (;;) {
        FieldElement e = random_element(rng, spec);
        if (!e.is_zero())
            return e;
    }
}

inline Polynomial random_poly(std::mt19937_64& rng,
                              const VariableContext& ctx, FieldSpec spec,
                              std::uint32_t max_exp = 3,
                              std::size_t max_terms = 5) {
    std::uniform_int_distribution<std::size_t> term_count(1, max_terms);
    std::uniform_int_distribution<std::uint32_t> exp(0, max_exp);
    std::vector<Term> terms;
    std::size_t count = term_count(rng);
    for (std::size_t t = 0; t < count; ++t) {
        std::vector<std::uint32_t> exps(ctx.size());
        for (auto& e : exps)
            e = exp(rng);
        terms.push_back(Term{Monomial(std::move(exps)),
                             random_element(rng, spec)});
    }
    return Polynomial::from_terms(ctx, spec, std::move(terms));
}

// --- CLI invocation -------------------------------------------------------

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string fixture_path(const std::string& name) {
    return std::string(REALDESCENT_FIXTURE_DIR) + "/" + name;
}

// Runs the CLI with a shell-quoted argument string; `tag` isolates the
// capture files of concurrently running tests.
inline CliResult run_cli(const std::string& args, const std::string& tag,
                         const std::string& env_prefix = "") {
    std::string base = "/tmp/realdescent_test_" + tag;
    std::string cmd = env_prefix + std::string(REALDESCENT_CLI_PATH) + " " +
                      args + " >" + base + ".out 2>" + base + ".err";
    int status = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.out = slurp(base + ".out");
    result.err = slurp(base + ".err");
    std::remove((base + ".out").c_str());
    std::remove((base + ".err").c_str());
    return result;
}

// --- Sylvester resultant oracle -------------------------------------------

// Coefficients of p with respect to variable 0, as polynomials over the
// remaining variables (index shifted down by one).
inline std::vector<Polynomial> outer_coefficients(
    const Polynomial& p, const VariableContext& inner_ctx) {
    std::uint32_t deg = 0;
    for (const auto& term : p.terms())
        deg = std::max(deg, term.mono.exponent(0));
    std::vector<std::vector<Term>> buckets(deg + 1);
    for (const auto& term : p.terms()) {
        std::vector<std::uint32_t> rest(term.mono.exponents().begin() + 1,
                                        term.mono.exponents().end());
        buckets[term.mono.exponent(0)].push_back(
            Term{Monomial(std::move(rest)), term.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(deg + 1);
    for (auto& bucket : buckets)
        out.push_back(
            Polynomial::from_terms(inner_ctx, p.field(), std::move(bucket)));
    return out;
}

inline Polynomial determinant(std::vector<std::vector<Polynomial>> m,
                              const VariableContext& ctx, FieldSpec field) {
    std::size_t size = m.size();
    if (size == 0)
        return Polynomial::constant(ctx, field, Rational(1));
    if (size == 1)
        return m[0][0];
    Polynomial acc = Polynomial::zero(ctx, field);
    for (std::size_t row = 0; row < size; ++row) {
        if (m[row][0].is_zero())
            continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(size - 1);
        for (std::size_t r = 0; r < size; ++r) {
            if (r == row)
                continue;
            minor.emplace_back(m[r].begin() + 1, m[r].end());
        }
        Polynomial cofactor = m[row][0] * determinant(minor, ctx, field);
        if (row % 2 == 0)
            acc += cofactor;
        else
            acc -= cofactor;
    }
    return acc;
}

// Resultant of f and g with respect to variable 0 of their shared context;
// the result lives over the remaining variables.  Brute-force Laplace
// expansion of the Sylvester matrix — an independent oracle for eliminate.
inline Polynomial resultant(const Polynomial& f, const Polynomial& g,
                            const VariableContext& inner_ctx) {
    std::vector<Polynomial> a = outer_coefficients(f, inner_ctx);
    std::vector<Polynomial> b = outer_coefficients(g, inner_ctx);
    std::size_t m = a.size() - 1;
    std::size_t n = b.size() - 1;
    FieldSpec field = f.field();
    std::size_t size = m + n;
    std::vector<std::vector<Polynomial>> syl(
        size,
        std::vector<Polynomial>(size, Polynomial::zero(inner_ctx, field)));
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t k = 0; k <= m; ++k)
            syl[row][row + k] = a[m - k];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t k = 0; k <= n; ++k)
            syl[n + row][row + k] = b[n - k];
    return determinant(std::move(syl), inner_ctx, field);
}

} // namespace testsupport

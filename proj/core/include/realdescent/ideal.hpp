#pragma once

#include "realdescent/polynomial.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

namespace realdescent {

// Fail-stop budgets for Buchberger completion.  Exceeding either limit
// raises ResourceLimitError; no partial basis is ever returned.
struct GbLimits {
    std::uint64_t max_pairs = 2'000'000;
    std::size_t max_coefficient_bits = 1'048'576;
};

// S-polynomial of two nonzero polynomials under `order`.
Polynomial spolynomial(const Polynomial& f, const Polynomial& g,
                       const MonomialOrder& order);

// Remainder of multivariate division: no term of the result is divisible by
// any leading monomial of `basis`, and p - result lies in <basis>.
// Reducers are tried in basis order, so the result is deterministic.
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis,
                       const MonomialOrder& order);

// Unique reduced Groebner basis (monic, auto-reduced, sorted by descending
// leading monomial).  Buchberger completion with the normal selection
// strategy and both the product and chain criteria.
std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators,
                                       const MonomialOrder& order,
                                       const GbLimits& limits = {});

class Ideal {
public:
    Ideal(VariableContext ctx, FieldSpec field,
          std::vector<Polynomial> generators);

    const VariableContext& context() const { return ctx_; }
    const FieldSpec& field() const { return field_; }
    // Nonzero, content-normalized generators.  May be empty (zero ideal).
    const std::vector<Polynomial>& generators() const { return generators_; }

    // Reduced Groebner basis; cached per order and shared between copies.
    std::shared_ptr<const std::vector<Polynomial>> groebner(
        const MonomialOrder& order, const GbLimits& limits = {}) const;

    bool contains(const Polynomial& p,
                  const MonomialOrder& order = MonomialOrder::grevlex(),
                  const GbLimits& limits = {}) const;

    // Weak Nullstellensatz emptiness test: reduced GB = {1}.
    bool is_trivial(const GbLimits& limits = {}) const;

    // Coefficient-wise conjugate ideal I^sigma.
    Ideal conjugated() const;

private:
    struct GbCache;

    VariableContext ctx_;
    FieldSpec field_;
    std::vector<Polynomial> generators_;
    std::shared_ptr<GbCache> cache_;
};

// Reduced GBs coincide.
bool ideal_equals(const Ideal& lhs, const Ideal& rhs,
                  const MonomialOrder& order = MonomialOrder::grevlex(),
                  const GbLimits& limits = {});

// Generators concatenated and normalized (variety intersection).
Ideal ideal_sum(const Ideal& lhs, const Ideal& rhs);

// Elimination ideal I ∩ K[x_{k+1}, ...]: Groebner basis under
// BlockElimination(k), restricted to the elements free of the first k
// variables; the result context drops those variables.
Ideal eliminate(const Ideal& ideal, std::size_t k,
                const GbLimits& limits = {});

// Radical membership via the Rabinowitsch trick:
// p in sqrt(I)  iff  1 in I + <1 - y*p> in one extra variable y.
bool contains_radical(const Ideal& ideal, const Polynomial& p,
                      const GbLimits& limits = {});

} // namespace realdescent

#pragma once

#include "realdescent/field.hpp"
#include "realdescent/monomial.hpp"
#include "realdescent/variables.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace realdescent {

struct Term {
    Monomial mono;
    FieldElement coeff;
};

// Multivariate polynomial over a FieldSpec.  Terms are kept in descending
// graded-reverse-lexicographic order with nonzero coefficients; two equal
// polynomials always have identical term lists, so equality, hashing of the
// printed form, and printing itself are all canonical.
class Polynomial {
public:
    Polynomial(VariableContext ctx, FieldSpec field)
        : ctx_(std::move(ctx)), field_(field) {}

    static Polynomial zero(VariableContext ctx, FieldSpec field) {
        return Polynomial(std::move(ctx), field);
    }
    static Polynomial constant(VariableContext ctx, FieldElement value);
    static Polynomial constant(VariableContext ctx, FieldSpec field,
                               const Rational& value) {
        return constant(std::move(ctx), FieldElement(value, field));
    }
    static Polynomial variable(VariableContext ctx, FieldSpec field,
                               std::size_t index);
    static Polynomial monomial(VariableContext ctx, Monomial mono,
                               FieldElement coeff);
    // Sorts, merges duplicate monomials and drops zeros.
    static Polynomial from_terms(VariableContext ctx, FieldSpec field,
                                 std::vector<Term> terms);

    const VariableContext& context() const { return ctx_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_[0].mono.is_constant());
    }
    std::size_t num_terms() const { return terms_.size(); }
    std::uint32_t total_degree() const;
    bool has_variable(std::size_t index) const;

    // Leading term under `order` (first term for grevlex); requires nonzero.
    const Term& leading_term(const MonomialOrder& order) const;
    FieldElement coefficient(const Monomial& mono) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const FieldElement& c) const;
    Polynomial pow(std::uint32_t e) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Coefficient-wise complex conjugation.
    Polynomial conjugated() const;
    // p + conj(p); coefficients land in the real subfield (spec unchanged).
    Polynomial trace() const;
    // (trace(p), trace(root * p)); requires a quadratic field.
    std::pair<Polynomial, Polynomial> trace_pair() const;
    // Does every coefficient lie in the real subfield?
    bool is_conjugation_fixed() const;

    FieldElement evaluate(std::span<const FieldElement> point) const;

    Polynomial lifted_to_field(const FieldSpec& spec) const;
    // Requires is_conjugation_fixed(); drops the root component.
    Polynomial narrowed_to_rationals() const;

    // Rebuild over `ctx` with variable k of *this becoming var_map[k]; an
    // entry of npos asserts the variable does not occur.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    Polynomial reindexed(VariableContext ctx,
                         std::span<const std::size_t> var_map) const;

    // Scale so all numeric components are integers with content 1 and the
    // grevlex-leading coefficient is positive (a > 0, or a = 0 and b > 0).
    Polynomial content_normalized() const;
    // Scale so the leading coefficient under `order` is 1.
    Polynomial monic(const MonomialOrder& order) const;

    // Largest coefficient bit size; used by resource budgets.
    std::size_t max_coefficient_bits() const;

    // Canonical form; parsing it back yields an equal polynomial.
    std::string to_string() const;

private:
    void check_compatible(const Polynomial& o) const;

    VariableContext ctx_;
    FieldSpec field_;
    std::vector<Term> terms_;
};

inline Polynomial operator+(Polynomial x, const Polynomial& y) {
    x += y;
    return x;
}
inline Polynomial operator-(Polynomial x, const Polynomial& y) {
    x -= y;
    return x;
}

// Polynomial map F = (F_1, ..., F_k): source variables -> target space.
// Component j is the image of target variable j, written in the source
// variables, so composition substitutes components for target variables.
class PolyMap {
public:
    PolyMap(VariableContext source, VariableContext target,
            std::vector<Polynomial> components);

    static PolyMap identity(const VariableContext& ctx, FieldSpec field);

    const VariableContext& source() const { return source_; }
    const VariableContext& target() const { return target_; }
    const FieldSpec& field() const { return field_; }
    std::size_t size() const { return components_.size(); }
    const Polynomial& component(std::size_t k) const { return components_[k]; }
    const std::vector<Polynomial>& components() const { return components_; }

    PolyMap conjugated() const;

    std::vector<FieldElement> evaluate(
        std::span<const FieldElement> point) const;

    bool operator==(const PolyMap& o) const;
    bool operator!=(const PolyMap& o) const { return !(*this == o); }

private:
    VariableContext source_;
    VariableContext target_;
    FieldSpec field_;
    std::vector<Polynomial> components_;
};

// Substitute: p lives over f.target(); the result, over f.source(), is
// p(F_1, ..., F_k).
Polynomial compose(const Polynomial& p, const PolyMap& f);
// (g after f): component j is compose(g_j, f).
PolyMap compose(const PolyMap& g, const PolyMap& f);

} // namespace realdescent

#pragma once

#include "realdescent/error.hpp"
#include "realdescent/rational.hpp"

#include <optional>
#include <string>

namespace realdescent {

enum class FieldKind { Rationals, Quadratic };

// Coefficient field: either Q or an imaginary quadratic extension Q(sqrt m)
// with m < 0 squarefree.  m = -1 is printed as Q(i).
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec quadratic(long m);
    static FieldSpec gaussian() { return quadratic(-1); }

    FieldKind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == FieldKind::Rationals; }
    bool is_quadratic() const { return kind_ == FieldKind::Quadratic; }

    // Radicand m; only meaningful for quadratic fields.
    long radicand() const { return m_; }

    // Name of the adjoined square root as it appears in polynomial syntax:
    // "i" for m = -1, "s" otherwise.
    std::string symbol() const { return m_ == -1 ? "i" : "s"; }

    bool operator==(const FieldSpec& o) const {
        return kind_ == o.kind_ && m_ == o.m_;
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    FieldSpec(FieldKind kind, long m) : kind_(kind), m_(m) {}

    FieldKind kind_;
    long m_;
};

// Element a + b*sqrt(m) of a FieldSpec.  Over Q the b component is identically
// zero.  All arithmetic is exact; mixing specs throws FieldMismatchError.
class FieldElement {
public:
    explicit FieldElement(FieldSpec spec)
        : a_(0), b_(0), spec_(spec) {}
    FieldElement(Rational a, FieldSpec spec)
        : a_(std::move(a)), b_(0), spec_(spec) {}
    FieldElement(Rational a, Rational b, FieldSpec spec);

    static FieldElement zero(FieldSpec spec) { return FieldElement(spec); }
    static FieldElement one(FieldSpec spec) {
        return FieldElement(Rational(1), spec);
    }
    // The adjoined root sqrt(m); requires a quadratic spec.
    static FieldElement root(FieldSpec spec);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const FieldSpec& spec() const { return spec_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_one() const { return a_ == 1 && b_ == 0; }
    // Fixed by conjugation, i.e. lies in the real subfield Q.
    bool is_fixed() const { return b_ == 0; }

    FieldElement conj() const { return FieldElement(a_, -b_, spec_); }

    // Field norm a^2 - m*b^2 (a rational; positive unless zero since m < 0).
    Rational norm() const;

    FieldElement inverse() const;

    // Exact square root within the same field, when one exists.
    std::optional<FieldElement> sqrt() const;
    bool is_square() const { return sqrt().has_value(); }

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    FieldElement operator-() const { return FieldElement(-a_, -b_, spec_); }

    bool operator==(const FieldElement& o) const {
        return spec_ == o.spec_ && a_ == o.a_ && b_ == o.b_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    // Embed into a larger spec (Q into Q(sqrt m)); identity if specs match.
    FieldElement lifted_to(const FieldSpec& spec) const;

    // Debug/diagnostic form, e.g. "3/2 + 2*i".  Canonical coefficient
    // rendering inside polynomials lives in the polynomial printer.
    std::string to_string() const;

private:
    void check_same_spec(const FieldElement& o) const;

    Rational a_;
    Rational b_;
    FieldSpec spec_;
};

inline FieldElement operator+(FieldElement x, const FieldElement& y) {
    x += y;
    return x;
}
inline FieldElement operator-(FieldElement x, const FieldElement& y) {
    x -= y;
    return x;
}
inline FieldElement operator*(FieldElement x, const FieldElement& y) {
    x *= y;
    return x;
}
inline FieldElement operator/(FieldElement x, const FieldElement& y) {
    x /= y;
    return x;
}

// Combined bit size of both rational components.
std::size_t bit_size(const FieldElement& x);

// Common spec two operands may be lifted to: equal specs, or Q lifted into a
// quadratic spec.  Throws FieldMismatchError for two distinct quadratic specs.
FieldSpec reconcile(const FieldSpec& x, const FieldSpec& y);

} // namespace realdescent

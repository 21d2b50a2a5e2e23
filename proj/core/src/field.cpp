#include "realdescent/field.hpp"

namespace realdescent {

std::size_t bit_size(const Rational& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

bool is_square(const Rational& q) {
    if (sgn(q) < 0)
        return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q.get_den().get_mpz_t());
}

std::optional<Rational> sqrt_exact(const Rational& q) {
    if (!is_square(q))
        return std::nullopt;
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den().get_mpz_t());
    return Rational(num, den);
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

FieldSpec FieldSpec::quadratic(long m) {
    if (m >= 0)
        throw Error("quadratic field radicand must be negative, got " +
                    std::to_string(m));
    // Squarefree check by trial division; radicands are small in practice.
    long n = -m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0)
            throw Error("quadratic field radicand must be squarefree, got " +
                        std::to_string(m));
    }
    return FieldSpec(FieldKind::Quadratic, m);
}

std::string FieldSpec::to_string() const {
    if (is_rationals())
        return "Q";
    if (m_ == -1)
        return "Q(i)";
    return "Q(sqrt " + std::to_string(m_) + ")";
}

FieldElement::FieldElement(Rational a, Rational b, FieldSpec spec)
    : a_(std::move(a)), b_(std::move(b)), spec_(spec) {
    if (spec_.is_rationals() && b_ != 0)
        throw FieldMismatchError(
            "nonzero root component in an element of Q");
}

FieldElement FieldElement::root(FieldSpec spec) {
    if (!spec.is_quadratic())
        throw FieldMismatchError("Q has no adjoined square root");
    return FieldElement(Rational(0), Rational(1), spec);
}

void FieldElement::check_same_spec(const FieldElement& o) const {
    if (spec_ != o.spec_)
        throw FieldMismatchError("cannot combine elements of " +
                                 spec_.to_string() + " and " +
                                 o.spec_.to_string());
}

Rational FieldElement::norm() const {
    if (spec_.is_rationals())
        return a_ * a_;
    return a_ * a_ - Rational(spec_.radicand()) * b_ * b_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero())
        throw DivisionByZeroError("inverse of zero in " + spec_.to_string());
    if (spec_.is_rationals())
        return FieldElement(Rational(1) / a_, spec_);
    // 1/(a + b r) = (a - b r)/N with N = a^2 - m b^2 > 0.
    Rational n = norm();
    return FieldElement(a_ / n, -b_ / n, spec_);
}

std::optional<FieldElement> FieldElement::sqrt() const {
    if (is_zero())
        return FieldElement(spec_);
    if (b_ == 0) {
        if (auto r = sqrt_exact(a_))
            return FieldElement(*r, spec_);
        if (spec_.is_quadratic()) {
            // a < 0 may still be a square: (d r)^2 = m d^2 = a.
            if (auto d = sqrt_exact(a_ / Rational(spec_.radicand())))
                return FieldElement(Rational(0), *d, spec_);
        }
        return std::nullopt;
    }
    // (c + d r)^2 = a + b r requires c^2 + m d^2 = a and 2 c d = b,
    // so c^2 is a root of 4 X^2 - 4 a X + m b^2, i.e. (a +- sqrt(N))/2
    // with N = a^2 - m b^2 the field norm, which must be a rational square.
    auto s = sqrt_exact(norm());
    if (!s)
        return std::nullopt;
    for (int pick = 0; pick < 2; ++pick) {
        Rational c2 = pick == 0 ? Rational(a_ + *s) : Rational(a_ - *s);
        c2 /= 2;
        if (sgn(c2) <= 0)
            continue;
        auto c = sqrt_exact(c2);
        if (!c)
            continue;
        Rational d = b_ / (2 * *c);
        FieldElement cand(*c, d, spec_);
        if (cand * cand == *this)
            return cand;
    }
    return std::nullopt;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same_spec(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same_spec(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same_spec(o);
    if (spec_.is_rationals()) {
        a_ *= o.a_;
        return *this;
    }
    Rational m(spec_.radicand());
    Rational na = a_ * o.a_ + m * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    return *this *= o.inverse();
}

FieldElement FieldElement::lifted_to(const FieldSpec& spec) const {
    if (spec_ == spec)
        return *this;
    if (spec_.is_rationals() && spec.is_quadratic())
        return FieldElement(a_, Rational(0), spec);
    throw FieldMismatchError("cannot embed " + spec_.to_string() + " into " +
                             spec.to_string());
}

std::string FieldElement::to_string() const {
    if (b_ == 0)
        return realdescent::to_string(a_);
    std::string root = spec_.symbol();
    std::string bs;
    Rational babs = abs(b_);
    if (babs == 1)
        bs = root;
    else
        bs = realdescent::to_string(babs) + "*" + root;
    if (a_ == 0)
        return (sgn(b_) < 0 ? "-" : "") + bs;
    return realdescent::to_string(a_) + (sgn(b_) < 0 ? " - " : " + ") + bs;
}

std::size_t bit_size(const FieldElement& x) {
    return bit_size(x.a()) + bit_size(x.b());
}

FieldSpec reconcile(const FieldSpec& x, const FieldSpec& y) {
    if (x == y)
        return x;
    if (x.is_rationals())
        return y;
    if (y.is_rationals())
        return x;
    throw FieldMismatchError("incompatible fields " + x.to_string() + " and " +
                             y.to_string());
}

} // namespace realdescent

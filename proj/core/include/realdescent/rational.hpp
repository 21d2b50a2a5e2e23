#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>

namespace realdescent {

// Exact rational arithmetic is delegated to GMP's mpq_class.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

inline int sign(const Rational& q) {
    return sgn(q);
}

// Total bit size of the canonical num/den pair; used for coefficient budgets.
std::size_t bit_size(const Rational& q);

// True iff q is the square of a rational.
bool is_square(const Rational& q);

// Exact square root when one exists in Q.
std::optional<Rational> sqrt_exact(const Rational& q);

// Canonical form: "a" for integers, "a/b" otherwise (b > 0, gcd(a,b) = 1).
std::string to_string(const Rational& q);

} // namespace realdescent

#include "realdescent/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace realdescent {

Monomial::Monomial(std::vector<std::uint32_t> exps)
    : exps_(std::move(exps)),
      degree_(std::accumulate(exps_.begin(), exps_.end(), std::uint32_t(0))) {}

Monomial Monomial::times(const Monomial& o) const {
    if (size() != o.size())
        throw ContextMismatchError("monomial arity mismatch");
    Monomial r(*this);
    for (std::size_t k = 0; k < exps_.size(); ++k)
        r.exps_[k] += o.exps_[k];
    r.degree_ += o.degree_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (size() != o.size())
        throw ContextMismatchError("monomial arity mismatch");
    if (degree_ > o.degree_)
        return false;
    for (std::size_t k = 0; k < exps_.size(); ++k)
        if (exps_[k] > o.exps_[k])
            return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
    Monomial r(o);
    for (std::size_t k = 0; k < exps_.size(); ++k)
        r.exps_[k] -= exps_[k];
    r.degree_ -= degree_;
    return r;
}

Monomial Monomial::lcm(const Monomial& x, const Monomial& y) {
    if (x.size() != y.size())
        throw ContextMismatchError("monomial arity mismatch");
    Monomial r(x);
    r.degree_ = 0;
    for (std::size_t k = 0; k < r.exps_.size(); ++k) {
        r.exps_[k] = std::max(x.exps_[k], y.exps_[k]);
        r.degree_ += r.exps_[k];
    }
    return r;
}

bool Monomial::coprime(const Monomial& x, const Monomial& y) {
    for (std::size_t k = 0; k < x.size(); ++k)
        if (x.exponent(k) != 0 && y.exponent(k) != 0)
            return false;
    return true;
}

namespace {

// Graded reverse lexicographic comparison restricted to [lo, hi).
int grevlex_range(const Monomial& x, const Monomial& y, std::size_t lo,
                  std::size_t hi) {
    std::uint64_t dx = 0, dy = 0;
    for (std::size_t k = lo; k < hi; ++k) {
        dx += x.exponent(k);
        dy += y.exponent(k);
    }
    if (dx != dy)
        return dx < dy ? -1 : 1;
    // Equal degree: the larger monomial has the *smaller* exponent at the
    // last position where they differ.
    for (std::size_t k = hi; k-- > lo;) {
        if (x.exponent(k) != y.exponent(k))
            return x.exponent(k) < y.exponent(k) ? 1 : -1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& x, const Monomial& y) const {
    if (x.size() != y.size())
        throw ContextMismatchError("monomial arity mismatch");
    const std::size_t n = x.size();
    switch (kind_) {
    case Kind::Lex:
        for (std::size_t k = 0; k < n; ++k)
            if (x.exponent(k) != y.exponent(k))
                return x.exponent(k) < y.exponent(k) ? -1 : 1;
        return 0;
    case Kind::GrevLex:
        if (x.degree() != y.degree())
            return x.degree() < y.degree() ? -1 : 1;
        return grevlex_range(x, y, 0, n);
    case Kind::Block: {
        const std::size_t s = std::min(split_, n);
        if (int c = grevlex_range(x, y, 0, s))
            return c;
        return grevlex_range(x, y, s, n);
    }
    }
    return 0;
}

std::string MonomialOrder::to_string() const {
    switch (kind_) {
    case Kind::Lex:
        return "lex";
    case Kind::GrevLex:
        return "grevlex";
    case Kind::Block:
        return "block(" + std::to_string(split_) + ")";
    }
    return "";
}

} // namespace realdescent

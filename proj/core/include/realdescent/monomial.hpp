#pragma once

#include "realdescent/error.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace realdescent {

// Exponent vector over a fixed number of variables.
class Monomial {
public:
    explicit Monomial(std::size_t nvars)
        : exps_(nvars, 0), degree_(0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    std::size_t size() const { return exps_.size(); }
    std::uint32_t exponent(std::size_t k) const { return exps_[k]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    std::uint32_t degree() const { return degree_; }
    bool is_constant() const { return degree_ == 0; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // Quotient o / this; requires divides(o).
    Monomial quotient_of(const Monomial& o) const;

    static Monomial lcm(const Monomial& x, const Monomial& y);
    static bool coprime(const Monomial& x, const Monomial& y);

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_;
};

// Term orders.  Block orders split the variables at `split`: the first block
// is compared grevlex first, then the second block grevlex; they implement
// elimination of the leading block.
class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex, Block };

    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex, 0); }
    static MonomialOrder block_elimination(std::size_t split) {
        if (split == 0)
            throw Error("block elimination needs a positive split");
        return MonomialOrder(Kind::Block, split);
    }

    Kind kind() const { return kind_; }
    std::size_t split() const { return split_; }

    // Three-way comparison: negative if x < y, zero if equal, positive if
    // x > y under this order.
    int compare(const Monomial& x, const Monomial& y) const;
    bool less(const Monomial& x, const Monomial& y) const {
        return compare(x, y) < 0;
    }
    bool greater(const Monomial& x, const Monomial& y) const {
        return compare(x, y) > 0;
    }

    bool operator==(const MonomialOrder& o) const {
        return kind_ == o.kind_ && split_ == o.split_;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    MonomialOrder(Kind kind, std::size_t split) : kind_(kind), split_(split) {}

    Kind kind_;
    std::size_t split_;
};

} // namespace realdescent

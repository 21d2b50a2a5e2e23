#include "realdescent/ideal.hpp"

#include "realdescent/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>

namespace realdescent {

namespace {

struct OrderGreater {
    MonomialOrder order;
    bool operator()(const Monomial& x, const Monomial& y) const {
        return order.greater(x, y);
    }
};

// Working form for division: terms keyed by monomial, largest first.
using WorkPoly = std::map<Monomial, FieldElement, OrderGreater>;

WorkPoly to_work(const Polynomial& p, const MonomialOrder& order) {
    WorkPoly w{OrderGreater{order}};
    for (const auto& t : p.terms())
        w.emplace(t.mono, t.coeff);
    return w;
}

Polynomial from_work(const VariableContext& ctx, const FieldSpec& field,
                     const WorkPoly& w) {
    std::vector<Term> terms;
    terms.reserve(w.size());
    for (const auto& [m, c] : w)
        terms.push_back(Term{m, c});
    return Polynomial::from_terms(ctx, field, std::move(terms));
}

struct Reducer {
    const Polynomial* poly;
    const Monomial* lm;
    FieldElement lc_inv;
};

std::vector<Reducer> make_reducers(std::span<const Polynomial> basis,
                                   const MonomialOrder& order) {
    std::vector<Reducer> rs;
    rs.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero())
            continue;
        const Term& lt = g.leading_term(order);
        rs.push_back(Reducer{&g, &lt.mono, lt.coeff.inverse()});
    }
    return rs;
}

// Subtract factor * shift * g from w.
void subtract_multiple(WorkPoly& w, const Polynomial& g,
                       const FieldElement& factor, const Monomial& shift) {
    for (const auto& t : g.terms()) {
        Monomial key = t.mono.times(shift);
        FieldElement delta = factor * t.coeff;
        auto it = w.find(key);
        if (it == w.end()) {
            w.emplace(std::move(key), -delta);
        } else {
            it->second -= delta;
            if (it->second.is_zero())
                w.erase(it);
        }
    }
}

Polynomial normal_form_impl(const Polynomial& p,
                            const std::vector<Reducer>& reducers,
                            const MonomialOrder& order) {
    WorkPoly work = to_work(p, order);
    WorkPoly rem{OrderGreater{order}};
    while (!work.empty()) {
        auto head = work.begin();
        const Reducer* hit = nullptr;
        for (const auto& r : reducers) {
            if (r.lm->divides(head->first)) {
                hit = &r;
                break;
            }
        }
        if (!hit) {
            rem.emplace(head->first, head->second);
            work.erase(head);
            continue;
        }
        Monomial shift = hit->lm->quotient_of(head->first);
        FieldElement factor = head->second * hit->lc_inv;
        subtract_multiple(work, *hit->poly, factor, shift);
    }
    return from_work(p.context(), p.field(), rem);
}

} // namespace

Polynomial spolynomial(const Polynomial& f, const Polynomial& g,
                       const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero())
        throw Error("S-polynomial of a zero polynomial");
    const Term& lf = f.leading_term(order);
    const Term& lg = g.leading_term(order);
    Monomial l = Monomial::lcm(lf.mono, lg.mono);
    Polynomial left = Polynomial::monomial(
        f.context(), lf.mono.quotient_of(l), lf.coeff.inverse());
    Polynomial right = Polynomial::monomial(
        g.context(), lg.mono.quotient_of(l), lg.coeff.inverse());
    return f * left - g * right;
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> basis,
                       const MonomialOrder& order) {
    return normal_form_impl(p, make_reducers(basis, order), order);
}

std::vector<Polynomial> groebner_basis(std::span<const Polynomial> generators,
                                       const MonomialOrder& order,
                                       const GbLimits& limits) {
    std::vector<Polynomial> basis;
    for (const auto& g : generators)
        if (!g.is_zero())
            basis.push_back(g.content_normalized());
    std::vector<Monomial> lms;
    lms.reserve(basis.size());
    for (const auto& g : basis)
        lms.push_back(g.leading_term(order).mono);

    // Normal selection strategy: (lcm total degree, i, j), smallest first.
    std::set<std::tuple<std::uint32_t, std::size_t, std::size_t>> queue;
    std::set<std::pair<std::size_t, std::size_t>> treated;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            queue.emplace(Monomial::lcm(lms[i], lms[j]).degree(), i, j);
    };
    for (std::size_t j = 0; j < basis.size(); ++j)
        push_pairs_for(j);

    std::uint64_t processed = 0;
    while (!queue.empty()) {
        auto [deg, i, j] = *queue.begin();
        queue.erase(queue.begin());
        if (++processed > limits.max_pairs)
            throw ResourceLimitError(
                "S-pair budget exceeded (" + std::to_string(limits.max_pairs) +
                " pairs); increase the budget to continue");
        treated.emplace(i, j);

        // Product criterion: coprime leading monomials reduce to zero.
        if (Monomial::coprime(lms[i], lms[j]))
            continue;
        // Chain criterion: lcm divisible by a third leading monomial whose
        // two pairs were already treated.
        Monomial l = Monomial::lcm(lms[i], lms[j]);
        bool superfluous = false;
        for (std::size_t k = 0; k < basis.size() && !superfluous; ++k) {
            if (k == i || k == j || !lms[k].divides(l))
                continue;
            auto pik = std::minmax(i, k);
            auto pjk = std::minmax(j, k);
            if (treated.count({pik.first, pik.second}) &&
                treated.count({pjk.first, pjk.second}))
                superfluous = true;
        }
        if (superfluous)
            continue;

        Polynomial s = spolynomial(basis[i], basis[j], order);
        Polynomial r = normal_form(s, basis, order);
        if (r.is_zero())
            continue;
        r = r.content_normalized();
        if (r.max_coefficient_bits() > limits.max_coefficient_bits)
            throw ResourceLimitError(
                "coefficient bit-size budget exceeded (" +
                std::to_string(limits.max_coefficient_bits) + " bits)");
        basis.push_back(std::move(r));
        lms.push_back(basis.back().leading_term(order).mono);
        push_pairs_for(basis.size() - 1);
    }

    // Minimize: drop elements whose leading monomial is divisible by another
    // kept element's.  Processing by ascending leading monomial keeps the
    // divisor side.
    std::vector<std::size_t> by_lm(basis.size());
    for (std::size_t k = 0; k < by_lm.size(); ++k)
        by_lm[k] = k;
    std::sort(by_lm.begin(), by_lm.end(), [&](std::size_t x, std::size_t y) {
        int c = order.compare(lms[x], lms[y]);
        return c != 0 ? c < 0 : x < y;
    });
    std::vector<Polynomial> kept;
    std::vector<Monomial> kept_lms;
    for (std::size_t idx : by_lm) {
        bool divisible = false;
        for (const auto& m : kept_lms)
            if (m.divides(lms[idx])) {
                divisible = true;
                break;
            }
        if (!divisible) {
            kept.push_back(basis[idx]);
            kept_lms.push_back(lms[idx]);
        }
    }

    // Interreduce tails: with pairwise non-divisible leading monomials one
    // pass of full reduction against the others yields the reduced basis.
    for (std::size_t k = 0; k < kept.size(); ++k) {
        std::vector<Polynomial> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != k)
                others.push_back(kept[j]);
        kept[k] = normal_form(kept[k], others, order);
    }
    for (auto& g : kept)
        g = g.monic(order);
    std::sort(kept.begin(), kept.end(),
              [&](const Polynomial& x, const Polynomial& y) {
                  return order.greater(x.leading_term(order).mono,
                                       y.leading_term(order).mono);
              });
    return kept;
}

struct Ideal::GbCache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder,
                          std::shared_ptr<const std::vector<Polynomial>>>>
        entries;
};

Ideal::Ideal(VariableContext ctx, FieldSpec field,
             std::vector<Polynomial> generators)
    : ctx_(std::move(ctx)),
      field_(field),
      cache_(std::make_shared<GbCache>()) {
    for (auto& g : generators) {
        if (g.context() != ctx_)
            throw ContextMismatchError(
                "ideal generator over a different variable context");
        if (g.field() != field_)
            throw FieldMismatchError("ideal generator over " +
                                     g.field().to_string() +
                                     ", expected " + field_.to_string());
        if (g.is_zero())
            continue;
        Polynomial n = g.content_normalized();
        bool dup = false;
        for (const auto& h : generators_)
            if (h == n) {
                dup = true;
                break;
            }
        if (!dup)
            generators_.push_back(std::move(n));
    }
}

std::shared_ptr<const std::vector<Polynomial>> Ideal::groebner(
    const MonomialOrder& order, const GbLimits& limits) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        for (const auto& [o, gb] : cache_->entries)
            if (o == order)
                return gb;
    }
    auto gb = std::make_shared<const std::vector<Polynomial>>(
        groebner_basis(generators_, order, limits));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    for (const auto& [o, cached] : cache_->entries)
        if (o == order)
            return cached;
    cache_->entries.emplace_back(order, gb);
    return gb;
}

bool Ideal::contains(const Polynomial& p, const MonomialOrder& order,
                     const GbLimits& limits) const {
    if (p.context() != ctx_)
        throw ContextMismatchError("membership test across contexts");
    if (p.is_zero())
        return true;
    auto gb = groebner(order, limits);
    return normal_form(p, *gb, order).is_zero();
}

bool Ideal::is_trivial(const GbLimits& limits) const {
    auto gb = groebner(MonomialOrder::grevlex(), limits);
    return gb->size() == 1 && (*gb)[0].is_constant() && !(*gb)[0].is_zero();
}

Ideal Ideal::conjugated() const {
    std::vector<Polynomial> gens;
    gens.reserve(generators_.size());
    for (const auto& g : generators_)
        gens.push_back(g.conjugated());
    return Ideal(ctx_, field_, std::move(gens));
}

bool ideal_equals(const Ideal& lhs, const Ideal& rhs,
                  const MonomialOrder& order, const GbLimits& limits) {
    if (lhs.context() != rhs.context())
        throw ContextMismatchError("ideal comparison across contexts");
    if (lhs.field() != rhs.field())
        throw FieldMismatchError("ideal comparison across fields");
    auto gl = lhs.groebner(order, limits);
    auto gr = rhs.groebner(order, limits);
    return *gl == *gr;
}

Ideal ideal_sum(const Ideal& lhs, const Ideal& rhs) {
    if (lhs.context() != rhs.context())
        throw ContextMismatchError("ideal sum across contexts");
    if (lhs.field() != rhs.field())
        throw FieldMismatchError("ideal sum across fields");
    std::vector<Polynomial> gens = lhs.generators();
    for (const auto& g : rhs.generators())
        gens.push_back(g);
    return Ideal(lhs.context(), lhs.field(), std::move(gens));
}

Ideal eliminate(const Ideal& ideal, std::size_t k, const GbLimits& limits) {
    const VariableContext& ctx = ideal.context();
    if (k == 0 || k >= ctx.size())
        throw Error("elimination block size must satisfy 0 < k < #variables");
    auto gb = ideal.groebner(MonomialOrder::block_elimination(k), limits);

    std::vector<std::string> kept_names(ctx.names().begin() + k,
                                        ctx.names().end());
    VariableContext kept_ctx(std::move(kept_names));
    std::vector<std::size_t> var_map(ctx.size(), Polynomial::npos);
    for (std::size_t v = k; v < ctx.size(); ++v)
        var_map[v] = v - k;

    std::vector<Polynomial> gens;
    for (const auto& g : *gb) {
        bool uses_eliminated = false;
        for (std::size_t v = 0; v < k && !uses_eliminated; ++v)
            uses_eliminated = g.has_variable(v);
        if (!uses_eliminated)
            gens.push_back(g.reindexed(kept_ctx, var_map));
    }
    return Ideal(kept_ctx, ideal.field(), std::move(gens));
}

bool contains_radical(const Ideal& ideal, const Polynomial& p,
                      const GbLimits& limits) {
    if (p.context() != ideal.context())
        throw ContextMismatchError("membership test across contexts");
    if (p.is_zero())
        return true;
    const VariableContext& ctx = ideal.context();
    std::vector<std::string> names = ctx.names();
    names.push_back(fresh_names("y", 1, names)[0]);
    VariableContext ext(std::move(names));
    std::vector<std::size_t> var_map(ctx.size());
    for (std::size_t v = 0; v < ctx.size(); ++v)
        var_map[v] = v;

    std::vector<Polynomial> gens;
    for (const auto& g : ideal.generators())
        gens.push_back(g.reindexed(ext, var_map));
    FieldSpec field = ideal.field();
    Polynomial y = Polynomial::variable(ext, field, ext.size() - 1);
    Polynomial one = Polynomial::constant(ext, FieldElement::one(field));
    gens.push_back(one - y * p.lifted_to_field(field).reindexed(ext, var_map));
    return Ideal(ext, field, std::move(gens)).is_trivial(limits);
}

} // namespace realdescent

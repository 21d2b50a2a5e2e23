#include "realdescent/polynomial.hpp"

#include <algorithm>
#include <map>

namespace realdescent {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

// Canonical storage comparator: descending grevlex.
struct GrevlexGreater {
    bool operator()(const Monomial& x, const Monomial& y) const {
        return kGrevlex.greater(x, y);
    }
};

int coefficient_sign(const FieldElement& c) {
    if (c.a() != 0)
        return sgn(c.a());
    return sgn(c.b());
}

} // namespace

Polynomial Polynomial::constant(VariableContext ctx, FieldElement value) {
    Polynomial p(std::move(ctx), value.spec());
    if (!value.is_zero())
        p.terms_.push_back(Term{Monomial(p.ctx_.size()), std::move(value)});
    return p;
}

Polynomial Polynomial::variable(VariableContext ctx, FieldSpec field,
                                std::size_t index) {
    if (index >= ctx.size())
        throw Error("variable index out of range");
    std::vector<std::uint32_t> e(ctx.size(), 0);
    e[index] = 1;
    Polynomial p(std::move(ctx), field);
    p.terms_.push_back(Term{Monomial(std::move(e)), FieldElement::one(field)});
    return p;
}

Polynomial Polynomial::monomial(VariableContext ctx, Monomial mono,
                                FieldElement coeff) {
    if (mono.size() != ctx.size())
        throw ContextMismatchError("monomial arity does not match context");
    Polynomial p(std::move(ctx), coeff.spec());
    if (!coeff.is_zero())
        p.terms_.push_back(Term{std::move(mono), std::move(coeff)});
    return p;
}

Polynomial Polynomial::from_terms(VariableContext ctx, FieldSpec field,
                                  std::vector<Term> terms) {
    for (const auto& t : terms) {
        if (t.mono.size() != ctx.size())
            throw ContextMismatchError("term arity does not match context");
        if (t.coeff.spec() != field)
            throw FieldMismatchError("term coefficient in " +
                                     t.coeff.spec().to_string() +
                                     " for a polynomial over " +
                                     field.to_string());
    }
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        return kGrevlex.greater(x.mono, y.mono);
    });
    Polynomial p(std::move(ctx), field);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
            p.terms_.back().coeff += t.coeff;
        else
            p.terms_.push_back(std::move(t));
        if (!p.terms_.empty() && p.terms_.back().coeff.is_zero())
            p.terms_.pop_back();
    }
    return p;
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::has_variable(std::size_t index) const {
    for (const auto& t : terms_)
        if (t.mono.exponent(index) != 0)
            return true;
    return false;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty())
        throw Error("leading term of the zero polynomial");
    if (order == kGrevlex)
        return terms_.front();
    const Term* best = &terms_.front();
    for (const auto& t : terms_)
        if (order.greater(t.mono, best->mono))
            best = &t;
    return *best;
}

FieldElement Polynomial::coefficient(const Monomial& mono) const {
    for (const auto& t : terms_)
        if (t.mono == mono)
            return t.coeff;
    return FieldElement::zero(field_);
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (ctx_ != o.ctx_)
        throw ContextMismatchError(
            "polynomials over different variable contexts");
    if (field_ != o.field_)
        throw FieldMismatchError("polynomials over different fields: " +
                                 field_.to_string() + " and " +
                                 o.field_.to_string());
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = kGrevlex.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            out.push_back(o.terms_[j++]);
        } else {
            FieldElement s = terms_[i].coeff + o.terms_[j].coeff;
            if (!s.is_zero())
                out.push_back(Term{terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        out.push_back(std::move(terms_[i]));
    for (; j < o.terms_.size(); ++j)
        out.push_back(o.terms_[j]);
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = kGrevlex.compare(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (c < 0) {
            out.push_back(Term{o.terms_[j].mono, -o.terms_[j].coeff});
            ++j;
        } else {
            FieldElement s = terms_[i].coeff - o.terms_[j].coeff;
            if (!s.is_zero())
                out.push_back(Term{terms_[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        out.push_back(std::move(terms_[i]));
    for (; j < o.terms_.size(); ++j) {
        out.push_back(Term{o.terms_[j].mono, -o.terms_[j].coeff});
    }
    terms_ = std::move(out);
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(ctx_, field_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        p.terms_.push_back(Term{t.mono, -t.coeff});
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    std::map<Monomial, FieldElement, GrevlexGreater> acc;
    for (const auto& s : terms_) {
        for (const auto& t : o.terms_) {
            Monomial m = s.mono.times(t.mono);
            FieldElement c = s.coeff * t.coeff;
            auto it = acc.find(m);
            if (it == acc.end()) {
                if (!c.is_zero())
                    acc.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero())
                    acc.erase(it);
            }
        }
    }
    Polynomial p(ctx_, field_);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
        p.terms_.push_back(Term{m, std::move(c)});
    return p;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    if (c.spec() != field_)
        throw FieldMismatchError("scalar field does not match polynomial");
    Polynomial p(ctx_, field_);
    if (c.is_zero())
        return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        p.terms_.push_back(Term{t.mono, t.coeff * c});
    return p;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
    Polynomial r = constant(ctx_, FieldElement::one(field_));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u)
            r = r * base;
        e >>= 1u;
        if (e)
            base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (ctx_ != o.ctx_ || field_ != o.field_ ||
        terms_.size() != o.terms_.size())
        return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (terms_[k].mono != o.terms_[k].mono ||
            terms_[k].coeff != o.terms_[k].coeff)
            return false;
    return true;
}

Polynomial Polynomial::conjugated() const {
    Polynomial p(ctx_, field_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        p.terms_.push_back(Term{t.mono, t.coeff.conj()});
    return p;
}

Polynomial Polynomial::trace() const {
    return *this + conjugated();
}

std::pair<Polynomial, Polynomial> Polynomial::trace_pair() const {
    if (!field_.is_quadratic())
        throw FieldMismatchError("trace pair requires a quadratic field");
    Polynomial rp = scaled(FieldElement::root(field_));
    return {trace(), rp.trace()};
}

bool Polynomial::is_conjugation_fixed() const {
    for (const auto& t : terms_)
        if (!t.coeff.is_fixed())
            return false;
    return true;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
    if (point.size() != ctx_.size())
        throw ContextMismatchError("evaluation point arity mismatch");
    FieldSpec common = field_;
    for (const auto& v : point)
        common = reconcile(common, v.spec());
    FieldElement acc = FieldElement::zero(common);
    for (const auto& t : terms_) {
        FieldElement v = t.coeff.lifted_to(common);
        for (std::size_t k = 0; k < point.size(); ++k) {
            std::uint32_t e = t.mono.exponent(k);
            if (e == 0)
                continue;
            FieldElement x = point[k].lifted_to(common);
            for (std::uint32_t j = 0; j < e; ++j)
                v *= x;
        }
        acc += v;
    }
    return acc;
}

Polynomial Polynomial::lifted_to_field(const FieldSpec& spec) const {
    if (spec == field_)
        return *this;
    Polynomial p(ctx_, spec);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        p.terms_.push_back(Term{t.mono, t.coeff.lifted_to(spec)});
    return p;
}

Polynomial Polynomial::narrowed_to_rationals() const {
    if (field_.is_rationals())
        return *this;
    Polynomial p(ctx_, FieldSpec::rationals());
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        if (!t.coeff.is_fixed())
            throw FieldMismatchError(
                "cannot narrow: coefficient not fixed by conjugation in " +
                to_string());
        p.terms_.push_back(
            Term{t.mono, FieldElement(t.coeff.a(), FieldSpec::rationals())});
    }
    return p;
}

Polynomial Polynomial::reindexed(VariableContext ctx,
                                 std::span<const std::size_t> var_map) const {
    if (var_map.size() != ctx_.size())
        throw ContextMismatchError("reindex map arity mismatch");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        std::vector<std::uint32_t> e(ctx.size(), 0);
        for (std::size_t k = 0; k < ctx_.size(); ++k) {
            std::uint32_t exp = t.mono.exponent(k);
            if (exp == 0)
                continue;
            if (var_map[k] == npos)
                throw ContextMismatchError("variable '" + ctx_.name(k) +
                                           "' occurs but has no image under "
                                           "reindexing");
            if (var_map[k] >= ctx.size())
                throw ContextMismatchError("reindex target out of range");
            e[var_map[k]] += exp;
        }
        out.push_back(Term{Monomial(std::move(e)), t.coeff});
    }
    return from_terms(std::move(ctx), field_, std::move(out));
}

Polynomial Polynomial::content_normalized() const {
    if (terms_.empty())
        return *this;
    mpz_class den_lcm(1);
    for (const auto& t : terms_) {
        if (t.coeff.a() != 0)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    t.coeff.a().get_den().get_mpz_t());
        if (t.coeff.b() != 0)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                    t.coeff.b().get_den().get_mpz_t());
    }
    mpz_class num_gcd(0);
    auto fold = [&](const Rational& q) {
        if (q == 0)
            return;
        mpz_class scaled = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                scaled.get_mpz_t());
    };
    for (const auto& t : terms_) {
        fold(t.coeff.a());
        fold(t.coeff.b());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (coefficient_sign(terms_.front().coeff) < 0)
        scale = -scale;
    return scaled(FieldElement(scale, field_));
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (terms_.empty())
        return *this;
    return scaled(leading_term(order).coeff.inverse());
}

std::size_t Polynomial::max_coefficient_bits() const {
    std::size_t bits = 0;
    for (const auto& t : terms_)
        bits = std::max(bits, bit_size(t.coeff));
    return bits;
}

namespace {

std::string coeff_string(const FieldElement& c, const FieldSpec& field) {
    // Precondition: the sign has been factored out, so a > 0 or
    // (a = 0 and b > 0).
    const std::string sym = field.symbol();
    if (c.b() == 0)
        return to_string(c.a());
    if (c.a() == 0) {
        if (c.b() == 1)
            return sym;
        return to_string(c.b()) + "*" + sym;
    }
    std::string inner = to_string(c.a());
    inner += sgn(c.b()) < 0 ? " - " : " + ";
    Rational babs = abs(c.b());
    if (babs == 1)
        inner += sym;
    else
        inner += to_string(babs) + "*" + sym;
    return "(" + inner + ")";
}

} // namespace

std::string Polynomial::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (std::size_t idx = 0; idx < terms_.size(); ++idx) {
        const Term& t = terms_[idx];
        bool neg = coefficient_sign(t.coeff) < 0;
        FieldElement mag = neg ? -t.coeff : t.coeff;
        std::string piece;
        if (t.mono.is_constant()) {
            piece = coeff_string(mag, field_);
        } else {
            std::vector<std::string> parts;
            if (!mag.is_one())
                parts.push_back(coeff_string(mag, field_));
            for (std::size_t k = 0; k < ctx_.size(); ++k) {
                std::uint32_t e = t.mono.exponent(k);
                if (e == 0)
                    continue;
                std::string v = ctx_.name(k);
                if (e > 1)
                    v += "^" + std::to_string(e);
                parts.push_back(std::move(v));
            }
            for (std::size_t k = 0; k < parts.size(); ++k) {
                if (k)
                    piece += "*";
                piece += parts[k];
            }
        }
        if (idx == 0)
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
    }
    return out;
}

PolyMap::PolyMap(VariableContext source, VariableContext target,
                 std::vector<Polynomial> components)
    : source_(std::move(source)),
      target_(std::move(target)),
      field_(FieldSpec::rationals()),
      components_(std::move(components)) {
    if (components_.size() != target_.size())
        throw ContextMismatchError(
            "polynomial map needs one component per target variable");
    FieldSpec common = FieldSpec::rationals();
    for (const auto& c : components_) {
        if (c.context() != source_)
            throw ContextMismatchError(
                "map component not over the source context");
        common = reconcile(common, c.field());
    }
    field_ = common;
    for (auto& c : components_)
        c = c.lifted_to_field(common);
}

PolyMap PolyMap::identity(const VariableContext& ctx, FieldSpec field) {
    std::vector<Polynomial> comps;
    comps.reserve(ctx.size());
    for (std::size_t k = 0; k < ctx.size(); ++k)
        comps.push_back(Polynomial::variable(ctx, field, k));
    return PolyMap(ctx, ctx, std::move(comps));
}

PolyMap PolyMap::conjugated() const {
    std::vector<Polynomial> comps;
    comps.reserve(components_.size());
    for (const auto& c : components_)
        comps.push_back(c.conjugated());
    return PolyMap(source_, target_, std::move(comps));
}

std::vector<FieldElement> PolyMap::evaluate(
    std::span<const FieldElement> point) const {
    std::vector<FieldElement> out;
    out.reserve(components_.size());
    for (const auto& c : components_)
        out.push_back(c.evaluate(point));
    return out;
}

bool PolyMap::operator==(const PolyMap& o) const {
    return source_ == o.source_ && target_ == o.target_ &&
           components_ == o.components_;
}

Polynomial compose(const Polynomial& p, const PolyMap& f) {
    if (p.context() != f.target())
        throw ContextMismatchError(
            "substitution requires the polynomial to live over the map's "
            "target context");
    FieldSpec common = reconcile(p.field(), f.field());
    const VariableContext& src = f.source();
    // Memoized powers of each component, lifted to the common field.
    std::vector<std::vector<Polynomial>> powers(f.size());
    auto power = [&](std::size_t k, std::uint32_t e) -> const Polynomial& {
        auto& pw = powers[k];
        if (pw.empty()) {
            pw.push_back(
                Polynomial::constant(src, FieldElement::one(common)));
            pw.push_back(f.component(k).lifted_to_field(common));
        }
        while (pw.size() <= e)
            pw.push_back(pw.back() * pw[1]);
        return pw[e];
    };
    Polynomial result = Polynomial::zero(src, common);
    for (const auto& t : p.terms()) {
        Polynomial acc =
            Polynomial::constant(src, t.coeff.lifted_to(common));
        for (std::size_t k = 0; k < f.size(); ++k) {
            std::uint32_t e = t.mono.exponent(k);
            if (e)
                acc = acc * power(k, e);
        }
        result += acc;
    }
    return result;
}

PolyMap compose(const PolyMap& g, const PolyMap& f) {
    if (g.source() != f.target())
        throw ContextMismatchError("map composition domain mismatch");
    std::vector<Polynomial> comps;
    comps.reserve(g.size());
    for (std::size_t k = 0; k < g.size(); ++k)
        comps.push_back(compose(g.component(k), f));
    return PolyMap(f.source(), g.target(), std::move(comps));
}

} // namespace realdescent

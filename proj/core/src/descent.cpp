#include "realdescent/descent.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace realdescent {

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

// Membership test honoring the --radical upgrade.
bool member(const Ideal& ideal, const Polynomial& p,
            const DescentOptions& opt) {
    if (opt.radical)
        return contains_radical(ideal, p, opt.limits);
    return ideal.contains(p, kGrevlex, opt.limits);
}

void push_unique(std::vector<Polynomial>& out, Polynomial p) {
    if (p.is_zero())
        return;
    Polynomial n = p.content_normalized();
    for (const auto& g : out)
        if (g == n)
            return;
    out.push_back(std::move(n));
}

// Doubled context (x_1..x_n, z_1..z_n) for the graph of F.
VariableContext doubled_context(const VariableContext& vars) {
    std::vector<std::string> names = vars.names();
    for (auto& z : fresh_names("z", vars.size(), names))
        names.push_back(std::move(z));
    return VariableContext(std::move(names));
}

std::vector<std::size_t> identity_embedding(std::size_t n) {
    std::vector<std::size_t> map(n);
    for (std::size_t k = 0; k < n; ++k)
        map[k] = k;
    return map;
}

const PolyMap& require_symmetry(const DescentProblem& problem) {
    if (!problem.has_symmetry())
        throw SymmetryError(
            "the problem has no symmetry section; the descent pipeline "
            "requires the holomorphic companion F");
    return problem.symmetry();
}

void refuse_self_conjugate(const DescentProblem& problem) {
    const Ideal& ideal = problem.ideal();
    if (ideal_equals(ideal, ideal.conjugated(), kGrevlex,
                     problem.options().limits))
        throw Error("the ideal is self-conjugate; this operation only "
                    "applies to the generic descent branch");
}

bool is_self_conjugate(const DescentProblem& problem) {
    const Ideal& ideal = problem.ideal();
    return ideal_equals(ideal, ideal.conjugated(), kGrevlex,
                        problem.options().limits);
}

} // namespace

DescentProblem::DescentProblem(FieldSpec field, VariableContext vars,
                               std::vector<Polynomial> generators,
                               std::optional<PolyMap> symmetry,
                               DescentOptions options)
    : field_(field),
      vars_(std::move(vars)),
      generators_(std::move(generators)),
      symmetry_(std::move(symmetry)),
      options_(std::move(options)),
      ideal_(vars_, field_, {}) {
    if (generators_.empty())
        throw Error("ideal must have at least one generator");
    for (auto& g : generators_) {
        if (g.context() != vars_)
            throw ContextMismatchError(
                "generator over a different variable context");
        g = g.lifted_to_field(field_);
    }
    if (symmetry_) {
        if (symmetry_->source() != vars_ || symmetry_->target() != vars_)
            throw ContextMismatchError(
                "symmetry map must act on the declared variables");
        if (symmetry_->size() != vars_.size())
            throw Error("symmetry map needs exactly one component per "
                        "variable");
        std::vector<Polynomial> lifted;
        lifted.reserve(symmetry_->size());
        for (const auto& c : symmetry_->components())
            lifted.push_back(c.lifted_to_field(field_));
        symmetry_ = PolyMap(vars_, vars_, std::move(lifted));
    }
    ideal_ = Ideal(vars_, field_, generators_);
}

const PolyMap& DescentProblem::symmetry() const {
    if (!symmetry_)
        throw Error("problem has no symmetry map");
    return *symmetry_;
}

bool all_pass(std::span<const Certificate> certs) {
    for (const auto& c : certs)
        if (!c.pass)
            return false;
    return true;
}

std::vector<Certificate> validate_symmetry(const DescentProblem& problem) {
    const PolyMap& F = require_symmetry(problem);
    const Ideal& ideal = problem.ideal();
    const DescentOptions& opt = problem.options();

    Certificate a{"symmetry_maps_into_conjugate", true, ""};
    for (std::size_t j = 0; j < problem.s(); ++j) {
        Polynomial q = compose(problem.generators()[j].conjugated(), F);
        if (!member(ideal, q, opt)) {
            a.pass = false;
            a.witness = "generator " + std::to_string(j + 1) + ": " +
                        q.to_string() + " is not in I(X)";
            break;
        }
    }

    Certificate b{"cocycle_identity", true, ""};
    PolyMap round_trip = compose(F.conjugated(), F);
    for (std::size_t k = 0; k < problem.n(); ++k) {
        Polynomial diff =
            round_trip.component(k) -
            Polynomial::variable(problem.variables(), round_trip.field(), k);
        if (!member(ideal, diff, opt)) {
            b.pass = false;
            b.witness = "component " + std::to_string(k + 1) + ": " +
                        diff.to_string() + " is not in I(X)";
            break;
        }
    }
    return {std::move(a), std::move(b)};
}

std::optional<DescentReport> self_conjugate_branch(
    const DescentProblem& problem) {
    if (!is_self_conjugate(problem))
        return std::nullopt;

    const FieldSpec& field = problem.field();
    DescentReport report;
    report.branch = Branch::SelfConjugate;
    report.field = field;
    report.z_context = problem.variables();
    report.w_status = WStatus{WKind::NotComputed, {}};
    report.r_is_isomorphism = true;
    report.notes.push_back(
        "the ideal is fixed by conjugation: Z = X and R is the identity");

    std::vector<Polynomial> traced;
    if (field.is_rationals()) {
        for (const auto& p : problem.generators())
            push_unique(traced, p);
    } else {
        for (const auto& p : problem.generators()) {
            auto [tr, tr_root] = p.trace_pair();
            push_unique(traced, tr);
            push_unique(traced, tr_root);
        }
    }

    Certificate fixed{"z_coefficients_fixed", true, ""};
    for (const auto& g : traced) {
        if (!g.is_conjugation_fixed()) {
            fixed.pass = false;
            fixed.witness = g.to_string();
            break;
        }
    }

    const DescentOptions& opt = problem.options();
    Certificate same{"z_generates_same_ideal", true, ""};
    if (opt.verify) {
        Ideal traced_ideal(problem.variables(), field, traced);
        for (const auto& g : traced) {
            if (!member(problem.ideal(), g, opt)) {
                same.pass = false;
                same.witness = g.to_string() + " is not in I(X)";
                break;
            }
        }
        if (same.pass) {
            for (const auto& p : problem.generators()) {
                if (!member(traced_ideal, p, opt)) {
                    same.pass = false;
                    same.witness =
                        p.to_string() + " is not generated by the traces";
                    break;
                }
            }
        }
        report.certificates.push_back(std::move(fixed));
        report.certificates.push_back(std::move(same));
    }

    report.z_generators.reserve(traced.size());
    for (const auto& g : traced)
        report.z_generators.push_back(g.narrowed_to_rationals());
    return report;
}

Ideal graph_ideal(const DescentProblem& problem) {
    const PolyMap& F = require_symmetry(problem);
    const FieldSpec& field = problem.field();
    const std::size_t n = problem.n();
    VariableContext xz = doubled_context(problem.variables());
    std::vector<std::size_t> embed = identity_embedding(n);

    std::vector<Polynomial> gens;
    gens.reserve(n + problem.s());
    for (std::size_t j = 0; j < n; ++j) {
        Polynomial zj = Polynomial::variable(xz, field, n + j);
        gens.push_back(zj - F.component(j).reindexed(xz, embed));
    }
    for (const auto& p : problem.generators())
        gens.push_back(p.reindexed(xz, embed));
    return Ideal(std::move(xz), field, std::move(gens));
}

PolyMap invariant_map(const VariableContext& xz_ctx, FieldSpec field) {
    if (xz_ctx.size() % 2 != 0)
        throw Error("invariant map requires a doubled (x, z) context");
    const std::size_t n = xz_ctx.size() / 2;
    if (n < 1)
        throw Error("invariant map requires n >= 1");
    VariableContext t_ctx(fresh_names("t", 3 * n - 1, xz_ctx.names()));

    auto x = [&](std::size_t k) {
        return Polynomial::variable(xz_ctx, field, k);
    };
    auto z = [&](std::size_t k) {
        return Polynomial::variable(xz_ctx, field, n + k);
    };
    std::vector<Polynomial> comps;
    comps.reserve(3 * n - 1);
    for (std::size_t k = 0; k < n; ++k)
        comps.push_back(x(k) + z(k));
    for (std::size_t k = 0; k < n; ++k)
        comps.push_back(x(k) * z(k));
    for (std::size_t k = 1; k < n; ++k)
        comps.push_back(x(0) * x(k) + z(0) * z(k));
    return PolyMap(xz_ctx, std::move(t_ctx), std::move(comps));
}

PolyMap invariant_map(std::size_t n) {
    if (n < 1)
        throw Error("invariant map requires n >= 1");
    std::vector<std::string> names = fresh_names("x", n, {});
    for (auto& z : fresh_names("z", n, names))
        names.push_back(std::move(z));
    return invariant_map(VariableContext(std::move(names)),
                         FieldSpec::rationals());
}

PolyMap descent_map(const DescentProblem& problem) {
    const PolyMap& F = require_symmetry(problem);
    const FieldSpec& field = problem.field();
    const std::size_t n = problem.n();
    VariableContext xz = doubled_context(problem.variables());
    PolyMap psi = invariant_map(xz, field);

    // Substitution (x, z) := (x, F(x)).
    std::vector<Polynomial> sub_comps;
    sub_comps.reserve(2 * n);
    for (std::size_t k = 0; k < n; ++k)
        sub_comps.push_back(
            Polynomial::variable(problem.variables(), field, k));
    for (std::size_t k = 0; k < n; ++k)
        sub_comps.push_back(F.component(k));
    PolyMap sub(problem.variables(), xz, std::move(sub_comps));

    std::vector<Polynomial> r_comps;
    r_comps.reserve(psi.size());
    for (std::size_t k = 0; k < psi.size(); ++k)
        r_comps.push_back(compose(psi.component(k), sub));
    return PolyMap(problem.variables(), psi.target(), std::move(r_comps));
}

Ideal compute_Z(const DescentProblem& problem) {
    require_symmetry(problem);
    refuse_self_conjugate(problem);
    const FieldSpec& field = problem.field();
    const std::size_t n = problem.n();
    PolyMap r_map = descent_map(problem);
    const std::size_t t_count = r_map.size();

    std::vector<std::string> names = problem.variables().names();
    for (const auto& t : r_map.target().names())
        names.push_back(t);
    VariableContext xt(std::move(names));
    std::vector<std::size_t> embed = identity_embedding(n);

    std::vector<Polynomial> gens;
    gens.reserve(t_count + problem.s());
    for (std::size_t k = 0; k < t_count; ++k) {
        Polynomial tk = Polynomial::variable(xt, field, n + k);
        gens.push_back(tk - r_map.component(k).reindexed(xt, embed));
    }
    for (const auto& p : problem.generators())
        gens.push_back(p.reindexed(xt, embed));
    return eliminate(Ideal(std::move(xt), field, std::move(gens)), n,
                     problem.options().limits);
}

Ideal symmetrize_Z(const Ideal& z_ideal, const GbLimits& limits) {
    const VariableContext& ctx = z_ideal.context();
    const FieldSpec& field = z_ideal.field();

    bool all_fixed = true;
    for (const auto& g : z_ideal.generators())
        if (!g.is_conjugation_fixed()) {
            all_fixed = false;
            break;
        }

    std::vector<Polynomial> traced;
    if (field.is_rationals() || all_fixed) {
        for (const auto& g : z_ideal.generators())
            push_unique(traced, g);
    } else {
        // Precondition: the ideal is conjugation-invariant.
        if (!ideal_equals(z_ideal, z_ideal.conjugated(), kGrevlex, limits)) {
            for (const auto& g : z_ideal.generators())
                if (!z_ideal.contains(g.conjugated(), kGrevlex, limits))
                    throw SymmetryError(
                        "ideal is not conjugation-invariant: the conjugate "
                        "of " +
                        g.to_string() + " lies outside the ideal");
            throw SymmetryError("ideal is not conjugation-invariant");
        }
        for (const auto& g : z_ideal.generators()) {
            if (g.is_conjugation_fixed()) {
                push_unique(traced, g);
                continue;
            }
            auto [tr, tr_root] = g.trace_pair();
            push_unique(traced, tr);
            push_unique(traced, tr_root);
        }
        // Two-way containment: the traces generate the same ideal.
        Ideal traced_ideal(ctx, field, traced);
        for (const auto& g : traced)
            if (!z_ideal.contains(g, kGrevlex, limits))
                throw Error("trace symmetrization enlarged the ideal at " +
                            g.to_string());
        for (const auto& g : z_ideal.generators())
            if (!traced_ideal.contains(g, kGrevlex, limits))
                throw Error("trace symmetrization lost the generator " +
                            g.to_string());
    }

    std::vector<Polynomial> rational_gens;
    rational_gens.reserve(traced.size());
    for (const auto& g : traced)
        rational_gens.push_back(g.narrowed_to_rationals());
    return Ideal(ctx, FieldSpec::rationals(), std::move(rational_gens));
}

WStatus compute_W(const DescentProblem& problem) {
    require_symmetry(problem);
    refuse_self_conjugate(problem);
    const FieldSpec& field = problem.field();
    const std::size_t n = problem.n();
    const GbLimits& limits = problem.options().limits;

    Ideal graph = graph_ideal(problem);
    const VariableContext& xz = graph.context();

    std::vector<Polynomial> swap_comps;
    swap_comps.reserve(2 * n);
    for (std::size_t k = 0; k < n; ++k)
        swap_comps.push_back(Polynomial::variable(xz, field, n + k));
    for (std::size_t k = 0; k < n; ++k)
        swap_comps.push_back(Polynomial::variable(xz, field, k));
    PolyMap swap_map(xz, xz, std::move(swap_comps));

    std::vector<Polynomial> swapped;
    swapped.reserve(graph.generators().size());
    for (const auto& g : graph.generators())
        swapped.push_back(compose(g, swap_map));
    Ideal w_star = ideal_sum(graph, Ideal(xz, field, std::move(swapped)));

    if (w_star.is_trivial(limits))
        return WStatus{WKind::Empty, {}};

    // W = Psi(W*): eliminate (x, z) from <t_k - psi_k> + W*.
    PolyMap psi = invariant_map(xz, field);
    std::vector<std::string> names = xz.names();
    for (const auto& t : psi.target().names())
        names.push_back(t);
    VariableContext xzt(std::move(names));
    std::vector<std::size_t> embed = identity_embedding(2 * n);

    std::vector<Polynomial> gens;
    for (std::size_t k = 0; k < psi.size(); ++k) {
        Polynomial tk = Polynomial::variable(xzt, field, 2 * n + k);
        gens.push_back(tk - psi.component(k).reindexed(xzt, embed));
    }
    for (const auto& g : w_star.generators())
        gens.push_back(g.reindexed(xzt, embed));

    Ideal w_t = eliminate(Ideal(std::move(xzt), field, std::move(gens)),
                          2 * n, limits);
    Ideal w_q = symmetrize_Z(w_t, limits);

    auto gb = w_q.groebner(problem.options().order, limits);
    std::vector<Polynomial> out;
    out.reserve(gb->size());
    for (const auto& g : *gb)
        out.push_back(g.content_normalized());
    return WStatus{WKind::NonEmpty, std::move(out)};
}

namespace {

const char* w_kind_label(WKind kind) {
    switch (kind) {
    case WKind::Empty:
        return "Empty";
    case WKind::NonEmpty:
        return "NonEmpty";
    case WKind::NotComputed:
        return "NotComputed";
    }
    return "";
}

// Deterministic ambient separation samples: random rational points with
// x_1 != z_1, whose fibers must be exactly {p, swap(p)}.
Certificate separation_samples(const DescentProblem& problem) {
    Certificate cert{"w_status_consistent", true, ""};
    const std::size_t n = problem.n();
    const FieldSpec& field = problem.field();
    std::mt19937_64 rng(0x1d5eedULL);
    std::uniform_int_distribution<long> dist(-9, 9);

    for (int round = 0; round < 25; ++round) {
        std::vector<FieldElement> point;
        point.reserve(2 * n);
        for (std::size_t k = 0; k < 2 * n; ++k)
            point.emplace_back(make_rational(dist(rng)), field);
        while (point[n] == point[0])
            point[n] = FieldElement(make_rational(dist(rng)), field);

        std::vector<FieldElement> t;
        t.reserve(3 * n - 1);
        for (std::size_t k = 0; k < n; ++k)
            t.push_back(point[k] + point[n + k]);
        for (std::size_t k = 0; k < n; ++k)
            t.push_back(point[k] * point[n + k]);
        for (std::size_t k = 1; k < n; ++k)
            t.push_back(point[0] * point[k] + point[n] * point[n + k]);

        FiberResult fr = fiber(t, n, field);
        std::vector<FieldElement> swapped(point.begin() + n, point.end());
        swapped.insert(swapped.end(), point.begin(), point.begin() + n);

        bool ok = fr.k_rational && fr.points.size() == 2;
        if (ok) {
            bool has_p = false, has_swap = false;
            for (const auto& q : fr.points) {
                if (q == point)
                    has_p = true;
                if (q == swapped)
                    has_swap = true;
            }
            ok = has_p && has_swap;
        }
        if (!ok) {
            cert.pass = false;
            cert.witness =
                "separation sample " + std::to_string(round + 1) +
                " failed: the fiber is not {p, swap(p)}";
            break;
        }
    }
    return cert;
}

Certificate w_consistency_evidence(const DescentProblem& problem,
                                   const DescentReport& report) {
    const DescentOptions& opt = problem.options();
    switch (report.w_status.kind) {
    case WKind::Empty:
        return separation_samples(problem);
    case WKind::NonEmpty: {
        Certificate cert{"w_status_consistent", true, ""};
        // W is contained in Z: every Z generator vanishes on W.
        Ideal w_ideal(report.z_context, FieldSpec::rationals(),
                      report.w_status.generators);
        for (const auto& g : report.z_generators) {
            if (!contains_radical(w_ideal, g, opt.limits)) {
                cert.pass = false;
                cert.witness = "Z generator " + g.to_string() +
                               " does not vanish on W";
                break;
            }
        }
        return cert;
    }
    case WKind::NotComputed:
    default:
        return Certificate{"w_status_consistent", false,
                           "W was not computed for a generic-descent run"};
    }
}

std::vector<Certificate> generic_core_certs(const DescentProblem& problem,
                                            const DescentReport& report,
                                            const Ideal& z_over_k,
                                            const Ideal& z_over_q) {
    const DescentOptions& opt = problem.options();
    std::vector<Certificate> certs;

    Certificate inv{"z_conjugation_invariant", true, ""};
    if (!ideal_equals(z_over_k, z_over_k.conjugated(), kGrevlex,
                      opt.limits)) {
        inv.pass = false;
        inv.witness = "the elimination ideal is not fixed by conjugation";
    }
    certs.push_back(std::move(inv));

    Certificate pull{"z_pullback_in_ideal", true, ""};
    PolyMap r_map = descent_map(problem);
    for (const auto& g : report.z_generators) {
        if (g.context() != r_map.target())
            throw ContextMismatchError(
                "report Z generators are not over the t-variables");
        Polynomial pulled = compose(g, r_map);
        if (!member(problem.ideal(), pulled, opt)) {
            pull.pass = false;
            pull.witness = "pullback of " + g.to_string() + " is " +
                           pulled.to_string() + ", not in I(X)";
            break;
        }
    }
    certs.push_back(std::move(pull));

    Certificate fixed{"z_coefficients_fixed", true, ""};
    for (const auto& g : report.z_generators) {
        if (!g.is_conjugation_fixed()) {
            fixed.pass = false;
            fixed.witness = g.to_string();
            break;
        }
    }
    certs.push_back(std::move(fixed));

    Certificate match{"z_matches_computation", true, ""};
    Ideal reported(report.z_context, FieldSpec::rationals(),
                   report.z_generators);
    if (!ideal_equals(z_over_q, reported, kGrevlex, opt.limits)) {
        match.pass = false;
        match.witness = "the reported Z generators do not generate the "
                        "computed elimination ideal";
    }
    certs.push_back(std::move(match));
    return certs;
}

} // namespace

std::vector<Certificate> verify_descent(const DescentProblem& problem,
                                        const DescentReport& report) {
    if (report.branch != Branch::GenericDescent)
        throw Error("verify_descent applies to generic-descent reports");
    Ideal z_over_k = compute_Z(problem);
    Ideal z_over_q = symmetrize_Z(z_over_k, problem.options().limits);
    std::vector<Certificate> certs =
        generic_core_certs(problem, report, z_over_k, z_over_q);

    WStatus recomputed = compute_W(problem);
    if (recomputed.kind != report.w_status.kind) {
        certs.push_back(Certificate{
            "w_status_consistent", false,
            std::string("recomputed W status (") +
                w_kind_label(recomputed.kind) + ") differs from the report (" +
                w_kind_label(report.w_status.kind) + ")"});
    } else {
        certs.push_back(w_consistency_evidence(problem, report));
    }
    return certs;
}

FiberResult fiber(std::span<const FieldElement> t_point, std::size_t n,
                  FieldSpec field) {
    if (n < 1 || t_point.size() != 3 * n - 1)
        throw Error("fiber expects a point of length 3n-1");
    for (const auto& v : t_point)
        if (v.spec() != field)
            throw FieldMismatchError("fiber point component outside the "
                                     "declared field");

    FieldElement half(Rational(1, 2), field);
    // Roots of lambda^2 - t_k lambda + t_{n+k} per coordinate.
    std::vector<std::pair<FieldElement, FieldElement>> roots;
    roots.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        FieldElement disc =
            t_point[k] * t_point[k] -
            FieldElement(Rational(4), field) * t_point[n + k];
        auto r = disc.sqrt();
        if (!r)
            return FiberResult{false, {}};
        FieldElement alpha = (t_point[k] + *r) * half;
        FieldElement beta = (t_point[k] - *r) * half;
        roots.emplace_back(std::move(alpha), std::move(beta));
    }

    // Candidate points (x, z); coordinate 0 seeds both orders, later
    // coordinates are paired via the cross terms x_1 x_k + z_1 z_k.
    using Point = std::vector<FieldElement>;
    auto make_seed = [&](const FieldElement& x0, const FieldElement& z0) {
        Point p(2 * n, FieldElement::zero(field));
        p[0] = x0;
        p[n] = z0;
        return p;
    };
    std::vector<Point> candidates;
    candidates.push_back(make_seed(roots[0].first, roots[0].second));
    if (roots[0].first != roots[0].second)
        candidates.push_back(make_seed(roots[0].second, roots[0].first));

    for (std::size_t k = 1; k < n; ++k) {
        const FieldElement& cross = t_point[2 * n + k - 1];
        std::vector<Point> next;
        for (const auto& cand : candidates) {
            auto try_assign = [&](const FieldElement& xk,
                                  const FieldElement& zk) {
                if (cand[0] * xk + cand[n] * zk != cross)
                    return;
                Point ext = cand;
                ext[k] = xk;
                ext[n + k] = zk;
                for (const auto& seen : next)
                    if (seen == ext)
                        return;
                next.push_back(std::move(ext));
            };
            try_assign(roots[k].first, roots[k].second);
            if (roots[k].first != roots[k].second)
                try_assign(roots[k].second, roots[k].first);
        }
        candidates = std::move(next);
        if (candidates.empty())
            return FiberResult{true, {}};
    }

    // Exact confirmation: Psi(candidate) = t.
    std::vector<Point> points;
    for (const auto& cand : candidates) {
        bool ok = true;
        for (std::size_t k = 0; k < n && ok; ++k)
            ok = cand[k] + cand[n + k] == t_point[k];
        for (std::size_t k = 0; k < n && ok; ++k)
            ok = cand[k] * cand[n + k] == t_point[n + k];
        for (std::size_t k = 1; k < n && ok; ++k)
            ok = cand[0] * cand[k] + cand[n] * cand[n + k] ==
                 t_point[2 * n + k - 1];
        if (ok)
            points.push_back(cand);
    }
    return FiberResult{true, std::move(points)};
}

FiberResult fiber(std::span<const FieldElement> t_point,
                  const DescentProblem& problem) {
    FiberResult ambient = fiber(t_point, problem.n(), problem.field());
    if (!ambient.k_rational)
        return ambient;
    Ideal graph = graph_ideal(problem);
    std::vector<std::vector<FieldElement>> on_graph;
    for (const auto& p : ambient.points) {
        bool member = true;
        for (const auto& g : graph.generators())
            if (!g.evaluate(p).is_zero()) {
                member = false;
                break;
            }
        if (member)
            on_graph.push_back(p);
    }
    return FiberResult{true, std::move(on_graph)};
}

Ideal project_Z(const Ideal& z_ideal, const std::vector<std::string>& keep,
                const GbLimits& limits) {
    const VariableContext& ctx = z_ideal.context();
    if (keep.empty())
        throw Error("projection keep-set must not be empty");
    std::vector<bool> kept(ctx.size(), false);
    for (const auto& name : keep) {
        auto idx = ctx.index_of(name);
        if (!idx)
            throw Error("unknown variable '" + name + "' in keep-set");
        kept[*idx] = true;
    }
    std::size_t kept_count = 0;
    for (bool b : kept)
        kept_count += b;
    if (kept_count == ctx.size())
        return z_ideal;

    // Permute dropped variables to the front, keeping relative order.
    std::vector<std::string> names;
    std::vector<std::size_t> var_map(ctx.size(), Polynomial::npos);
    for (std::size_t k = 0; k < ctx.size(); ++k)
        if (!kept[k]) {
            var_map[k] = names.size();
            names.push_back(ctx.name(k));
        }
    std::size_t dropped = names.size();
    for (std::size_t k = 0; k < ctx.size(); ++k)
        if (kept[k]) {
            var_map[k] = names.size();
            names.push_back(ctx.name(k));
        }
    VariableContext permuted(std::move(names));
    std::vector<Polynomial> gens;
    gens.reserve(z_ideal.generators().size());
    for (const auto& g : z_ideal.generators())
        gens.push_back(g.reindexed(permuted, var_map));
    return eliminate(Ideal(std::move(permuted), z_ideal.field(),
                           std::move(gens)),
                     dropped, limits);
}

DescentReport run_descent(const DescentProblem& problem,
                          StageTimings* timings) {
    using Clock = std::chrono::steady_clock;
    auto mark = Clock::now();
    auto record = [&](const char* stage) {
        auto now = Clock::now();
        if (timings)
            timings->emplace_back(
                stage,
                std::chrono::duration<double, std::milli>(now - mark)
                    .count());
        mark = now;
    };

    std::vector<Certificate> validation = validate_symmetry(problem);
    record("validate");
    if (!all_pass(validation)) {
        for (const auto& c : validation)
            if (!c.pass)
                throw SymmetryError("symmetry validation failed (" + c.name +
                                    "): " + c.witness);
    }

    std::optional<DescentReport> self_conj = self_conjugate_branch(problem);
    record("branch");
    if (self_conj) {
        DescentReport report = std::move(*self_conj);
        report.certificates.insert(report.certificates.begin(),
                                   validation.begin(), validation.end());
        report.notes.push_back(
            "finiteness of the automorphism group is assumed, not checked");
        return report;
    }

    DescentReport report;
    report.branch = Branch::GenericDescent;
    report.field = problem.field();

    Ideal z_over_k = compute_Z(problem);
    record("eliminate");
    Ideal z_over_q = symmetrize_Z(z_over_k, problem.options().limits);
    record("symmetrize");

    report.z_context = z_over_q.context();
    auto gb = z_over_q.groebner(problem.options().order,
                                problem.options().limits);
    report.z_generators.reserve(gb->size());
    for (const auto& g : *gb)
        report.z_generators.push_back(g.content_normalized());

    report.r_components = descent_map(problem).components();
    report.w_status = compute_W(problem);
    record("w_locus");
    report.r_is_isomorphism = report.w_status.kind == WKind::Empty;
    report.notes.push_back(
        "finiteness of the automorphism group is assumed, not checked");

    report.certificates = validation;
    if (problem.options().verify) {
        std::vector<Certificate> certs =
            generic_core_certs(problem, report, z_over_k, z_over_q);
        certs.push_back(w_consistency_evidence(problem, report));
        report.certificates.insert(report.certificates.end(), certs.begin(),
                                   certs.end());
        record("verify");
    }
    return report;
}

} // namespace realdescent

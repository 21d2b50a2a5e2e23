#pragma once

#include "realdescent/problem.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace realdescent {

enum class Branch { SelfConjugate, GenericDescent };

enum class WKind { Empty, NonEmpty, NotComputed };

struct WStatus {
    WKind kind = WKind::NotComputed;
    // Generators of W in the t-variables, over Q; only for NonEmpty.
    std::vector<Polynomial> generators;
};

struct Certificate {
    std::string name;
    bool pass = false;
    std::string witness; // empty when pass
};

bool all_pass(std::span<const Certificate> certs);

struct DescentReport {
    Branch branch = Branch::GenericDescent;
    FieldSpec field = FieldSpec::rationals();
    // t-variables for GenericDescent, the original x-variables for
    // SelfConjugate.
    VariableContext z_context;
    // Generators of Z over the real subfield Q (canonical reduced basis,
    // content-normalized).
    std::vector<Polynomial> z_generators;
    // The 3n-1 components of R in x; empty for SelfConjugate.
    std::vector<Polynomial> r_components;
    WStatus w_status;
    std::vector<Certificate> certificates;
    // True when W is empty (R is an isomorphism onto Z) and for the
    // self-conjugate branch (R is the identity).
    bool r_is_isomorphism = false;
    std::vector<std::string> notes;

    DescentReport() : z_context(std::vector<std::string>{"t1"}) {}
};

// Wall-clock milliseconds per pipeline stage, in execution order.
using StageTimings = std::vector<std::pair<std::string, double>>;

// Condition (a): F maps X into X^sigma (P_j^sigma ∘ F in I for all j).
// Condition (b): the Weil cocycle, F^sigma ∘ F = identity modulo I.
// Returns one certificate per condition with the first failing witness.
std::vector<Certificate> validate_symmetry(const DescentProblem& problem);

// If I(X) = I(X)^sigma the variety is already defined over the real
// subfield: emit trace generators and stop.  Returns nothing when the
// generic pipeline should run.
std::optional<DescentReport> self_conjugate_branch(
    const DescentProblem& problem);

// Ideal of the graph Phi(X) = {(x, F(x))} in variables (x_1..x_n, z_1..z_n).
Ideal graph_ideal(const DescentProblem& problem);

// The 3n-1 swap-invariant components
//   t_k = x_k + z_k, t_{n+k} = x_k z_k (1 <= k <= n),
//   t_{2n+k-1} = x_1 x_k + z_1 z_k (2 <= k <= n),
// as a map from the doubled context (x, z) to fresh t-variables.
PolyMap invariant_map(const VariableContext& xz_ctx, FieldSpec field);
// Convenience form over Q with default names x1..xn, z1..zn.
PolyMap invariant_map(std::size_t n);

// R = Psi ∘ Phi: the invariant components with z := F(x) substituted.
PolyMap descent_map(const DescentProblem& problem);

// Z = closure of R(X): eliminate x from <t_k - R_k(x)> + <P_j(x)>.
// Returns the ideal in the t-variables over K (not yet trace-symmetrized).
Ideal compute_Z(const DescentProblem& problem);

// Replace every generator that is not fixed by conjugation by its trace
// pair; requires Z^sigma = Z (checked).  The output is over Q and generates
// the same ideal (verified by two-way containment).
Ideal symmetrize_Z(const Ideal& z_ideal, const GbLimits& limits = {});

// W* = Phi(X) ∩ swap(Phi(X)); if trivial, W is empty, otherwise W = Psi(W*)
// is computed by elimination and symmetrized to Q.
WStatus compute_W(const DescentProblem& problem);

// Independent re-check of a completed generic report: Z conjugation
// invariance, pullback membership of every emitted generator, coefficient
// fixedness, W consistency, and agreement of the emitted Z with a fresh
// computation.
std::vector<Certificate> verify_descent(const DescentProblem& problem,
                                        const DescentReport& report);

struct FiberResult {
    // False when some discriminant has no square root in K; no points are
    // guessed in that case.
    bool k_rational = false;
    // Each point is (x_1..x_n, z_1..z_n).
    std::vector<std::vector<FieldElement>> points;
};

// Solve Psi(x, z) = t over K in the ambient space: per coordinate the roots
// of lambda^2 - t_k lambda + t_{n+k}, paired via the cross terms.
FiberResult fiber(std::span<const FieldElement> t_point, std::size_t n,
                  FieldSpec field);
// As above, then filtered by membership in Phi(X).
FiberResult fiber(std::span<const FieldElement> t_point,
                  const DescentProblem& problem);

// Eliminate the complementary t-variables from Z.  Birationality of the
// projection onto its image is NOT certified.  keep = all variables returns
// Z unchanged; keep must be nonempty and consist of context variables.
Ideal project_Z(const Ideal& z_ideal, const std::vector<std::string>& keep,
                const GbLimits& limits = {});

// Full pipeline: validate -> branch -> eliminate -> symmetrize -> W ->
// verify.  Throws SymmetryError when validation fails.  Stage timings are
// appended to *timings when provided.
DescentReport run_descent(const DescentProblem& problem,
                          StageTimings* timings = nullptr);

} // namespace realdescent

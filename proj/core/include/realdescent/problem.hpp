#pragma once

#include "realdescent/ideal.hpp"
#include "realdescent/polynomial.hpp"

#include <optional>
#include <vector>

namespace realdescent {

struct DescentOptions {
    // Order used for reported bases (grevlex or lex); elimination always
    // runs under the internal block orders.
    MonomialOrder order = MonomialOrder::grevlex();
    GbLimits limits;
    bool verify = true;
    // Upgrade membership certificates from ideal membership to radical
    // membership (Rabinowitsch).
    bool radical = false;
};

// Input data of a descent run: the variety generators P_1..P_s over
// K[x_1..x_n] and the holomorphic companion F of the symmetry L = J∘F.
class DescentProblem {
public:
    DescentProblem(FieldSpec field, VariableContext vars,
                   std::vector<Polynomial> generators,
                   std::optional<PolyMap> symmetry,
                   DescentOptions options = {});

    const FieldSpec& field() const { return field_; }
    const VariableContext& variables() const { return vars_; }
    std::size_t n() const { return vars_.size(); }
    std::size_t s() const { return generators_.size(); }
    const std::vector<Polynomial>& generators() const { return generators_; }

    bool has_symmetry() const { return symmetry_.has_value(); }
    const PolyMap& symmetry() const;

    const DescentOptions& options() const { return options_; }
    void set_options(DescentOptions options) { options_ = std::move(options); }

    // The ideal I(X) = <P_1..P_s>.
    const Ideal& ideal() const { return ideal_; }

private:
    FieldSpec field_;
    VariableContext vars_;
    std::vector<Polynomial> generators_;
    std::optional<PolyMap> symmetry_;
    DescentOptions options_;
    Ideal ideal_;
};

} // namespace realdescent

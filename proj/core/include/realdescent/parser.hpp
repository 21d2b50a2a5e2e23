#pragma once

#include "realdescent/problem.hpp"

#include <string>
#include <string_view>

namespace realdescent {

// Parse a full problem file (field/vars/ideal/symmetry/options sections).
// Throws ParseError with 1-based line and column on any syntax or semantic
// error.  The symmetry section is optional at this layer; commands that
// need it reject its absence.
DescentProblem parse_problem(std::string_view text);

// Parse a single polynomial expression over the given context and field.
Polynomial parse_poly(std::string_view text, const VariableContext& ctx,
                      const FieldSpec& field);

// Canonical textual form; parse_poly(print_poly(p)) == p.
inline std::string print_poly(const Polynomial& p) { return p.to_string(); }

} // namespace realdescent

#pragma once

// Text forms for patterns and constraints as accepted by the command line:
//   patterns     "132", "10,3,1,2", "id:4", "tl:4,2", "layered:4,2,1"
//   pattern sets the above plus "Lp:p" (every member of L_p)
//   constraints  "avoid:<pat>", "exactly:<r>:<pat>", "atleast:<r>:<pat>"

#include <string>
#include <string_view>
#include <vector>

#include "permcheb/permutation.hpp"

namespace permcheb {

/// Single pattern literal. Throws InvalidArgument on malformed text.
PatternSpec parse_pattern(std::string_view text);
/// Pattern or pattern-set literal; "Lp:p" expands to L_p.
std::vector<PatternSpec> parse_pattern_set(std::string_view text);
/// One constraint token; a bare pattern means avoidance.
ConstraintSet parse_constraint(std::string_view token);
/// Conjunction of constraint tokens.
ConstraintSet parse_constraints(const std::vector<std::string>& tokens);

}  // namespace permcheb

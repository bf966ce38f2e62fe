#pragma once

#include <string>
#include <utility>
#include <vector>

#include "casim/rule.hpp"

namespace casim {

// Elementary rule 110: 1D, binary, radius 1, neighborhood (-1, 0, +1),
// local map (1 - xyz) * max(y, z).
CARule rule110();

// Small fixtures used throughout the tests and handy on the command line.
CARule identity_rule();   // V = {0}, f = id, binary
CARule shift_rule();      // V = {+1}, f = id, binary
CARule not_rule();        // V = {0}, 0 <-> 1
CARule or_spread_rule();  // V = (-1,0,+1), max
CARule xor_rule();        // V = (-1,0,+1), sum mod 2

// The identity rule over an arbitrary alphabet.
CARule make_identity(std::vector<std::string> state_names);

// The named toy set, in a stable order.
std::vector<std::pair<std::string, CARule>> toy_rules();

// Registry names: rule110, identity, shift, not, or-spread, xor,
// signed-majority, zigzag:<inner-builtin>. Throws input_error for unknown
// names. File-based specs are resolved one level up, in textio.
bool is_builtin_rule_name(const std::string& name);
CARule builtin_rule(const std::string& name);
std::vector<std::string> builtin_rule_names();

}  // namespace casim

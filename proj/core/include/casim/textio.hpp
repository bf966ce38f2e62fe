#pragma once

#include <string>
#include <vector>

#include "casim/circuit.hpp"
#include "casim/config.hpp"
#include "casim/freezing.hpp"
#include "casim/report.hpp"
#include "casim/rule.hpp"
#include "casim/simulation.hpp"

namespace casim {

// Line-oriented UTF-8 text formats. Parse errors carry line and column.
// serialize(parse(x)) is the identity on canonical text, and
// parse(serialize(v)) == v for every value in range.

// Rule format:
//   dimension <d>
//   states <name>+
//   neighborhood (<dx>[,<dy>])+
//   rule <s_1> ... <s_|V|> -> <s>      (one line per window, any order)
//   default -> <state|unchanged>       (optional; fills unlisted windows;
//                                       `unchanged` needs the zero offset)
// '#' starts a comment. Without a default the table must be total; the
// error names the first missing window.
CARule parse_rule(const std::string& text, const Limits& limits = {});
std::string serialize_rule(const CARule& rule, const Limits& limits = {});

// Config formats, resolved against a rule's alphabet:
//   bi-periodic: left:/mid:/right: words plus `origin: <i>` (index of cell 0
//   in the middle); 1D periodic: `period: <w>`; 2D periodic: `grid:`
//   followed by one row per line. Words are whitespace-separated state
//   names; a single run of one-character names may be written compactly
//   ("110" for 1 1 0).
Config parse_config(const std::string& text, const CARule& rule);
std::string serialize_config(const Config& config, const CARule& rule);

// Finite pattern: `window:` plus the word (1D) or one row per line (2D).
FinitePattern parse_pattern(const std::string& text, const CARule& rule);
std::string serialize_pattern(const FinitePattern& p, const CARule& rule);

// Word helper shared by the CLI: compact or space-separated state names.
std::vector<State> parse_state_word(const std::string& text, const CARule& rule);

// Order format: one `<state> <= <state>` generator per line.
StateOrder parse_order(const std::string& text, const CARule& rule);
std::string serialize_order(const StateOrder& order, const CARule& rule);

// Witness format:
//   m: <ints>   t: <int>
//   blocks:     followed by one cell tuple `(a,b,...)` per line
//   pi:         followed by `(a,b,...) -> <state>` lines
// Tuples list block cells first-axis-fastest; states come from G for the
// tuples and from F for the projection targets.
SimulationWitness parse_witness(const std::string& text, const CARule& F,
                                const CARule& G);
std::string serialize_witness(const SimulationWitness& w, const CARule& F,
                              const CARule& G);

// Library directory: a `meta` file (`N <n>`, `delta <d>`, `states <name>+`)
// plus one block file per block: `gate: <name>`, `u: <4 bits>`, then N
// pattern rows.
BlockLibrary parse_library(const std::string& directory);
void serialize_library(const BlockLibrary& lib, const std::string& directory);

std::string serialize_report(const DecisionReport& report);

// Resolves a rule spec: a builtin name (rule110, identity, shift, not,
// or-spread, xor, signed-majority), zigzag:<spec>, or a path to a rule file.
CARule rule_from_spec(const std::string& spec, const Limits& limits = {});

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Grammar summary for --help.
const char* format_grammar();

}  // namespace casim

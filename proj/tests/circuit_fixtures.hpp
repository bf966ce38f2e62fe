#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "casim/circuit.hpp"

namespace testutil {

using namespace casim;

// Mutants used to prove the checkers can fail things.

// Same automaton as the reference, but every AND block's pattern is the
// matching OR cell: the library claims AND semantics for hardware that
// computes OR. check_transient must reject it on input (1, 0).
inline std::pair<CARule, BlockLibrary> corrupted_and_library() {
  auto [rule, lib] = reference_wire_ca();
  // Pattern of the OR cell carrying the same side values as each AND block.
  for (Block& b : lib.blocks) {
    if (b.gate.kind != GateType::Kind::And) continue;
    const auto or_ids = lib.blocks_of_type({GateType::Kind::Or}, b.side_values);
    b.pattern = lib.blocks[or_ids.front()].pattern;
  }
  return {std::move(rule), std::move(lib)};
}

// A one-shot variant of the reference automaton: every cell carries a burned
// flag; fresh cells compute their gate once and burn, burned cells freeze.
// Both fresh and burned patterns are registered under the same types, fresh
// first, so assemblies start fresh, round one transitions correctly and
// round two catches the reuse failure.
inline std::pair<CARule, BlockLibrary> one_shot_library() {
  struct StateInfo {
    GateType gate;
    std::array<int, 4> values;
    bool burned;
  };
  std::vector<StateInfo> info;
  std::vector<std::string> names;
  for (bool burned : {false, true}) {
    for (const GateType& g : all_gates()) {
      for (const auto& u : gate_image(g)) {
        info.push_back({g, u, burned});
        names.push_back(g.name() + ":" + std::to_string(u[0]) +
                        std::to_string(u[1]) + std::to_string(u[2]) +
                        std::to_string(u[3]) + (burned ? ":x" : ":f"));
      }
    }
  }
  const std::vector<Offset> nbhd{{0, 0}, {0, 1}, {1, 0}, {0, -1}, {-1, 0}};
  auto shared = std::make_shared<std::vector<StateInfo>>(info);
  auto local = [shared](std::span<const State> w) -> State {
    const auto& table = *shared;
    const StateInfo& me = table[w[0]];
    if (me.burned) return w[0];  // spent cells are stuck
    const std::array<int, 4> in{table[w[4]].values[South], table[w[1]].values[West],
                                table[w[2]].values[North], table[w[3]].values[East]};
    const std::array<int, 4> out = gate_eval(me.gate, in);
    for (std::size_t s = 0; s < table.size(); ++s)
      if (table[s].burned && table[s].gate == me.gate && table[s].values == out)
        return static_cast<State>(s);
    return w[0];
  };
  CARule rule(2, names, nbhd, CARule::LocalFn(local));

  BlockLibrary lib;
  lib.block_side = 1;
  lib.delay = 1;
  lib.alphabet = rule.state_names();
  for (std::size_t s = 0; s < info.size(); ++s)
    lib.blocks.push_back({info[s].gate, info[s].values, {static_cast<State>(s)}});
  lib.validate();
  return {std::move(rule), std::move(lib)};
}

}  // namespace testutil

#pragma once

#include <optional>
#include <vector>

#include "casim/report.hpp"
#include "casim/rescaling.hpp"
#include "casim/rule.hpp"

namespace casim {

// Certificate that F embeds cell-wise into the rescaling G^[m, t]: a closed
// sub-alphabet of the block rule together with a surjective projection onto
// F's alphabet. block_states is sorted; projection[i] is the F-state of
// block_states[i].
struct SimulationWitness {
  BlockShape shape;
  std::vector<State> block_states;
  std::vector<State> projection;

  bool operator==(const SimulationWitness&) const = default;
};

// Decides whether F is obtained from `big` by restriction to sub_states and
// cell-wise projection: (a) every window over the sub-alphabet maps back
// into it, and (b) projecting commutes with one step, checked exhaustively
// over windows of the larger radius. A failed check reports the first
// counterexample window in the note.
DecisionReport check_subproj(const CARule& F, const CARule& big,
                             const std::vector<State>& sub_states,
                             const std::vector<State>& projection,
                             const Limits& limits = {});

// rescale + check_subproj.
DecisionReport verify_witness(const CARule& F, const CARule& G,
                              const SimulationWitness& w,
                              const Limits& limits = {});

struct SearchOutcome {
  std::optional<SimulationWitness> witness;
  std::vector<BlockShape> searched;   // exhausted shapes
  std::vector<BlockShape> skipped;    // shapes abandoned on a resource limit
};

// Bounded search for a strong simulation of F inside G: shapes are
// enumerated lexicographically (block extents, then time factor), and for
// each shape the (sub-alphabet, projection) assignments depth-first in a
// fixed canonical order, so the returned witness is deterministic. Every
// returned witness has passed check_subproj. Requires |Q_F| <= 3; the
// search space grows too fast beyond that to be useful.
SearchOutcome search_strong_simulation(const CARule& F, const CARule& G,
                                       std::int64_t m_max, std::int64_t t_max,
                                       const Limits& limits = {});

}  // namespace casim

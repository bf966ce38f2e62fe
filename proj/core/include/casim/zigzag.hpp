#pragma once

#include <string>

#include "casim/common.hpp"
#include "casim/rule.hpp"

namespace casim {

// State layout of the zigzag wrapper built by zigzag(): three control states
// (blank b, decaying blank b+, spreading error e), then one work state per
// (x, y, mode) triple over the inner alphabet. Work cells carry two inner
// states and a mode: '<' and '>' are the moving head, 'l' marks cells an
// eastbound pass already rewrote, 'r' marks cells still waiting.
struct ZigzagAlphabet {
  enum Mode { HeadLeft = 0, HeadRight = 1, PassedLeft = 2, PassedRight = 3 };

  static constexpr State B = 0;      // blank, inert
  static constexpr State BPlus = 1;  // becomes blank
  static constexpr State E = 2;      // spreading error

  std::size_t inner_count = 0;

  std::size_t size() const { return 3 + 4 * inner_count * inner_count; }
  bool is_work(State s) const { return s >= 3 && s < size(); }

  State pack(State x, State y, Mode m) const {
    return static_cast<State>(3 + (x * inner_count + y) * 4 + m);
  }
  State x_of(State s) const { return static_cast<State>((s - 3) / 4 / inner_count); }
  State y_of(State s) const { return static_cast<State>((s - 3) / 4 % inner_count); }
  Mode mode_of(State s) const { return static_cast<Mode>((s - 3) % 4); }
  bool is_head(State s) const {
    return is_work(s) && mode_of(s) <= HeadRight;
  }

  static char mode_char(Mode m);
  std::string state_name(const CARule& inner, State s) const;
};

ZigzagAlphabet zigzag_alphabet(const CARule& inner);

// The shrinking-zone wrapper around a 1D radius-<=1 rule: a bounded working
// zone hosts at most one head that sweeps back and forth, applies the inner
// local map on every left-to-right pass, and gives up one boundary cell per
// bounce until the zone is gone. Ill-formed local patterns ignite the
// spreading error state. The resulting rule is total over all windows; the
// priority order is: error spreading, forbidden-pattern detection, blank
// decay, head transitions, otherwise unchanged.
CARule zigzag(const CARule& inner, const Limits& limits = {});

}  // namespace casim

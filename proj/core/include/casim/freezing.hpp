#pragma once

#include <optional>
#include <vector>

#include "casim/config.hpp"
#include "casim/report.hpp"
#include "casim/rule.hpp"

namespace casim {

struct FreezingSynthesis;

// A partial order on an alphabet, stored reflexively and transitively
// closed. Construction validates antisymmetry.
class StateOrder {
 public:
  // Closes the generating pairs (a <= b). Throws input_error if the closure
  // relates two distinct states both ways.
  static StateOrder from_pairs(std::size_t state_count,
                               const std::vector<std::pair<State, State>>& pairs);

  std::size_t state_count() const { return n_; }
  bool leq(State a, State b) const { return leq_[a * n_ + b] != 0; }

  // Minimal generating set (the covering relation), sorted, reflexive pairs
  // omitted.
  std::vector<std::pair<State, State>> generators() const;

  bool operator==(const StateOrder&) const = default;

 private:
  StateOrder(std::size_t n, std::vector<std::uint8_t> leq)
      : n_(n), leq_(std::move(leq)) {}
  friend FreezingSynthesis find_freezing_order(const CARule&, const Limits&);

  std::size_t n_ = 0;
  std::vector<std::uint8_t> leq_;
};

struct FreezingSynthesis {
  // The minimal order under which the rule is freezing, if any order works
  // at all.
  std::optional<StateOrder> order;
  // Otherwise, a state cycle a <= ... <= a with at least two distinct
  // states, witnessing that no order can exist.
  std::vector<State> violating_cycle;
};

// Collects the constraints image <= center over all windows, closes them,
// and reports either the (unique minimal) freezing order or a violating
// cycle. Rules whose neighborhood lacks the zero offset are compared against
// every possible center value, which matches re-expressing the rule over
// V united with {0}.
FreezingSynthesis find_freezing_order(const CARule& rule, const Limits& limits = {});

// Checks image <= center for every window under a caller-supplied order;
// reports the first violating window otherwise.
DecisionReport check_freezing(const CARule& rule, const StateOrder& order,
                              const Limits& limits = {});

// Maximum number of state changes of any tracked cell over `steps` steps.
// For a freezing rule this is at most |Q| - 1. Exact over all lattice cells
// for periodic and bi-periodic configurations.
std::uint64_t change_count_audit(const CARule& rule, const Config& c,
                                 std::int64_t steps, const Limits& limits = {});

}  // namespace casim

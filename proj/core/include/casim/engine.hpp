#pragma once

#include <cstdint>
#include <vector>

#include "casim/common.hpp"
#include "casim/config.hpp"
#include "casim/rule.hpp"

namespace casim {

// Checked single-window evaluation of the local map.
State apply_local(const CARule& rule, std::span<const State> window);

// One synchronous step on a torus; offsets wrap modulo the period vector.
PeriodicConfig step_periodic(const CARule& rule, const PeriodicConfig& c);

// One synchronous step on an eventually bi-periodic 1D configuration. The
// periodic tails map to periodic tails of the same length; the explicit
// middle grows by at most the radius on each side before canonicalization.
BiPeriodicConfig step_biperiodic(const CARule& rule, const BiPeriodicConfig& c);

// Light-cone-exact iteration on a finite pattern: `steps` successive
// one-step evaluations, each shrinking the support by the radius. The input
// support must be at least radius * steps.
FinitePattern evolve_window(const CARule& rule, const FinitePattern& u, std::int64_t steps);

// States of one cell at times 0..steps.
std::vector<State> trace(const CARule& rule, const Config& c, Coord cell,
                         std::int64_t steps, const Limits& limits = {});

namespace detail {

// Bi-periodic step without canonicalization: the middle grows by exactly the
// radius on each side and tails keep their anchoring. Cell-by-cell traces of
// the result line up positionally with the input, which the change-count
// audit relies on.
struct RawBiPeriodic {
  std::vector<State> left, mid, right;
  std::int64_t start;
};
RawBiPeriodic step_biperiodic_raw(const CARule& rule, const RawBiPeriodic& c);

// One no-wrap step on a row-major array; the output shrinks by radius on
// every side. dims are (rows, cols) for 2D; cols is ignored for 1D.
std::vector<State> step_array(const CARule& rule, const std::vector<State>& in,
                              std::int64_t rows, std::int64_t cols);

}  // namespace detail

}  // namespace casim

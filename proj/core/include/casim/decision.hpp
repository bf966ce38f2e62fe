#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casim/config.hpp"
#include "casim/report.hpp"
#include "casim/rule.hpp"

namespace casim {

// Growth bound used by the long-cycle query: a product of factors drawn from
// integer constants, n, n^k with k <= 6, and 2^n. Evaluation is
// overflow-checked and saturates at 2^63, far above any measurable cycle.
class PhiSpec {
 public:
  static PhiSpec parse(const std::string& text);

  const std::string& text() const { return text_; }
  // Throws input_error if the value drops below 1.
  std::uint64_t eval(std::uint64_t n) const;

 private:
  struct Factor {
    enum class Kind { Constant, Linear, Power, Exponential } kind;
    std::uint64_t value = 0;  // constant, or the exponent k
  };
  std::string text_;
  std::vector<Factor> factors_;
};

// The center state after exactly t steps, from a pattern covering the full
// light cone (support radius * t).
State pred(const CARule& rule, std::int64_t t, const FinitePattern& u);

// Bounded reachability: yes with the first witness time if state q shows up
// at cell 0 within the horizon (t = 0 included), unknown otherwise. Exact
// simulation; a reached fixed point ends the scan early without changing
// the answer.
DecisionReport ubpred_bounded(const CARule& rule, const BiPeriodicConfig& c,
                              State q, std::int64_t horizon,
                              const Limits& limits = {});

// Horizon that provably covers cell-0 stabilization of the zigzag wrapper on
// a description of size L. Validated against long-horizon simulation by the
// acceptance suite.
std::int64_t zigzag_stabilization_bound(std::int64_t description_size);

// Exact reachability for the zigzag wrapper of `inner`: cell 0 stabilizes
// within a quadratic number of steps whatever the configuration looks like
// (spreading error, bounded zone, one-way head escape, or frozen blank), so
// simulating to the stabilization bound decides the question. Returns yes
// with the first witness time, or a definite no.
DecisionReport ubpred_zigzag(const CARule& inner, const BiPeriodicConfig& c,
                             State q, const Limits& limits = {});

struct CycleInfo {
  std::uint64_t transient = 0;
  std::uint64_t cycle_length = 0;
  bool operator==(const CycleInfo&) const = default;
};

// Exact transient and cycle length of the orbit of a torus configuration,
// by first-repeat detection over hashed snapshots.
CycleInfo cycle_structure(const CARule& rule, const PeriodicConfig& c,
                          const Limits& limits = {});

// Is the reached cycle strictly longer than phi(n)? The period must be n in
// 1D or n x n in 2D. The report carries the measured pair.
DecisionReport cycle_gt_phi(const CARule& rule, const PeriodicConfig& c,
                            const PhiSpec& phi, const Limits& limits = {});

// All width-n column words of length k realized by some initial window of
// width n + 2 * radius * (k - 1); columns are read at coordinates [1, n].
// Words are concatenations of k rows of n states, returned sorted.
std::vector<std::vector<State>> column_language(const CARule& rule,
                                                std::int64_t n, std::int64_t k,
                                                const Limits& limits = {});

}  // namespace casim

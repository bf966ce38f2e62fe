#pragma once

#include <algorithm>
#include <vector>

#include "casim/builtins.hpp"
#include "casim/common.hpp"
#include "casim/config.hpp"
#include "casim/engine.hpp"
#include "casim/rule.hpp"

namespace testutil {

using namespace casim;

// Independent local map for rule 110, straight from the arithmetic formula.
inline State rule110_formula(State x, State y, State z) {
  return (1 - x * y * z) * std::max(y, z);
}

// Brute-force torus step against the formula, bypassing CARule entirely.
inline std::vector<State> rule110_torus_oracle(const std::vector<State>& w) {
  const std::int64_t p = static_cast<std::int64_t>(w.size());
  std::vector<State> out(p);
  for (std::int64_t i = 0; i < p; ++i)
    out[i] = rule110_formula(w[(i - 1 + p) % p], w[i], w[(i + 1) % p]);
  return out;
}

inline std::vector<State> random_word(SplitMix64& rng, std::size_t len,
                                      std::size_t states) {
  std::vector<State> w(len);
  for (auto& s : w) s = static_cast<State>(rng.below(states));
  return w;
}

inline PeriodicConfig random_torus_1d(SplitMix64& rng, std::size_t len,
                                      std::size_t states) {
  return PeriodicConfig(random_word(rng, len, states));
}

inline PeriodicConfig random_torus_2d(SplitMix64& rng, std::int64_t rows,
                                      std::int64_t cols, std::size_t states) {
  return PeriodicConfig(rows, cols, random_word(rng, rows * cols, states));
}

inline BiPeriodicConfig random_biperiodic(SplitMix64& rng, std::size_t states,
                                          std::size_t max_tail = 4,
                                          std::size_t max_mid = 4) {
  const std::size_t l = 1 + rng.below(max_tail);
  const std::size_t m = rng.below(max_mid + 1);
  const std::size_t r = 1 + rng.below(max_tail);
  const std::int64_t origin =
      m == 0 ? 0 : static_cast<std::int64_t>(rng.below(m));
  return BiPeriodicConfig(random_word(rng, l, states), random_word(rng, m, states),
                          random_word(rng, r, states), origin);
}

// Componentwise product of two rules over the same neighborhood; the test
// fixture for projection-onto-a-factor checks.
inline CARule product_rule(const CARule& a, const CARule& b) {
  const std::size_t qa = a.state_count(), qb = b.state_count();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < qa; ++i)
    for (std::size_t j = 0; j < qb; ++j)
      names.push_back(a.state_names()[i] + "." + b.state_names()[j]);
  const std::size_t v = a.neighborhood_size();
  std::vector<State> table;
  const std::uint64_t windows = [&] {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < v; ++i) n *= qa * qb;
    return n;
  }();
  std::vector<State> w(v), wa(v), wb(v);
  for (std::uint64_t idx = 0; idx < windows; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = v; i-- > 0;) {
      w[i] = static_cast<State>(rest % (qa * qb));
      rest /= qa * qb;
    }
    for (std::size_t i = 0; i < v; ++i) {
      wa[i] = w[i] / qb;
      wb[i] = w[i] % qb;
    }
    table.push_back(a.eval(wa) * static_cast<State>(qb) + b.eval(wb));
  }
  return CARule(a.dimension(), std::move(names),
                std::vector<Offset>(a.neighborhood()), std::move(table));
}

}  // namespace testutil

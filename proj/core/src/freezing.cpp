#include "casim/freezing.hpp"

#include <algorithm>
#include <cassert>

#include "casim/engine.hpp"

namespace casim {

namespace {

void close_reflexive_transitive(std::size_t n, std::vector<std::uint8_t>& leq) {
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (leq[k * n + j]) leq[i * n + j] = 1;
    }
}

std::optional<std::pair<State, State>> antisymmetry_violation(
    std::size_t n, const std::vector<std::uint8_t>& leq) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (leq[a * n + b] && leq[b * n + a])
        return std::make_pair(static_cast<State>(a), static_cast<State>(b));
  return std::nullopt;
}

// Shortest constraint-edge path from `from` to `to` (BFS), both endpoints
// included. Edges are the raw constraint pairs, so the cycle is readable
// evidence.
std::vector<State> constraint_path(std::size_t n,
                                   const std::vector<std::uint8_t>& edge,
                                   State from, State to) {
  std::vector<int> prev(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<State> queue{from};
  seen[from] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    State cur = queue[head];
    if (cur == to) break;
    for (std::size_t next = 0; next < n; ++next) {
      if (!edge[cur * n + next] || seen[next]) continue;
      seen[next] = 1;
      prev[next] = static_cast<int>(cur);
      queue.push_back(static_cast<State>(next));
    }
  }
  std::vector<State> path;
  for (int cur = to; cur != -1; cur = prev[cur]) {
    path.push_back(static_cast<State>(cur));
    if (static_cast<State>(cur) == from) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Iterate all windows, reporting (image, center) pairs. When the
// neighborhood lacks the zero offset the center ranges over every state.
template <typename Fn>
void for_each_constraint(const CARule& rule, const Limits& limits, Fn&& fn) {
  const std::uint64_t count = rule.window_count();
  const std::uint64_t budget =
      rule.center_index() ? count : count * rule.state_count();
  if (budget > limits.max_enumeration)
    throw resource_error("freezing analysis exceeds the enumeration budget");
  std::vector<State> w(rule.neighborhood_size());
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    rule.window_of_index(idx, w);
    const State img = rule.eval(w);
    if (auto ci = rule.center_index()) {
      if (!fn(img, w[*ci], w)) return;
    } else {
      for (State center = 0; center < rule.state_count(); ++center)
        if (!fn(img, center, w)) return;
    }
  }
}

std::string window_text(const CARule& rule, const std::vector<State>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += rule.state_name(w[i]);
  }
  return out;
}

}  // namespace

StateOrder StateOrder::from_pairs(
    std::size_t state_count, const std::vector<std::pair<State, State>>& pairs) {
  std::vector<std::uint8_t> leq(state_count * state_count, 0);
  for (const auto& [a, b] : pairs) {
    if (a >= state_count || b >= state_count)
      throw input_error("order pair state out of range");
    leq[a * state_count + b] = 1;
  }
  close_reflexive_transitive(state_count, leq);
  if (auto v = antisymmetry_violation(state_count, leq))
    throw input_error("relation is not antisymmetric: states " +
                      std::to_string(v->first) + " and " +
                      std::to_string(v->second) + " compare both ways");
  return StateOrder(state_count, std::move(leq));
}

std::vector<std::pair<State, State>> StateOrder::generators() const {
  // Covering pairs: a < b with nothing strictly between.
  std::vector<std::pair<State, State>> out;
  for (State a = 0; a < n_; ++a) {
    for (State b = 0; b < n_; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool covered = true;
      for (State c = 0; c < n_; ++c) {
        if (c == a || c == b) continue;
        if (leq(a, c) && leq(c, b)) {
          covered = false;
          break;
        }
      }
      if (covered) out.emplace_back(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FreezingSynthesis find_freezing_order(const CARule& rule, const Limits& limits) {
  const std::size_t n = rule.state_count();
  std::vector<std::uint8_t> edge(n * n, 0);  // raw constraints
  for_each_constraint(rule, limits, [&](State img, State center, const auto&) {
    edge[img * n + center] = 1;
    return true;
  });

  std::vector<std::uint8_t> leq = edge;
  close_reflexive_transitive(n, leq);

  FreezingSynthesis out;
  if (auto v = antisymmetry_violation(n, leq)) {
    auto forward = constraint_path(n, edge, v->first, v->second);
    auto back = constraint_path(n, edge, v->second, v->first);
    out.violating_cycle = forward;
    out.violating_cycle.insert(out.violating_cycle.end(), back.begin() + 1,
                               back.end());
    return out;
  }
  out.order = StateOrder(n, std::move(leq));
  return out;
}

DecisionReport check_freezing(const CARule& rule, const StateOrder& order,
                              const Limits& limits) {
  if (order.state_count() != rule.state_count())
    throw input_error("order is over a different alphabet size");
  DecisionReport report = DecisionReport::make_yes("image <= center on all windows");
  for_each_constraint(rule, limits,
                      [&](State img, State center, const std::vector<State>& w) {
                        if (order.leq(img, center)) return true;
                        report = DecisionReport::make_no(
                            "window [" + window_text(rule, w) + "] maps " +
                            rule.state_name(center) + " to " +
                            rule.state_name(img) + ", which the order forbids");
                        return false;
                      });
  return report;
}

namespace {

std::uint64_t audit_periodic(const CARule& rule, const PeriodicConfig& start,
                             std::int64_t steps) {
  PeriodicConfig cur = start;
  std::vector<std::uint64_t> changes(cur.cells().size(), 0);
  for (std::int64_t t = 0; t < steps; ++t) {
    PeriodicConfig next = step_periodic(rule, cur);
    for (std::size_t i = 0; i < changes.size(); ++i)
      if (next.cells()[i] != cur.cells()[i]) ++changes[i];
    cur = std::move(next);
  }
  std::uint64_t best = 0;
  for (std::uint64_t c : changes) best = std::max(best, c);
  return best;
}

std::uint64_t audit_biperiodic(const CARule& rule, const BiPeriodicConfig& start,
                               std::int64_t steps, const Limits& limits) {
  // Raw stepping keeps tail anchoring fixed, so every lattice cell's trace
  // equals the trace of some cell in a window one tail period wider than the
  // horizon's light cone.
  const std::int64_t r = rule.radius();
  const std::int64_t L = static_cast<std::int64_t>(start.left().size());
  const std::int64_t R = static_cast<std::int64_t>(start.right().size());
  const std::int64_t lo = start.start() - r * steps - L;
  const std::int64_t hi =
      start.start() + static_cast<std::int64_t>(start.mid().size()) + r * steps + R;
  if (static_cast<std::uint64_t>(hi - lo) > limits.max_config_cells)
    throw resource_error("audit window exceeds the cell budget");

  detail::RawBiPeriodic cur{start.left(), start.mid(), start.right(), start.start()};
  std::vector<std::uint64_t> changes(hi - lo, 0);
  std::vector<State> prev(hi - lo);
  auto raw_at = [&](const detail::RawBiPeriodic& c, std::int64_t z) -> State {
    const std::int64_t idx = z - c.start;
    const std::int64_t m = static_cast<std::int64_t>(c.mid.size());
    if (idx >= 0 && idx < m) return c.mid[idx];
    if (idx < 0) {
      const std::int64_t l = static_cast<std::int64_t>(c.left.size());
      std::int64_t k = idx % l;
      return c.left[k < 0 ? k + l : k];
    }
    return c.right[(idx - m) % static_cast<std::int64_t>(c.right.size())];
  };
  for (std::int64_t i = lo; i < hi; ++i) prev[i - lo] = raw_at(cur, i);
  for (std::int64_t t = 0; t < steps; ++t) {
    cur = detail::step_biperiodic_raw(rule, cur);
    for (std::int64_t i = lo; i < hi; ++i) {
      const State s = raw_at(cur, i);
      if (s != prev[i - lo]) {
        ++changes[i - lo];
        prev[i - lo] = s;
      }
    }
  }
  std::uint64_t best = 0;
  for (std::uint64_t c : changes) best = std::max(best, c);
  return best;
}

std::uint64_t audit_pattern(const CARule& rule, const FinitePattern& start,
                            std::int64_t steps) {
  const std::int64_t r = rule.radius();
  if (start.support() < r * steps)
    throw input_error("pattern support too small for the requested steps");
  // Track the cells that survive to the end of the horizon.
  const std::int64_t n_final = start.support() - r * steps;
  FinitePattern cur = start;
  const std::int64_t side = 2 * n_final + 1;
  const std::int64_t tracked =
      start.dimension() == 1 ? side : side * side;
  std::vector<std::uint64_t> changes(tracked, 0);
  std::vector<State> prev(tracked);
  auto snapshot = [&](const FinitePattern& p, std::vector<State>& out) {
    std::int64_t k = 0;
    if (p.dimension() == 1) {
      for (std::int64_t i = -n_final; i <= n_final; ++i) out[k++] = p.at({i, 0});
    } else {
      for (std::int64_t i = -n_final; i <= n_final; ++i)
        for (std::int64_t j = -n_final; j <= n_final; ++j) out[k++] = p.at({i, j});
    }
  };
  snapshot(cur, prev);
  std::vector<State> now(tracked);
  for (std::int64_t t = 0; t < steps; ++t) {
    cur = evolve_window(rule, cur, 1);
    snapshot(cur, now);
    for (std::int64_t i = 0; i < tracked; ++i)
      if (now[i] != prev[i]) {
        ++changes[i];
        prev[i] = now[i];
      }
  }
  std::uint64_t best = 0;
  for (std::uint64_t c : changes) best = std::max(best, c);
  return best;
}

}  // namespace

std::uint64_t change_count_audit(const CARule& rule, const Config& c,
                                 std::int64_t steps, const Limits& limits) {
  if (steps < 0) throw input_error("step count must be >= 0");
  if (const auto* p = std::get_if<PeriodicConfig>(&c))
    return audit_periodic(rule, *p, steps);
  if (const auto* b = std::get_if<BiPeriodicConfig>(&c))
    return audit_biperiodic(rule, *b, steps, limits);
  return audit_pattern(rule, std::get<FinitePattern>(c), steps);
}

}  // namespace casim

#include "casim/simulation.hpp"

#include <algorithm>
#include <sstream>

namespace casim {

namespace {

std::string window_text(const CARule& rule, std::span<const State> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += rule.state_name(w[i]);
  }
  return out;
}

// Offsets of the max-norm ball of radius R, row-major; this is the joint
// window both local maps are evaluated on.
std::vector<Offset> ball_offsets(int dimension, int R) {
  std::vector<Offset> out;
  if (dimension == 1) {
    for (int o = -R; o <= R; ++o) out.push_back({o, 0});
  } else {
    for (int o0 = -R; o0 <= R; ++o0)
      for (int o1 = -R; o1 <= R; ++o1) out.push_back({o0, o1});
  }
  return out;
}

std::size_t offset_slot(const std::vector<Offset>& ball, const Offset& o) {
  for (std::size_t i = 0; i < ball.size(); ++i)
    if (ball[i] == o) return i;
  throw input_error("offset outside the joint window");
}

// Odometer over assignments of sub-alphabet digits to `slots` positions,
// most significant position first.
struct SubWindows {
  const std::vector<State>& sub;
  std::vector<std::size_t> digits;

  SubWindows(const std::vector<State>& s, std::size_t slots)
      : sub(s), digits(slots, 0) {}

  std::uint64_t count() const {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < digits.size(); ++i) n *= sub.size();
    return n;
  }
  void fill(std::vector<State>& out) const {
    for (std::size_t i = 0; i < digits.size(); ++i) out[i] = sub[digits[i]];
  }
  bool advance() {
    for (std::size_t i = digits.size(); i-- > 0;) {
      if (++digits[i] < sub.size()) return true;
      digits[i] = 0;
    }
    return false;
  }
};

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp,
                          std::uint64_t cap) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && n > cap / base) return cap + 1;
    n *= base;
  }
  return n;
}

}  // namespace

DecisionReport check_subproj(const CARule& F, const CARule& big,
                             const std::vector<State>& sub_states,
                             const std::vector<State>& projection,
                             const Limits& limits) {
  if (F.dimension() != big.dimension())
    throw input_error("sub/projection check needs rules of equal dimension");
  if (sub_states.empty()) throw input_error("empty sub-alphabet");
  if (sub_states.size() != projection.size())
    throw input_error("projection must assign every sub-alphabet state");
  std::vector<State> sub = sub_states;
  if (!std::is_sorted(sub.begin(), sub.end()) ||
      std::adjacent_find(sub.begin(), sub.end()) != sub.end())
    throw input_error("sub-alphabet must be sorted and duplicate-free");
  for (State s : sub)
    if (s >= big.state_count()) throw input_error("sub-alphabet state out of range");

  std::vector<char> hit(F.state_count(), 0);
  std::vector<State> pi(big.state_count(), 0);
  std::vector<char> in_sub(big.state_count(), 0);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (projection[i] >= F.state_count())
      throw input_error("projection target out of range");
    pi[sub[i]] = projection[i];
    in_sub[sub[i]] = 1;
    hit[projection[i]] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    throw input_error("projection is not surjective onto the small alphabet");

  // (a) closure of the sub-alphabet under the big rule.
  {
    const std::size_t slots = big.neighborhood_size();
    if (checked_pow(sub.size(), slots, limits.max_enumeration) >
        limits.max_enumeration)
      throw resource_error("closure check exceeds the enumeration budget");
    SubWindows it(sub, slots);
    std::vector<State> w(slots);
    do {
      it.fill(w);
      const State img = big.eval(w);
      if (!in_sub[img]) {
        return DecisionReport::make_no(
            "closure violated: window [" + window_text(big, w) + "] maps to " +
            big.state_name(img) + " outside the sub-alphabet");
      }
    } while (it.advance());
  }

  // (b) commutation of projection with one step over the joint window.
  const int R = std::max(F.radius(), big.radius());
  const auto ball = ball_offsets(F.dimension(), R);
  std::vector<std::size_t> big_slots, small_slots;
  for (const Offset& o : big.neighborhood()) big_slots.push_back(offset_slot(ball, o));
  for (const Offset& o : F.neighborhood()) small_slots.push_back(offset_slot(ball, o));

  if (checked_pow(sub.size(), ball.size(), limits.max_enumeration) >
      limits.max_enumeration)
    throw resource_error("commutation check exceeds the enumeration budget");

  SubWindows it(sub, ball.size());
  std::vector<State> w(ball.size());
  std::vector<State> wg(big_slots.size()), wf(small_slots.size());
  do {
    it.fill(w);
    for (std::size_t i = 0; i < big_slots.size(); ++i) wg[i] = w[big_slots[i]];
    for (std::size_t i = 0; i < small_slots.size(); ++i)
      wf[i] = pi[w[small_slots[i]]];
    const State a = pi[big.eval(wg)];
    const State b = F.eval(wf);
    if (a != b) {
      return DecisionReport::make_no(
          "projection does not commute on window [" + window_text(big, w) +
          "]: projected image " + F.state_name(a) + ", expected " +
          F.state_name(b));
    }
  } while (it.advance());

  return DecisionReport::make_yes("closure and commutation hold on all windows");
}

DecisionReport verify_witness(const CARule& F, const CARule& G,
                              const SimulationWitness& w, const Limits& limits) {
  const CARule big = rescale(G, w.shape, limits);
  return check_subproj(F, big, w.block_states, w.projection, limits);
}

namespace {

// Depth-first assignment of each block state to an F-state or "outside".
// Branches are explored labels-ascending with "outside" last, states in id
// order, so the first surviving leaf is canonical. Pruning only uses
// definite violations on fully assigned windows; leaves are re-verified with
// check_subproj.
struct WitnessSearch {
  const CARule& F;
  const CARule& big;
  const Limits& limits;
  std::uint64_t nodes = 0;
  static constexpr State kOut = ~State{0};
  static constexpr State kFree = kOut - 1;
  std::vector<State> assign;  // per big-state: F-state, kOut or kFree

  std::vector<std::size_t> big_slots, small_slots;
  std::vector<Offset> ball;

  WitnessSearch(const CARule& f, const CARule& b, const Limits& l)
      : F(f), big(b), limits(l), assign(b.state_count(), kFree) {
    const int R = std::max(F.radius(), big.radius());
    ball = ball_offsets(F.dimension(), R);
    for (const Offset& o : big.neighborhood())
      big_slots.push_back(offset_slot(ball, o));
    for (const Offset& o : F.neighborhood())
      small_slots.push_back(offset_slot(ball, o));
  }

  bool consistent() {
    // Windows listing only assigned-in states must close and commute.
    std::vector<State> in_states;
    for (State s = 0; s < assign.size(); ++s)
      if (assign[s] != kOut && assign[s] != kFree) in_states.push_back(s);
    if (in_states.empty()) return true;
    if (checked_pow(in_states.size(), ball.size(), limits.max_enumeration) >
        limits.max_enumeration)
      return true;  // too many to prune on; the leaf check decides
    SubWindows it(in_states, ball.size());
    std::vector<State> w(ball.size());
    std::vector<State> wg(big_slots.size()), wf(small_slots.size());
    do {
      it.fill(w);
      for (std::size_t i = 0; i < big_slots.size(); ++i) wg[i] = w[big_slots[i]];
      const State img = big.eval(wg);
      if (assign[img] == kOut) return false;
      if (assign[img] != kFree) {
        for (std::size_t i = 0; i < small_slots.size(); ++i)
          wf[i] = assign[w[small_slots[i]]];
        if (F.eval(wf) != assign[img]) return false;
      }
    } while (it.advance());
    return true;
  }

  std::optional<SimulationWitness> run(const BlockShape& shape) {
    std::optional<SimulationWitness> found;
    dfs(0, shape, found);
    return found;
  }

  void dfs(State next, const BlockShape& shape,
           std::optional<SimulationWitness>& found) {
    if (found) return;
    if (++nodes > limits.max_search_nodes)
      throw resource_error("witness search exceeded the node budget");
    if (next == assign.size()) {
      std::vector<State> sub, proj;
      std::vector<char> hit(F.state_count(), 0);
      for (State s = 0; s < assign.size(); ++s) {
        if (assign[s] == kOut) continue;
        sub.push_back(s);
        proj.push_back(assign[s]);
        hit[assign[s]] = 1;
      }
      if (sub.empty() ||
          std::find(hit.begin(), hit.end(), 0) != hit.end())
        return;
      if (check_subproj(F, big, sub, proj, limits).yes())
        found = SimulationWitness{shape, std::move(sub), std::move(proj)};
      return;
    }
    for (State label = 0; label < F.state_count(); ++label) {
      assign[next] = label;
      if (consistent()) dfs(next + 1, shape, found);
      if (found) return;
    }
    assign[next] = kOut;
    if (consistent()) dfs(next + 1, shape, found);
    assign[next] = kFree;
  }
};

}  // namespace

SearchOutcome search_strong_simulation(const CARule& F, const CARule& G,
                                       std::int64_t m_max, std::int64_t t_max,
                                       const Limits& limits) {
  if (F.dimension() != G.dimension())
    throw input_error("simulation search needs rules of equal dimension");
  if (F.state_count() > 3)
    throw input_error("simulation search supports |Q_F| <= 3");
  if (m_max < 1 || t_max < 1) throw input_error("search bounds must be >= 1");

  std::vector<BlockShape> shapes;
  if (F.dimension() == 1) {
    for (std::int64_t m = 1; m <= m_max; ++m)
      for (std::int64_t t = 1; t <= t_max; ++t)
        shapes.push_back({{m}, t});
  } else {
    for (std::int64_t m0 = 1; m0 <= m_max; ++m0)
      for (std::int64_t m1 = 1; m1 <= m_max; ++m1)
        for (std::int64_t t = 1; t <= t_max; ++t)
          shapes.push_back({{m0, m1}, t});
  }

  SearchOutcome out;
  for (const BlockShape& shape : shapes) {
    try {
      const CARule big = rescale(G, shape, limits);
      WitnessSearch search(F, big, limits);
      if (auto w = search.run(shape)) {
        out.witness = std::move(w);
        out.searched.push_back(shape);
        return out;
      }
      out.searched.push_back(shape);
    } catch (const resource_error&) {
      out.skipped.push_back(shape);
    }
  }
  return out;
}

}  // namespace casim

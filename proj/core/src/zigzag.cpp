#include "casim/zigzag.hpp"

#include <stdexcept>

namespace casim {

char ZigzagAlphabet::mode_char(Mode m) {
  switch (m) {
    case HeadLeft: return '<';
    case HeadRight: return '>';
    case PassedLeft: return 'l';
    default: return 'r';
  }
}

std::string ZigzagAlphabet::state_name(const CARule& inner, State s) const {
  if (s == B) return "b";
  if (s == BPlus) return "b+";
  if (s == E) return "e";
  std::string out = "(";
  out += inner.state_name(x_of(s));
  out += ',';
  out += inner.state_name(y_of(s));
  out += ',';
  out += mode_char(mode_of(s));
  out += ')';
  return out;
}

ZigzagAlphabet zigzag_alphabet(const CARule& inner) {
  return ZigzagAlphabet{inner.state_count()};
}

namespace {

// Inner local map read as delta(x, y, z) regardless of how the inner rule
// lists its radius-<=1 neighborhood.
struct InnerDelta {
  const CARule* rule;
  std::vector<std::size_t> slot;  // per neighborhood offset: 0, 1 or 2

  explicit InnerDelta(const CARule& r) : rule(&r) {
    for (const Offset& o : r.neighborhood())
      slot.push_back(static_cast<std::size_t>(o[0] + 1));
  }

  State operator()(State x, State y, State z) const {
    const State v[3] = {x, y, z};
    std::vector<State> window(slot.size());
    for (std::size_t i = 0; i < slot.size(); ++i) window[i] = v[slot[i]];
    return rule->eval(window);
  }
};

}  // namespace

CARule zigzag(const CARule& inner, const Limits& limits) {
  if (inner.dimension() != 1)
    throw input_error("zigzag needs a 1D inner rule");
  if (inner.radius() > 1)
    throw input_error("zigzag needs an inner rule of radius at most 1");

  const ZigzagAlphabet za = zigzag_alphabet(inner);
  const std::uint64_t n = za.size();
  if (n * n * n > limits.max_table_entries)
    throw resource_error("zigzag table would exceed the table budget");

  std::vector<std::string> names(n);
  for (State s = 0; s < n; ++s) names[s] = za.state_name(inner, s);

  const InnerDelta delta(inner);

  auto head = [&](State s) { return za.is_head(s); };
  auto mode = [&](State s) { return za.mode_of(s); };
  auto work = [&](State s, ZigzagAlphabet::Mode m) {
    return za.is_work(s) && za.mode_of(s) == m;
  };
  auto blankish = [&](State s) {
    return s == ZigzagAlphabet::B || s == ZigzagAlphabet::BPlus;
  };

  // The five forbidden adjacent pairs inside a working zone: l/r seams with
  // no head between them, two heads, a head with 'r' on its left or 'l' on
  // its right.
  auto forbidden = [&](State a, State b) {
    if (!za.is_work(a) || !za.is_work(b)) return false;
    const auto ma = mode(a), mb = mode(b);
    using M = ZigzagAlphabet::Mode;
    return (ma == M::PassedRight && mb == M::PassedLeft) ||
           (ma == M::PassedLeft && mb == M::PassedRight) ||
           (head(a) && head(b)) || (ma == M::PassedRight && head(b)) ||
           (head(a) && mb == M::PassedLeft);
  };

  constexpr State B = ZigzagAlphabet::B;
  constexpr State BP = ZigzagAlphabet::BPlus;
  constexpr State E = ZigzagAlphabet::E;
  using M = ZigzagAlphabet::Mode;

  const State no_match = static_cast<State>(n);

  // Head movement, bounces and disappearance. At most one entry may match
  // any window; the unit tests check schema disjointness explicitly.
  auto head_transition = [&](State a, State b, State c) -> State {
    const State bx = za.is_work(b) ? za.x_of(b) : 0;
    const State by = za.is_work(b) ? za.y_of(b) : 0;
    // zone interior
    if (work(a, M::PassedLeft) && work(b, M::HeadLeft) && work(c, M::PassedRight))
      return za.pack(bx, by, M::PassedRight);
    if (work(a, M::PassedLeft) && work(b, M::PassedLeft) && work(c, M::HeadLeft))
      return za.pack(bx, by, M::HeadLeft);
    if (work(a, M::PassedLeft) && work(b, M::HeadRight) && work(c, M::PassedRight))
      return za.pack(bx, by, M::PassedLeft);
    if (work(a, M::HeadRight) && work(b, M::PassedRight) && work(c, M::PassedRight))
      return za.pack(delta(za.y_of(a), bx, za.x_of(c)), bx, M::HeadRight);
    // left boundary
    if (a == B && work(b, M::PassedLeft) && work(c, M::HeadLeft))
      return za.pack(bx, by, M::HeadLeft);
    if (a == B && work(b, M::HeadLeft) && work(c, M::PassedRight))
      return za.pack(bx, by, M::HeadRight);
    if (a == B && work(b, M::HeadRight) && work(c, M::PassedRight))
      return za.pack(by, bx, M::PassedLeft);  // swap seeds the next delta pass
    if (a == B && work(b, M::PassedLeft) && work(c, M::HeadRight)) return BP;
    // right boundary
    if (work(a, M::HeadRight) && work(b, M::PassedRight) && c == B)
      return za.pack(bx, by, M::HeadRight);
    if (work(a, M::PassedLeft) && work(b, M::HeadRight) && c == B)
      return za.pack(bx, by, M::HeadLeft);
    if (work(a, M::PassedLeft) && work(b, M::HeadLeft) && c == B)
      return za.pack(bx, by, M::PassedRight);
    if (work(a, M::HeadLeft) && work(b, M::PassedRight) && c == B) return BP;
    // zone of size 1
    if (blankish(a) && za.is_work(b) && blankish(c))
      return za.pack(bx, by, M::PassedRight);
    return no_match;
  };

  std::vector<State> table(n * n * n);
  for (State a = 0; a < n; ++a) {
    for (State b = 0; b < n; ++b) {
      for (State c = 0; c < n; ++c) {
        State out;
        if (a == E || b == E || c == E) {
          out = E;
        } else if (forbidden(a, b) || forbidden(b, c)) {
          out = E;
        } else if (b == B) {
          out = B;
        } else if (b == BP) {
          out = B;
        } else if (State t = head_transition(a, b, c); t < n) {
          out = t;
        } else {
          out = b;  // no head, no fault: the cell keeps its state
        }
        table[(static_cast<std::uint64_t>(a) * n + b) * n + c] = out;
      }
    }
  }
  return CARule(1, std::move(names), {{-1, 0}, {0, 0}, {1, 0}}, std::move(table));
}

}  // namespace casim

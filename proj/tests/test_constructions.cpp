#include "doctest.h"

#include <set>

#include "casim/builtins.hpp"
#include "casim/engine.hpp"
#include "casim/signed_majority.hpp"
#include "casim/zigzag.hpp"
#include "helpers.hpp"

using namespace casim;
using namespace testutil;

TEST_SUITE_BEGIN("constructions");

TEST_CASE("rule 110 truth table matches the formula on all 8 windows") {
  const CARule r = rule110();
  for (State x = 0; x < 2; ++x)
    for (State y = 0; y < 2; ++y)
      for (State z = 0; z < 2; ++z) {
        const State w[] = {x, y, z};
        CHECK(r.eval(w) == rule110_formula(x, y, z));
      }
  // Frozen expected table, windows 000..111 in index order.
  CHECK(r.table() == std::vector<State>{0, 1, 1, 1, 0, 1, 1, 0});
}

TEST_CASE("toy rules behave as named") {
  SUBCASE("identity maps any torus to itself") {
    SplitMix64 rng(41);
    const PeriodicConfig c = random_torus_1d(rng, 7, 2);
    CHECK(step_periodic(identity_rule(), c) == c);
  }
  SUBCASE("not flips") {
    const CARule r = not_rule();
    const State w0[] = {0};
    const State w1[] = {1};
    CHECK(r.eval(w0) == 1);
    CHECK(r.eval(w1) == 0);
    CHECK(r.radius() == 0);
  }
  SUBCASE("or-spread is max") {
    const CARule r = or_spread_rule();
    const State w[] = {0, 0, 1};
    CHECK(r.eval(w) == 1);
  }
  SUBCASE("xor is parity") {
    const CARule r = xor_rule();
    const State w[] = {1, 1, 1};
    CHECK(r.eval(w) == 1);
    const State w2[] = {1, 0, 1};
    CHECK(r.eval(w2) == 0);
  }
  SUBCASE("registry names resolve") {
    for (const auto& [name, rule] : toy_rules()) {
      CHECK(is_builtin_rule_name(name));
      CHECK(builtin_rule(name).state_count() == rule.state_count());
    }
    CHECK_THROWS_AS(builtin_rule("no-such-rule"), input_error);
  }
}

namespace {

// Window lookup helper over the zigzag wrapper.
State znext(const CARule& z, State a, State b, State c) {
  const State w[] = {a, b, c};
  return z.eval(w);
}

}  // namespace

TEST_CASE("zigzag transitions follow the construction") {
  const CARule inner = rule110();
  const CARule z = zigzag(inner);
  const ZigzagAlphabet za = zigzag_alphabet(inner);
  using M = ZigzagAlphabet::Mode;
  CHECK(z.state_count() == 3 + 4 * 2 * 2);

  SUBCASE("error spreads from any neighbor") {
    for (State s = 0; s < z.state_count(); ++s) {
      CHECK(znext(z, ZigzagAlphabet::E, s, 0) == ZigzagAlphabet::E);
      CHECK(znext(z, 0, s, ZigzagAlphabet::E) == ZigzagAlphabet::E);
      CHECK(znext(z, 0, ZigzagAlphabet::E, s) == ZigzagAlphabet::E);
    }
  }
  SUBCASE("blank is inert, decaying blank settles") {
    CHECK(znext(z, za.pack(0, 1, M::PassedRight), ZigzagAlphabet::B,
                za.pack(1, 0, M::PassedLeft)) == ZigzagAlphabet::B);
    CHECK(znext(z, ZigzagAlphabet::B, ZigzagAlphabet::BPlus, ZigzagAlphabet::B) ==
          ZigzagAlphabet::B);
  }
  SUBCASE("left-boundary bounce turns a left head around") {
    // b, (x,y,<), (x',y',r) becomes (x,y,>)
    const State got = znext(z, ZigzagAlphabet::B, za.pack(0, 1, M::HeadLeft),
                            za.pack(1, 1, M::PassedRight));
    CHECK(got == za.pack(0, 1, M::HeadRight));
  }
  SUBCASE("rightward pass applies the inner rule") {
    // (x,y,>), (x',y',r), (x'',y'',r): the middle cell becomes
    // (delta(y, x', x''), x', >) with delta from rule 110.
    const State got = znext(z, za.pack(0, 1, M::HeadRight),
                            za.pack(1, 0, M::PassedRight),
                            za.pack(0, 0, M::PassedRight));
    CHECK(got == za.pack(rule110_formula(1, 1, 0), 1, M::HeadRight));
  }
  SUBCASE("left-edge departure swaps the layers") {
    // b, (x,y,>), (x',y',r) becomes (y,x,l)
    const State got = znext(z, ZigzagAlphabet::B, za.pack(0, 1, M::HeadRight),
                            za.pack(1, 1, M::PassedRight));
    CHECK(got == za.pack(1, 0, M::PassedLeft));
  }
  SUBCASE("size-one zones lose their head") {
    for (State b1 : {ZigzagAlphabet::B, ZigzagAlphabet::BPlus})
      for (State b2 : {ZigzagAlphabet::B, ZigzagAlphabet::BPlus})
        CHECK(znext(z, b1, za.pack(1, 0, M::HeadLeft), b2) ==
              za.pack(1, 0, M::PassedRight));
  }
  SUBCASE("forbidden seams ignite the error state") {
    // (x,y,r)(x',y',l) adjacent, seen from both cells
    const State a = za.pack(0, 0, M::PassedRight);
    const State b = za.pack(1, 1, M::PassedLeft);
    CHECK(znext(z, a, b, ZigzagAlphabet::B) == ZigzagAlphabet::E);
    CHECK(znext(z, ZigzagAlphabet::B, a, b) == ZigzagAlphabet::E);
    // two heads
    CHECK(znext(z, ZigzagAlphabet::B, za.pack(0, 0, M::HeadLeft),
                za.pack(0, 0, M::HeadRight)) == ZigzagAlphabet::E);
  }
}

TEST_CASE("zigzag table is total and its schemas are disjoint") {
  const CARule inner = rule110();
  const CARule z = zigzag(inner);
  const ZigzagAlphabet za = zigzag_alphabet(inner);
  using M = ZigzagAlphabet::Mode;
  REQUIRE(z.has_table());
  CHECK(z.table().size() == z.window_count());

  // Re-derive which of the thirteen head-transition schemas match each
  // window; with spreading and forbidden patterns excluded, no two may
  // overlap.
  auto work = [&](State s, M m) { return za.is_work(s) && za.mode_of(s) == m; };
  auto blankish = [&](State s) {
    return s == ZigzagAlphabet::B || s == ZigzagAlphabet::BPlus;
  };
  auto head = [&](State s) { return za.is_head(s); };
  auto forbidden = [&](State a, State b) {
    if (!za.is_work(a) || !za.is_work(b)) return false;
    const auto ma = za.mode_of(a), mb = za.mode_of(b);
    return (ma == M::PassedRight && mb == M::PassedLeft) ||
           (ma == M::PassedLeft && mb == M::PassedRight) ||
           (head(a) && head(b)) || (ma == M::PassedRight && head(b)) ||
           (head(a) && mb == M::PassedLeft);
  };

  const std::size_t n = z.state_count();
  for (State a = 0; a < n; ++a) {
    for (State b = 0; b < n; ++b) {
      for (State c = 0; c < n; ++c) {
        if (a == ZigzagAlphabet::E || b == ZigzagAlphabet::E ||
            c == ZigzagAlphabet::E)
          continue;
        if (forbidden(a, b) || forbidden(b, c)) continue;
        int matches = 0;
        matches += work(a, M::PassedLeft) && work(b, M::HeadLeft) &&
                   work(c, M::PassedRight);
        matches += work(a, M::PassedLeft) && work(b, M::PassedLeft) &&
                   work(c, M::HeadLeft);
        matches += work(a, M::PassedLeft) && work(b, M::HeadRight) &&
                   work(c, M::PassedRight);
        matches += work(a, M::HeadRight) && work(b, M::PassedRight) &&
                   work(c, M::PassedRight);
        matches += a == ZigzagAlphabet::B && work(b, M::PassedLeft) &&
                   work(c, M::HeadLeft);
        matches += a == ZigzagAlphabet::B && work(b, M::HeadLeft) &&
                   work(c, M::PassedRight);
        matches += a == ZigzagAlphabet::B && work(b, M::HeadRight) &&
                   work(c, M::PassedRight);
        matches += a == ZigzagAlphabet::B && work(b, M::PassedLeft) &&
                   work(c, M::HeadRight);
        matches += work(a, M::HeadRight) && work(b, M::PassedRight) &&
                   c == ZigzagAlphabet::B;
        matches += work(a, M::PassedLeft) && work(b, M::HeadRight) &&
                   c == ZigzagAlphabet::B;
        matches += work(a, M::PassedLeft) && work(b, M::HeadLeft) &&
                   c == ZigzagAlphabet::B;
        matches += work(a, M::HeadLeft) && work(b, M::PassedRight) &&
                   c == ZigzagAlphabet::B;
        matches += blankish(a) && za.is_work(b) && blankish(c);
        CHECK(matches <= 1);
      }
    }
  }
}

TEST_CASE("a proper zigzag zone shrinks to nothing without errors") {
  const CARule inner = rule110();
  const CARule z = zigzag(inner);
  const ZigzagAlphabet za = zigzag_alphabet(inner);
  using M = ZigzagAlphabet::Mode;

  // Zone of five cells, head at the left end moving right, blank outside.
  std::vector<State> mid{za.pack(1, 0, M::HeadRight), za.pack(1, 1, M::PassedRight),
                         za.pack(0, 1, M::PassedRight), za.pack(1, 0, M::PassedRight),
                         za.pack(0, 0, M::PassedRight)};
  BiPeriodicConfig c({ZigzagAlphabet::B}, mid, {ZigzagAlphabet::B}, 0);

  int heads_seen = 0;
  for (int t = 0; t < 200; ++t) {
    // Validity: no error state anywhere; at most one head per work zone.
    CHECK(c.max_state() != ZigzagAlphabet::E);
    int zone_heads = 0;
    bool in_zone = false;
    for (std::int64_t zpos = c.start() - 2;
         zpos < c.start() + static_cast<std::int64_t>(c.mid().size()) + 2; ++zpos) {
      const State s = c.at(zpos);
      if (za.is_work(s)) {
        if (!in_zone) {
          in_zone = true;
          zone_heads = 0;
        }
        zone_heads += za.is_head(s);
        CHECK(zone_heads <= 1);
      } else {
        in_zone = false;
      }
    }
    heads_seen += zone_heads;
    const BiPeriodicConfig next = step_biperiodic(z, c);
    if (next == c) break;
    c = next;
  }
  // The zone must have frozen: no head anywhere, still no error.
  for (std::int64_t zpos = -8; zpos < 16; ++zpos)
    CHECK_FALSE(za.is_head(c.at(zpos)));
  CHECK(c.max_state() != ZigzagAlphabet::E);
  CHECK(heads_seen > 0);
}

TEST_CASE("each rightward pass applies one inner step to the zone") {
  // The value layer of a working zone must follow the inner rule's orbit:
  // away from boundary effects, the center cell shows the light-cone
  // iterates of the initial zone word, in order. This pins the carried-value
  // mechanics of the rightward pass and the bounce bookkeeping.
  const CARule inner = rule110();
  const CARule z = zigzag(inner);
  const ZigzagAlphabet za = zigzag_alphabet(inner);
  using M = ZigzagAlphabet::Mode;

  const int n = 12;
  const int center = n / 2;
  SplitMix64 rng(55);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<State> w(n);
    for (auto& s : w) s = static_cast<State>(rng.below(2));

    // Iterates of the inner rule at the center, using only what the initial
    // word determines (no boundary assumption), equal-adjacent collapsed.
    std::vector<State> expected{w[center]};
    {
      std::vector<State> cur = w;
      int lo = 0;
      while (static_cast<int>(cur.size()) >= 3 && center - lo - 1 >= 1) {
        cur = detail::step_array(inner, cur, static_cast<std::int64_t>(cur.size()), 1);
        ++lo;
        const State v = cur[center - lo];
        if (v != expected.back()) expected.push_back(v);
      }
    }

    // Zone: head at the left end carrying the first value, the rest waiting.
    std::vector<State> mid{za.pack(w[0], w[0], M::HeadRight)};
    for (int i = 1; i < n; ++i) mid.push_back(za.pack(w[i], w[i], M::PassedRight));
    BiPeriodicConfig c({ZigzagAlphabet::B}, mid, {ZigzagAlphabet::B}, 0);

    std::size_t k = 0;  // consumed prefix of `expected`
    for (int t = 0; t < 600 && k + 1 < expected.size(); ++t) {
      const State s = c.at(center);
      REQUIRE(za.is_work(s));
      const State x = za.x_of(s);
      if (x == expected[k]) {
        // still showing the current iterate
      } else {
        REQUIRE(k + 1 < expected.size());
        CHECK(x == expected[k + 1]);
        ++k;
      }
      c = step_biperiodic(z, c);
    }
    CHECK(k + 1 == expected.size());
  }
}

TEST_CASE("zigzag rejects unsupported inner rules") {
  CHECK_THROWS_AS(zigzag(signed_majority()), input_error);
  // radius 2 inner rule
  std::vector<Offset> wide{{-2, 0}, {0, 0}, {2, 0}};
  std::vector<State> table(8);
  for (std::size_t i = 0; i < 8; ++i) table[i] = static_cast<State>(i % 2);
  CHECK_THROWS_AS(zigzag(CARule(1, {"0", "1"}, wide, table)), input_error);
}

TEST_CASE("signed majority fixed points and a lone dissenter") {
  const CARule f1 = signed_majority();
  CHECK(f1.state_count() == 64);
  CHECK(f1.radius() == 1);

  using C = SignedMajorityCodec;
  const State plus = C::make(+1, {+1, +1, +1, +1, +1});
  const State minus = C::make(-1, {+1, +1, +1, +1, +1});

  SUBCASE("uniform configurations are fixed") {
    const PeriodicConfig up(3, 3, std::vector<State>(9, plus));
    CHECK(step_periodic(f1, up) == up);
    const PeriodicConfig down(3, 3, std::vector<State>(9, minus));
    CHECK(step_periodic(f1, down) == down);
  }
  SUBCASE("a single +1 among -1 flips") {
    std::vector<State> cells(9, minus);
    cells[4] = plus;
    const PeriodicConfig c(3, 3, cells);
    const PeriodicConfig next = step_periodic(f1, c);
    CHECK(next.cells()[4] == minus);  // sum = +1 - 4 = -3
  }
}

TEST_CASE("signed majority opposite-offset table negates the offsets") {
  // The pair symmetry w_{zz'} = w_{z'z} holds by the shape of the formula;
  // what the code can get wrong is the index of the reverse offset.
  using C = SignedMajorityCodec;
  const auto& nbhd = C::neighborhood();
  for (std::size_t j = 0; j < 5; ++j) {
    const Offset o = nbhd[j];
    const Offset back = nbhd[C::opposite(j)];
    CHECK(back[0] == -o[0]);
    CHECK(back[1] == -o[1]);
    CHECK(C::opposite(C::opposite(j)) == j);
  }
}

TEST_CASE("signed majority invariants on random configurations") {
  const CARule f1 = signed_majority();
  using C = SignedMajorityCodec;
  SplitMix64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    PeriodicConfig c = random_torus_2d(rng, 4, 4, 64);
    for (int t = 0; t < 5; ++t) {
      const PeriodicConfig next = step_periodic(f1, c);
      for (std::int64_t i = 0; i < 4; ++i) {
        for (std::int64_t j = 0; j < 4; ++j) {
          const State before = c.at({i, j});
          const State after = next.at({i, j});
          // Sign vectors never change.
          for (std::size_t s = 0; s < 5; ++s)
            CHECK(C::sign(before, s) == C::sign(after, s));
          // Independent recomputation of the weighted sum; it is odd and
          // decides the new inner value.
          int sum = 0;
          const auto& nbhd = C::neighborhood();
          for (std::size_t k = 0; k < 5; ++k) {
            const State other = c.at({i + nbhd[k][0], j + nbhd[k][1]});
            const int w = C::sign(before, k) * C::sign(other, C::opposite(k));
            sum += w * C::inner(other);
          }
          CHECK(sum % 2 != 0);
          CHECK(C::inner(after) == (sum > 0 ? +1 : -1));
        }
      }
      c = next;
    }
  }
}

TEST_SUITE_END();

#include "doctest.h"

#include "casim/builtins.hpp"
#include "casim/engine.hpp"
#include "casim/simulation.hpp"
#include "helpers.hpp"

using namespace casim;
using namespace testutil;

TEST_SUITE_BEGIN("simulation");

TEST_CASE("a rule is a sub/projection of itself") {
  for (const CARule& r : {rule110(), identity_rule(), xor_rule()}) {
    const DecisionReport rep = check_subproj(r, r, {0, 1}, {0, 1});
    CHECK(rep.yes());
  }
}

TEST_CASE("the swapped projection fails on rule 110 with a counterexample") {
  const CARule r = rule110();
  const DecisionReport rep = check_subproj(r, r, {0, 1}, {1, 0});
  CHECK(rep.no());
  // The first window in enumeration order is all-zero: image 0 projects to
  // 1, while the projected window maps to 0.
  CHECK(rep.note.find("0 0 0") != std::string::npos);
}

TEST_CASE("a product projects onto its first factor") {
  const CARule f = rule110();
  const CARule g = product_rule(f, xor_rule());
  std::vector<State> sub, proj;
  for (State s = 0; s < 4; ++s) {
    sub.push_back(s);
    proj.push_back(s / 2);
  }
  CHECK(check_subproj(f, g, sub, proj).yes());
}

TEST_CASE("closure violations are detected") {
  // {0} is not closed under the not rule: its image leaves the sub-alphabet.
  const CARule one = make_identity({"a"});
  const DecisionReport rep = check_subproj(one, not_rule(), {0}, {0});
  CHECK(rep.no());
  CHECK(rep.note.find("closure") != std::string::npos);
}

TEST_CASE("witness validation rejects malformed projections") {
  const CARule r = rule110();
  CHECK_THROWS_AS(check_subproj(r, r, {0, 1}, {0, 0}), input_error);  // not onto
  CHECK_THROWS_AS(check_subproj(r, r, {1, 0}, {0, 1}), input_error);  // unsorted
  CHECK_THROWS_AS(check_subproj(r, r, {0, 1, 1}, {0, 1, 1}), input_error);
  CHECK_THROWS_AS(check_subproj(r, r, {}, {}), input_error);
}

TEST_CASE("search finds the identity witness for a rule against itself") {
  SUBCASE("identity rule") {
    const SearchOutcome out =
        search_strong_simulation(identity_rule(), identity_rule(), 1, 1);
    REQUIRE(out.witness.has_value());
    CHECK(out.witness->shape == BlockShape{{1}, 1});
    CHECK(out.witness->block_states == std::vector<State>{0, 1});
    CHECK(out.witness->projection == std::vector<State>{0, 1});
  }
  SUBCASE("rule 110") {
    const SearchOutcome out = search_strong_simulation(rule110(), rule110(), 1, 1);
    REQUIRE(out.witness.has_value());
    CHECK(out.witness->shape == BlockShape{{1}, 1});
    CHECK(out.witness->projection == std::vector<State>{0, 1});
  }
}

TEST_CASE("every witness found by search passes the checker") {
  const std::vector<std::pair<CARule, CARule>> pairs = {
      {identity_rule(), identity_rule()},
      {rule110(), rule110()},
      {xor_rule(), xor_rule()},
      {identity_rule(), xor_rule()},
      {identity_rule(), or_spread_rule()},
  };
  for (const auto& [f, g] : pairs) {
    const SearchOutcome out = search_strong_simulation(f, g, 2, 2);
    CHECK(out.skipped.empty());
    if (out.witness) {
      CHECK(verify_witness(f, g, *out.witness).yes());
    } else {
      // Exhausted every shape without a witness.
      CHECK(out.searched.size() == 4);
    }
  }
}

TEST_CASE("search respects its preconditions") {
  const CARule big = builtin_rule("zigzag:rule110");
  CHECK_THROWS_AS(search_strong_simulation(big, big, 1, 1), input_error);
  CHECK_THROWS_AS(search_strong_simulation(rule110(), rule110(), 0, 1),
                  input_error);
}

namespace {

// A passing check must mean real orbit transport: projecting the rescaled
// orbit cell-wise equals running the small rule on the projected start.
void check_orbit_transport(const CARule& f, const CARule& g,
                           const BlockShape& shape,
                           const std::vector<State>& sub,
                           const std::vector<State>& proj,
                           std::uint64_t seed) {
  const CARule big = rescale(g, shape);
  REQUIRE(check_subproj(f, big, sub, proj).yes());
  std::vector<State> pi(big.state_count(), 0);
  for (std::size_t i = 0; i < sub.size(); ++i) pi[sub[i]] = proj[i];

  SplitMix64 rng(seed);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<State> word(1 + rng.below(8));
    for (auto& s : word) s = sub[rng.below(sub.size())];
    PeriodicConfig big_cfg(word);
    std::vector<State> small_word(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) small_word[i] = pi[word[i]];
    PeriodicConfig small_cfg(small_word);
    for (int t = 0; t < 5; ++t) {
      big_cfg = step_periodic(big, big_cfg);
      small_cfg = step_periodic(f, small_cfg);
      for (std::size_t i = 0; i < word.size(); ++i)
        CHECK(pi[big_cfg.cells()[i]] == small_cfg.cells()[i]);
    }
  }
}

}  // namespace

TEST_CASE("accepted witnesses transport orbits") {
  SUBCASE("projection onto a product factor") {
    check_orbit_transport(rule110(), product_rule(rule110(), xor_rule()),
                          {{1}, 1}, {0, 1, 2, 3}, {0, 0, 1, 1}, 71);
  }
  SUBCASE("a rule embeds in its own rescaling") {
    const BlockShape shape{{2}, 1};
    const CARule f = rescale(xor_rule(), shape);
    check_orbit_transport(f, xor_rule(), shape, {0, 1, 2, 3}, {0, 1, 2, 3}, 72);
  }
}

TEST_SUITE_END();

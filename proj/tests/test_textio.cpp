#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "casim/builtins.hpp"
#include "casim/circuit.hpp"
#include "casim/textio.hpp"
#include "casim/zigzag.hpp"
#include "helpers.hpp"

using namespace casim;
using namespace testutil;

TEST_SUITE_BEGIN("textio");

TEST_CASE("rule files parse and serialize") {
  const std::string text =
      "dimension 1\n"
      "states 0 1\n"
      "neighborhood (0)\n"
      "rule 0 -> 0\n"
      "rule 1 -> 1\n";
  const CARule r = parse_rule(text);
  CHECK(r.state_count() == 2);
  CHECK(r.radius() == 0);
  const State w[] = {1};
  CHECK(r.eval(w) == 1);
  // Round trip through the serializer.
  const CARule r2 = parse_rule(serialize_rule(r));
  CHECK(r2.table() == r.table());
  CHECK(r2.neighborhood() == r.neighborhood());
}

TEST_CASE("rule parsing diagnoses problems with positions") {
  SUBCASE("missing window without a default") {
    const std::string text =
        "dimension 1\nstates 0 1\nneighborhood (-1) (0) (1)\n"
        "rule 0 0 0 -> 0\n";
    try {
      parse_rule(text);
      FAIL("expected an error");
    } catch (const input_error& e) {
      CHECK(std::string(e.what()).find("missing window") != std::string::npos);
      CHECK(std::string(e.what()).find("0 0 1") != std::string::npos);
    }
  }
  SUBCASE("unknown state names carry line and column") {
    const std::string text =
        "dimension 1\nstates 0 1\nneighborhood (0)\nrule 2 -> 0\n";
    try {
      parse_rule(text);
      FAIL("expected an error");
    } catch (const input_error& e) {
      CHECK(std::string(e.what()).find("4:6") != std::string::npos);
    }
  }
  SUBCASE("default unchanged needs the center") {
    const std::string text =
        "dimension 1\nstates 0 1\nneighborhood (1)\ndefault -> unchanged\n";
    CHECK_THROWS_AS(parse_rule(text), input_error);
  }
  SUBCASE("conflicting duplicates are rejected") {
    const std::string text =
        "dimension 1\nstates 0 1\nneighborhood (0)\n"
        "rule 0 -> 0\nrule 0 -> 1\ndefault -> 0\n";
    CHECK_THROWS_AS(parse_rule(text), input_error);
  }
  SUBCASE("bad offsets are rejected") {
    const std::string text =
        "dimension 1\nstates 0 1\nneighborhood (0,1)\ndefault -> 0\n";
    CHECK_THROWS_AS(parse_rule(text), input_error);
  }
}

TEST_CASE("2D rule files parse offsets and defaults") {
  const std::string text =
      "dimension 2\n"
      "states 0 1\n"
      "neighborhood (0,0) (0,1) (1,0) (0,-1) (-1,0)\n"
      "rule 0 1 1 1 1 -> 1\n"
      "default -> unchanged\n";
  const CARule r = parse_rule(text);
  CHECK(r.dimension() == 2);
  CHECK(r.radius() == 1);
  const State grow[] = {0, 1, 1, 1, 1};
  CHECK(r.eval(grow) == 1);
  const State keep[] = {1, 0, 0, 0, 0};
  CHECK(r.eval(keep) == 1);
  const CARule back = parse_rule(serialize_rule(r));
  CHECK(back.table() == r.table());
  CHECK(back.neighborhood() == r.neighborhood());
}

TEST_CASE("a default completes the table") {
  const std::string text =
      "dimension 1\nstates a b\nneighborhood (-1) (0) (1)\n"
      "rule b b b -> a\n"
      "default -> unchanged\n";
  const CARule r = parse_rule(text);
  const State all_b[] = {1, 1, 1};
  CHECK(r.eval(all_b) == 0);
  const State mixed[] = {0, 1, 0};
  CHECK(r.eval(mixed) == 1);  // unchanged center
}

TEST_CASE("config files round-trip") {
  const CARule r = rule110();
  SUBCASE("bi-periodic") {
    const std::string text = "left: 0\nmid: 1\nright: 0\norigin: 0\n";
    const Config c = parse_config(text, r);
    const auto* b = std::get_if<BiPeriodicConfig>(&c);
    REQUIRE(b);
    CHECK(b->at(0) == 1);
    CHECK(serialize_config(c, r) == text);
  }
  SUBCASE("compact words") {
    const Config c = parse_config("period: 0110\n", r);
    CHECK(std::get<PeriodicConfig>(c).cells() ==
          std::vector<State>{0, 1, 1, 0});
  }
  SUBCASE("2D grids") {
    const CARule f1 = builtin_rule("signed-majority");
    const std::string text = "grid:\n++++++ ------\n------ ++++++\n";
    const Config c = parse_config(text, f1);
    const auto& p = std::get<PeriodicConfig>(c);
    CHECK(p.period(0) == 2);
    CHECK(p.period(1) == 2);
    const Config c2 = parse_config(serialize_config(c, f1), f1);
    CHECK(std::get<PeriodicConfig>(c2) == p);
  }
}

TEST_CASE("random values survive the round trip") {
  SplitMix64 rng(101);
  const CARule z = builtin_rule("zigzag:rule110");
  for (int trial = 0; trial < 25; ++trial) {
    const BiPeriodicConfig c = random_biperiodic(rng, z.state_count());
    const Config back = parse_config(serialize_config(Config(c), z), z);
    CHECK(std::get<BiPeriodicConfig>(back) == c);
  }
  for (int trial = 0; trial < 25; ++trial) {
    const PeriodicConfig c = random_torus_1d(rng, 1 + rng.below(9), 2);
    const Config back = parse_config(serialize_config(Config(c), rule110()),
                                     rule110());
    CHECK(std::get<PeriodicConfig>(back) == c);
  }
}

TEST_CASE("patterns parse both shapes") {
  const CARule r = rule110();
  const FinitePattern u =
      parse_pattern("window: 1 1 0\n", r);
  CHECK(u.support() == 1);
  CHECK(parse_pattern(serialize_pattern(u, r), r) == u);
  CHECK_THROWS_AS(parse_pattern("window: 1 1\n", r), input_error);

  const CARule f1 = builtin_rule("signed-majority");
  const FinitePattern sq = FinitePattern(2, 1, std::vector<State>(9, 5));
  CHECK(parse_pattern(serialize_pattern(sq, f1), f1) == sq);
}

TEST_CASE("orders round-trip") {
  const CARule r = or_spread_rule();
  const StateOrder o = parse_order("1 <= 0\n", r);
  CHECK(o.leq(1, 0));
  CHECK(parse_order(serialize_order(o, r), r) == o);
  CHECK_THROWS_AS(parse_order("0 <= 1\n1 <= 0\n", r), input_error);
}

TEST_CASE("witnesses round-trip") {
  const CARule f = rule110();
  const CARule g = rule110();
  const SimulationWitness w{{{2}, 2}, {0, 1, 2, 3}, {0, 1, 0, 1}};
  const std::string text = serialize_witness(w, f, g);
  CHECK(parse_witness(text, f, g) == w);
  CHECK_THROWS_AS(parse_witness("t: 1\nblocks:\n(0)\npi:\n(0) -> 0\n", f, g),
                  input_error);  // m: missing
}

TEST_CASE("libraries round-trip through a directory") {
  const auto [rule, lib] = reference_wire_ca();
  const std::string dir =
      (std::filesystem::temp_directory_path() / "casim_lib_test").string();
  std::filesystem::remove_all(dir);
  serialize_library(lib, dir);
  const BlockLibrary back = parse_library(dir);
  CHECK(back.block_side == lib.block_side);
  CHECK(back.delay == lib.delay);
  CHECK(back.alphabet == lib.alphabet);
  REQUIRE(back.blocks.size() == lib.blocks.size());
  for (const Block& b : lib.blocks) {
    bool found = false;
    for (const Block& c : back.blocks)
      if (b.gate == c.gate && b.side_values == c.side_values &&
          b.pattern == c.pattern)
        found = true;
    CHECK(found);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("library parsing diagnoses structural problems") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "casim_badlib";
  fs::remove_all(dir);
  SUBCASE("a missing meta file is an error") {
    fs::create_directories(dir);
    CHECK_THROWS_AS(parse_library(dir.string()), input_error);
  }
  SUBCASE("incomplete libraries are rejected") {
    const auto [rule, lib] = reference_wire_ca();
    serialize_library(lib, dir.string());
    fs::remove(dir / "block_0000.txt");  // drops one AND type
    CHECK_THROWS_AS(parse_library(dir.string()), input_error);
  }
  fs::remove_all(dir);
}

TEST_CASE("reports serialize the expected lines") {
  DecisionReport r = DecisionReport::make_yes_at(3);
  r.measured = {1, 2};
  r.note = "evidence";
  CHECK(serialize_report(r) ==
        "verdict: yes\nwitness_time: 3\ntransient: 1\ncycle: 2\nnote: evidence\n");
  CHECK(serialize_report(DecisionReport::make_unknown()) == "verdict: unknown\n");
}

TEST_CASE("rule specs resolve builtins, wrappers and files") {
  CHECK(rule_from_spec("rule110").state_count() == 2);
  CHECK(rule_from_spec("zigzag:rule110").state_count() == 19);
  CHECK(rule_from_spec("signed-majority").state_count() == 64);
  const std::string path =
      (std::filesystem::temp_directory_path() / "casim_rule_test.txt").string();
  write_file(path, serialize_rule(xor_rule()));
  CHECK(rule_from_spec(path).table() == xor_rule().table());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(rule_from_spec("missing-rule"), input_error);
}

TEST_CASE("serializing a function-backed rule is a resource error") {
  CHECK_THROWS_AS(serialize_rule(builtin_rule("signed-majority")),
                  resource_error);
}

TEST_SUITE_END();

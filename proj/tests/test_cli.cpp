#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "casim/textio.hpp"

extern std::string g_cli_path;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs the casim binary; stderr is folded into stdout.
RunResult run_cli(const std::string& args) {
  const std::string cmd = g_cli_path + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 1024> buf;
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << contents;
  return path.string();
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("pred prints the state and exits 0") {
  REQUIRE_FALSE(g_cli_path.empty());
  const RunResult r = run_cli("pred --rule rule110 --t 1 --window 110");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("cycle with phi reports no for a fixed point") {
  const std::string cfg = temp_file("casim_cli_p3.txt", "period: 0 1 0\n");
  const RunResult r =
      run_cli("cycle --rule identity --config " + cfg + " --phi 1");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("verdict: no") != std::string::npos);
  CHECK(r.out.find("cycle: 1") != std::string::npos);
}

TEST_CASE("check-freezing prints the violating cycle for not") {
  const RunResult r = run_cli("check-freezing --rule not");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("cycle:") != std::string::npos);
}

TEST_CASE("check-freezing prints generators for or-spread") {
  const RunResult r = run_cli("check-freezing --rule or-spread");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 <= 0\n");
}

TEST_CASE("ubpred exits 2 on unknown") {
  const std::string cfg =
      temp_file("casim_cli_zero.txt", "left: 0\nmid:\nright: 0\norigin: 0\n");
  const RunResult r = run_cli("ubpred --rule rule110 --config " + cfg +
                              " --q 1 --horizon 50");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("verdict: unknown") != std::string::npos);
}

TEST_CASE("ubpred-zigzag answers exactly") {
  const std::string cfg =
      temp_file("casim_cli_blank.txt", "left: b\nmid:\nright: b\norigin: 0\n");
  const RunResult yes =
      run_cli("ubpred-zigzag --rule rule110 --config " + cfg + " --q b");
  CHECK(yes.exit_code == 0);
  CHECK(yes.out.find("witness_time: 0") != std::string::npos);
  const RunResult no =
      run_cli("ubpred-zigzag --rule rule110 --config " + cfg + " --q e");
  CHECK(no.exit_code == 1);
}

TEST_CASE("unknown flags exit 3 with usage on stderr") {
  const RunResult r = run_cli("pred --no-such-flag");
  CHECK(r.exit_code == 3);
}

TEST_CASE("search-sim finds and verify-sim confirms") {
  const std::string wpath =
      (std::filesystem::temp_directory_path() / "casim_cli_witness.txt").string();
  const RunResult s = run_cli("search-sim --f rule110 --g rule110 --m-max 1 "
                              "--t-max 1 --out " + wpath);
  CHECK(s.exit_code == 0);
  const RunResult v =
      run_cli("verify-sim --f rule110 --g rule110 --witness " + wpath);
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("verdict: yes") != std::string::npos);
  std::filesystem::remove(wpath);
}

TEST_CASE("verify-sim checks the general two-sided relation") {
  // xor^[2,2] embeds in xor^[2,2] under the identity projection; the pi
  // targets are block tuples of the rescaled simulated rule.
  const std::string w = temp_file("casim_cli_w2.txt",
                                  "m: 2\nt: 2\n"
                                  "blocks:\n(0,0)\n(0,1)\n(1,0)\n(1,1)\n"
                                  "pi:\n(0,0) -> (0,0)\n(0,1) -> (0,1)\n"
                                  "(1,0) -> (1,0)\n(1,1) -> (1,1)\n");
  const RunResult r = run_cli(
      "verify-sim --f xor --g xor --f-m 2 --f-t 2 --witness " + w);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict: yes") != std::string::npos);
}

TEST_CASE("check-circuit runs the reference library") {
  const RunResult r = run_cli(
      "check-circuit --library ref --mode repeatable --rounds 2 --count 5 "
      "--seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict: yes") != std::string::npos);
}

TEST_CASE("simulate emits canonical text") {
  const std::string cfg =
      temp_file("casim_cli_one.txt", "left: 0\nmid: 1\nright: 0\norigin: 0\n");
  const RunResult r =
      run_cli("simulate --rule rule110 --config " + cfg + " --steps 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "left: 0\nmid: 1 1\nright: 0\norigin: 1\n");
}

TEST_CASE("render writes numbered frames for 2D input") {
  const std::string cfg = temp_file(
      "casim_cli_grid.txt", "grid:\n++++++ ------\n------ ++++++\n");
  const auto dir =
      (std::filesystem::temp_directory_path() / "casim_cli_frames").string();
  std::filesystem::remove_all(dir);
  const RunResult r = run_cli("render --rule signed-majority --config " + cfg +
                              " --steps 2 --frames-dir " + dir);
  CHECK(r.exit_code == 0);
  CHECK(std::filesystem::exists(dir + "/frame_0000.pgm"));
  CHECK(std::filesystem::exists(dir + "/frame_0002.pgm"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("render writes a PGM file") {
  const std::string cfg =
      temp_file("casim_cli_r.txt", "left: 0\nmid: 1\nright: 0\norigin: 0\n");
  const auto out =
      (std::filesystem::temp_directory_path() / "casim_cli_r.pgm").string();
  const RunResult r = run_cli("render --rule rule110 --config " + cfg +
                              " --steps 5 --half-width 8 --out " + out);
  CHECK(r.exit_code == 0);
  const std::string img = casim::read_file(out);
  CHECK(img.rfind("P5\n17 6\n255\n", 0) == 0);
  std::filesystem::remove(out);
}

TEST_SUITE_END();

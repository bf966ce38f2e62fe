#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace casim {

// State index into a rule's alphabet.
using State = std::uint32_t;

// Lattice position. Component 1 is ignored in dimension 1.
using Coord = std::array<std::int64_t, 2>;

// Neighborhood offset. Component 1 is ignored in dimension 1.
using Offset = std::array<int, 2>;

// A caller handed us something malformed: bad state ids, unparsable files,
// violated preconditions. Maps to exit code 3 in the CLI.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The requested computation exceeds a configured budget. Budgets are explicit
// inputs (see Limits); nothing is ever silently truncated. Exit code 4.
class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Resource budgets for the potentially expensive operations. All values are
// counts, not bytes. The defaults are sized for desk-scale instances.
struct Limits {
  std::uint64_t max_table_entries = std::uint64_t{1} << 20;  // dense rule tables
  std::uint64_t max_enumeration = std::uint64_t{1} << 22;    // exhaustive window scans
  std::uint64_t max_orbit_cells = std::uint64_t{1} << 26;    // cycle detection storage
  std::uint64_t max_config_cells = std::uint64_t{1} << 24;   // bi-periodic middle growth
  std::uint64_t max_search_nodes = std::uint64_t{1} << 22;   // witness search tree
};

// Deterministic generator used wherever seeded sampling is needed. Plain
// splitmix64; identical output on every platform, unlike the standard
// distributions.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform-enough value in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

}  // namespace casim

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casim/config.hpp"
#include "casim/report.hpp"
#include "casim/rule.hpp"

namespace casim {

// Sides in tuple order.
enum Side : int { North = 0, East = 1, South = 2, West = 3 };

// One of the block-level Boolean functions: AND, OR and CROSS read north and
// west; FORK reads west; WIRE(i, o) moves one bit from side i to side o; NOP
// is the filler and counts as having four inputs and four outputs.
struct GateType {
  enum class Kind { And, Or, Cross, Nop, Fork, Wire };

  Kind kind = Kind::Nop;
  int wire_in = -1;
  int wire_out = -1;

  static GateType wire(int in, int out);

  bool is_input_side(int side) const;
  bool is_output_side(int side) const;
  std::string name() const;  // AND, OR, CROSS, NOP, FORK, WIRE<i><o>
  static GateType from_name(const std::string& name);

  auto operator<=>(const GateType&) const = default;
};

// The displayed gate semantics; non-input slots of io are ignored and every
// gate maps all-zero to all-zero.
std::array<int, 4> gate_eval(const GateType& g, const std::array<int, 4>& io);

// Img(g): the realizable side-value tuples, sorted.
std::vector<std::array<int, 4>> gate_image(const GateType& g);

// The planar wiring toolkit: NOP, FORK and the twelve wires.
std::vector<GateType> wiring_gates();
// Wiring toolkit plus AND, OR, CROSS.
std::vector<GateType> all_gates();

// An N x N pattern with a declared type f_u.
struct Block {
  GateType gate;
  std::array<int, 4> side_values{0, 0, 0, 0};
  std::vector<State> pattern;  // N*N, row-major

  bool operator==(const Block&) const = default;
};

// A complete family of typed blocks for one automaton: for every gate
// present and every tuple in its image there is at least one block, the
// wiring toolkit is fully present, and all patterns share the side length.
struct BlockLibrary {
  std::int64_t block_side = 1;             // N
  std::int64_t delay = 1;                  // steps per simulated gate round
  std::vector<std::string> alphabet;       // must match the checked rule
  std::vector<Block> blocks;

  // Throws input_error when an invariant fails.
  void validate() const;

  std::vector<std::size_t> blocks_of_type(const GateType& g,
                                          const std::array<int, 4>& u) const;
  // Block ids whose pattern equals `pattern`.
  std::vector<std::size_t> blocks_matching(const std::vector<State>& pattern) const;
  // Sorted list of distinct gates with at least one block.
  std::vector<GateType> gates_present() const;
};

enum class BoundaryMode { Torus, Padded };

// A grid of chosen blocks. Adjacency must respect gate typing: a non-NOP
// output side may only face an input side of the neighbor (NOP accepts and
// provides on all four sides).
struct Assembly {
  std::int64_t rows = 0, cols = 0;
  std::vector<std::size_t> block_ids;  // row-major
  BoundaryMode boundary = BoundaryMode::Torus;

  std::size_t id_at(std::int64_t r, std::int64_t c) const {
    return block_ids[r * cols + c];
  }
};

// Builds an assembly from per-cell type choices, checking availability and
// adjacency; the first block of each requested type is used. Errors name the
// offending cell or edge.
Assembly assemble(const BlockLibrary& lib,
                  std::int64_t rows, std::int64_t cols,
                  const std::vector<std::pair<GateType, std::array<int, 4>>>& layout,
                  BoundaryMode boundary);

// Adjacency validation alone; returns a message for the first bad edge.
std::optional<std::string> adjacency_violation(const BlockLibrary& lib,
                                               const Assembly& a);

// The cell configuration an assembly denotes (torus assemblies only).
PeriodicConfig assembly_config(const BlockLibrary& lib, const Assembly& a);

// Seeded generator specification for the checkers: `count` random
// adjacency-valid assemblies with the given size bounds, plus any explicit
// assemblies, all checked deterministically.
struct AssemblySpec {
  std::uint64_t seed = 0;
  int count = 0;
  std::int64_t min_rows = 1, max_rows = 3;
  std::int64_t min_cols = 1, max_cols = 3;
  BoundaryMode boundary = BoundaryMode::Torus;
  std::vector<Assembly> explicit_assemblies;
};

// Transient-mode check: on every generated valid configuration, after
// `delay` steps the configuration must re-segment into library blocks, and
// every block that started with type f_(0,...,0) must carry the type f_v
// computed from the side values its neighbors showed at the start. Torus
// assemblies are checked exactly; padded assemblies embed in an exact
// neighborhood of quiescent filler wide enough for the light cone. A finite
// sample can only falsify, never prove, the simulation property.
DecisionReport check_transient(const CARule& rule, const BlockLibrary& lib,
                               const AssemblySpec& spec, const Limits& limits = {});

// Repeatable-mode check: the same transition requirement applied to every
// block of every generated configuration, re-applied for `rounds`
// consecutive delay windows. Failures report the round index.
DecisionReport check_repeatable(const CARule& rule, const BlockLibrary& lib,
                                const AssemblySpec& spec, int rounds,
                                const Limits& limits = {});

// A synthetic signal-routing automaton with one cell per block (N = 1,
// delay 1) and a complete library over AND, OR, CROSS and the wiring
// toolkit. Every block recomputes its gate every step, so the library
// passes the repeatable check; it exists to validate the checkers.
std::pair<CARule, BlockLibrary> reference_wire_ca();

}  // namespace casim

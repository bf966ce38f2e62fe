#include "casim/circuit.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <memory>

#include "casim/engine.hpp"

namespace casim {

GateType GateType::wire(int in, int out) {
  if (in < 0 || in > 3 || out < 0 || out > 3 || in == out)
    throw input_error("wire gates need two distinct sides");
  return {Kind::Wire, in, out};
}

bool GateType::is_input_side(int side) const {
  switch (kind) {
    case Kind::And:
    case Kind::Or:
    case Kind::Cross: return side == North || side == West;
    case Kind::Nop: return true;
    case Kind::Fork: return side == West;
    case Kind::Wire: return side == wire_in;
  }
  return false;
}

bool GateType::is_output_side(int side) const {
  switch (kind) {
    case Kind::And:
    case Kind::Or: return side == East;
    case Kind::Cross: return side == East || side == South;
    case Kind::Nop: return true;
    case Kind::Fork: return side == East || side == South;
    case Kind::Wire: return side == wire_out;
  }
  return false;
}

std::string GateType::name() const {
  switch (kind) {
    case Kind::And: return "AND";
    case Kind::Or: return "OR";
    case Kind::Cross: return "CROSS";
    case Kind::Nop: return "NOP";
    case Kind::Fork: return "FORK";
    case Kind::Wire:
      return "WIRE" + std::to_string(wire_in) + std::to_string(wire_out);
  }
  return "?";
}

GateType GateType::from_name(const std::string& name) {
  if (name == "AND") return {Kind::And};
  if (name == "OR") return {Kind::Or};
  if (name == "CROSS") return {Kind::Cross};
  if (name == "NOP") return {Kind::Nop};
  if (name == "FORK") return {Kind::Fork};
  if (name.size() == 6 && name.rfind("WIRE", 0) == 0 &&
      std::isdigit(static_cast<unsigned char>(name[4])) &&
      std::isdigit(static_cast<unsigned char>(name[5])))
    return wire(name[4] - '0', name[5] - '0');
  throw input_error("unknown gate name: '" + name + "'");
}

std::array<int, 4> gate_eval(const GateType& g, const std::array<int, 4>& io) {
  switch (g.kind) {
    case GateType::Kind::And:
      return {0, std::min(io[North], io[West]), 0, 0};
    case GateType::Kind::Or:
      return {0, std::max(io[North], io[West]), 0, 0};
    case GateType::Kind::Cross:
      return {0, io[West], io[North], 0};
    case GateType::Kind::Nop:
      return {0, 0, 0, 0};
    case GateType::Kind::Fork:
      return {0, io[West], io[West], 0};
    case GateType::Kind::Wire: {
      std::array<int, 4> out{0, 0, 0, 0};
      out[g.wire_out] = io[g.wire_in];
      return out;
    }
  }
  return {0, 0, 0, 0};
}

std::vector<std::array<int, 4>> gate_image(const GateType& g) {
  std::vector<std::array<int, 4>> out;
  for (int bits = 0; bits < 16; ++bits) {
    const std::array<int, 4> io{bits & 1, (bits >> 1) & 1, (bits >> 2) & 1,
                                (bits >> 3) & 1};
    out.push_back(gate_eval(g, io));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GateType> wiring_gates() {
  std::vector<GateType> out{{GateType::Kind::Nop}, {GateType::Kind::Fork}};
  for (int i = 0; i < 4; ++i)
    for (int o = 0; o < 4; ++o)
      if (i != o) out.push_back(GateType::wire(i, o));
  return out;
}

std::vector<GateType> all_gates() {
  std::vector<GateType> out{
      {GateType::Kind::And}, {GateType::Kind::Or}, {GateType::Kind::Cross}};
  for (const GateType& g : wiring_gates()) out.push_back(g);
  return out;
}

void BlockLibrary::validate() const {
  if (block_side < 1) throw input_error("block side must be >= 1");
  if (delay < 1) throw input_error("delay must be >= 1");
  if (blocks.empty()) throw input_error("library has no blocks");
  for (const Block& b : blocks) {
    if (static_cast<std::int64_t>(b.pattern.size()) != block_side * block_side)
      throw input_error("block pattern size does not match the block side");
    for (State s : b.pattern)
      if (s >= alphabet.size())
        throw input_error("block pattern uses states outside the alphabet");
    const auto img = gate_image(b.gate);
    if (std::find(img.begin(), img.end(), b.side_values) == img.end())
      throw input_error("block side values are not in the gate's image (" +
                        b.gate.name() + ")");
  }
  // Wiring toolkit mandatory; every present gate fully covered.
  std::vector<GateType> need = wiring_gates();
  for (const GateType& g : gates_present())
    if (std::find(need.begin(), need.end(), g) == need.end()) need.push_back(g);
  for (const GateType& g : need) {
    for (const auto& u : gate_image(g)) {
      if (blocks_of_type(g, u).empty())
        throw input_error("library lacks a block of type " + g.name() + "_(" +
                          std::to_string(u[0]) + std::to_string(u[1]) +
                          std::to_string(u[2]) + std::to_string(u[3]) + ")");
    }
  }
}

std::vector<std::size_t> BlockLibrary::blocks_of_type(
    const GateType& g, const std::array<int, 4>& u) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].gate == g && blocks[i].side_values == u) out.push_back(i);
  return out;
}

std::vector<std::size_t> BlockLibrary::blocks_matching(
    const std::vector<State>& pattern) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].pattern == pattern) out.push_back(i);
  return out;
}

std::vector<GateType> BlockLibrary::gates_present() const {
  std::vector<GateType> out;
  for (const Block& b : blocks)
    if (std::find(out.begin(), out.end(), b.gate) == out.end())
      out.push_back(b.gate);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

int opposite_side(int side) {
  switch (side) {
    case North: return South;
    case East: return West;
    case South: return North;
    default: return East;
  }
}

// Edge rule: across every shared edge, an output side of a non-NOP gate must
// face an input side, in both directions. NOP matches anything.
bool edge_ok(const GateType& a, int side_a, const GateType& b) {
  if (a.kind == GateType::Kind::Nop || b.kind == GateType::Kind::Nop) return true;
  const int side_b = opposite_side(side_a);
  if (a.is_output_side(side_a) && !b.is_input_side(side_b)) return false;
  if (b.is_output_side(side_b) && !a.is_input_side(side_a)) return false;
  return true;
}

}  // namespace

std::optional<std::string> adjacency_violation(const BlockLibrary& lib,
                                               const Assembly& a) {
  auto gate_at = [&](std::int64_t r, std::int64_t c) {
    return lib.blocks[a.id_at(r, c)].gate;
  };
  for (std::int64_t r = 0; r < a.rows; ++r) {
    for (std::int64_t c = 0; c < a.cols; ++c) {
      // east edge
      if (c + 1 < a.cols || a.boundary == BoundaryMode::Torus) {
        const std::int64_t c2 = (c + 1) % a.cols;
        if (!edge_ok(gate_at(r, c), East, gate_at(r, c2)))
          return "blocks (" + std::to_string(r) + "," + std::to_string(c) +
                 ") and (" + std::to_string(r) + "," + std::to_string(c2) +
                 ") pair an output side with a non-input side";
      }
      // south edge
      if (r + 1 < a.rows || a.boundary == BoundaryMode::Torus) {
        const std::int64_t r2 = (r + 1) % a.rows;
        if (!edge_ok(gate_at(r, c), South, gate_at(r2, c)))
          return "blocks (" + std::to_string(r) + "," + std::to_string(c) +
                 ") and (" + std::to_string(r2) + "," + std::to_string(c) +
                 ") pair an output side with a non-input side";
      }
    }
  }
  return std::nullopt;
}

Assembly assemble(const BlockLibrary& lib, std::int64_t rows, std::int64_t cols,
                  const std::vector<std::pair<GateType, std::array<int, 4>>>& layout,
                  BoundaryMode boundary) {
  if (rows < 1 || cols < 1) throw input_error("assembly needs a positive grid");
  if (static_cast<std::int64_t>(layout.size()) != rows * cols)
    throw input_error("layout size does not match the grid");
  Assembly a;
  a.rows = rows;
  a.cols = cols;
  a.boundary = boundary;
  for (const auto& [gate, u] : layout) {
    const auto ids = lib.blocks_of_type(gate, u);
    if (ids.empty())
      throw input_error("library has no block of type " + gate.name() + "_(" +
                        std::to_string(u[0]) + std::to_string(u[1]) +
                        std::to_string(u[2]) + std::to_string(u[3]) + ")");
    a.block_ids.push_back(ids.front());
  }
  if (auto bad = adjacency_violation(lib, a)) throw input_error(*bad);
  return a;
}

PeriodicConfig assembly_config(const BlockLibrary& lib, const Assembly& a) {
  const std::int64_t n = lib.block_side;
  std::vector<State> cells(a.rows * n * a.cols * n);
  const std::int64_t width = a.cols * n;
  for (std::int64_t r = 0; r < a.rows; ++r)
    for (std::int64_t c = 0; c < a.cols; ++c) {
      const Block& b = lib.blocks[a.id_at(r, c)];
      for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
          cells[(r * n + i) * width + c * n + j] = b.pattern[i * n + j];
    }
  return PeriodicConfig(a.rows * n, a.cols * n, std::move(cells));
}

namespace {

struct TileFailure {
  std::string what;
};

// Per-tile bookkeeping for one checked assembly: the gate is pinned by the
// initial layout, the expected side values are recomputed every round from
// what the neighbors showed at the round start.
struct RoundState {
  std::vector<GateType> gates;
  std::vector<std::array<int, 4>> values;
};

std::array<int, 4> read_inputs(const RoundState& st, const Assembly& a,
                               std::int64_t r, std::int64_t c,
                               const std::array<int, 4>* padding) {
  auto value_of = [&](std::int64_t rr, std::int64_t cc) -> std::array<int, 4> {
    if (a.boundary == BoundaryMode::Torus) {
      rr = (rr % a.rows + a.rows) % a.rows;
      cc = (cc % a.cols + a.cols) % a.cols;
      return st.values[rr * a.cols + cc];
    }
    if (rr < 0 || rr >= a.rows || cc < 0 || cc >= a.cols) return *padding;
    return st.values[rr * a.cols + cc];
  };
  return {value_of(r - 1, c)[South], value_of(r, c + 1)[West],
          value_of(r + 1, c)[North], value_of(r, c - 1)[East]};
}

std::string tile_name(std::int64_t r, std::int64_t c) {
  return "tile (" + std::to_string(r) + "," + std::to_string(c) + ")";
}

// Runs `rounds` delay windows over one assembly. In transient mode only the
// first round is checked and only for blocks that started all-quiescent; in
// repeatable mode every block is checked every round. Padded assemblies are
// embedded once in a quiescent NOP sea wide enough for the whole horizon's
// light cone and evolved continuously, so the checked interior matches the
// infinite-padding orbit exactly.
std::optional<TileFailure> run_assembly(const CARule& rule, const BlockLibrary& lib,
                                        const Assembly& a, int rounds,
                                        bool repeatable, const Limits& limits) {
  const std::int64_t n = lib.block_side;
  if (static_cast<std::uint64_t>(a.rows * n * a.cols * n) > limits.max_config_cells)
    throw resource_error("assembly exceeds the cell budget");

  RoundState st;
  st.gates.reserve(a.block_ids.size());
  st.values.reserve(a.block_ids.size());
  for (std::size_t id : a.block_ids) {
    st.gates.push_back(lib.blocks[id].gate);
    st.values.push_back(lib.blocks[id].side_values);
  }
  const std::array<int, 4> quiet{0, 0, 0, 0};

  const std::int64_t horizon = lib.delay * rounds;
  std::vector<State> padded;      // shrinking open-boundary array
  std::int64_t prows = 0, pcols = 0, pad = 0;
  if (a.boundary == BoundaryMode::Padded) {
    const std::int64_t guard =
        (static_cast<std::int64_t>(rule.radius()) * horizon + n - 1) / n + 1;
    const auto nop_ids = lib.blocks_of_type({GateType::Kind::Nop}, quiet);
    const Block& nop = lib.blocks[nop_ids.front()];
    prows = (a.rows + 2 * guard) * n;
    pcols = (a.cols + 2 * guard) * n;
    if (static_cast<std::uint64_t>(prows * pcols) > limits.max_config_cells)
      throw resource_error("padded assembly exceeds the cell budget");
    padded.assign(prows * pcols, 0);
    for (std::int64_t i = 0; i < prows; ++i)
      for (std::int64_t j = 0; j < pcols; ++j)
        padded[i * pcols + j] = nop.pattern[(i % n) * n + (j % n)];
    pad = guard * n;
    const std::vector<State> interior = assembly_config(lib, a).cells();
    for (std::int64_t i = 0; i < a.rows * n; ++i)
      for (std::int64_t j = 0; j < a.cols * n; ++j)
        padded[(i + pad) * pcols + (j + pad)] = interior[i * (a.cols * n) + j];
  }

  std::vector<State> cells = assembly_config(lib, a).cells();
  for (int round = 1; round <= rounds; ++round) {
    std::vector<State> after;
    if (a.boundary == BoundaryMode::Torus) {
      PeriodicConfig cfg(a.rows * n, a.cols * n, cells);
      for (std::int64_t t = 0; t < lib.delay; ++t) cfg = step_periodic(rule, cfg);
      after = cfg.cells();
    } else {
      for (std::int64_t t = 0; t < lib.delay; ++t) {
        padded = detail::step_array(rule, padded, prows, pcols);
        prows -= 2 * rule.radius();
        pcols -= 2 * rule.radius();
        pad -= rule.radius();
      }
      after.resize(a.rows * n * a.cols * n);
      for (std::int64_t i = 0; i < a.rows * n; ++i)
        for (std::int64_t j = 0; j < a.cols * n; ++j)
          after[i * (a.cols * n) + j] = padded[(i + pad) * pcols + (j + pad)];
    }

    RoundState next = st;
    std::vector<State> tile(n * n);
    for (std::int64_t r = 0; r < a.rows; ++r) {
      for (std::int64_t c = 0; c < a.cols; ++c) {
        for (std::int64_t i = 0; i < n; ++i)
          for (std::int64_t j = 0; j < n; ++j)
            tile[i * n + j] = after[(r * n + i) * (a.cols * n) + c * n + j];

        const auto matches = lib.blocks_matching(tile);
        if (matches.empty())
          return TileFailure{"round " + std::to_string(round) + ": " +
                             tile_name(r, c) +
                             " no longer matches any library block"};

        const GateType gate = st.gates[r * a.cols + c];
        const bool must_check =
            repeatable || st.values[r * a.cols + c] == quiet;
        const std::array<int, 4> expect =
            gate_eval(gate, read_inputs(st, a, r, c, &quiet));
        bool typed_ok = false;
        for (std::size_t id : matches)
          if (lib.blocks[id].gate == gate && lib.blocks[id].side_values == expect)
            typed_ok = true;
        if (must_check && !typed_ok) {
          std::string got;
          for (std::size_t id : matches) {
            if (!got.empty()) got += ", ";
            got += lib.blocks[id].gate.name() + "_(" +
                   std::to_string(lib.blocks[id].side_values[0]) +
                   std::to_string(lib.blocks[id].side_values[1]) +
                   std::to_string(lib.blocks[id].side_values[2]) +
                   std::to_string(lib.blocks[id].side_values[3]) + ")";
          }
          return TileFailure{
              "round " + std::to_string(round) + ": " + tile_name(r, c) + " of type " +
              gate.name() + " should have become " + gate.name() + "_(" +
              std::to_string(expect[0]) + std::to_string(expect[1]) +
              std::to_string(expect[2]) + std::to_string(expect[3]) +
              ") but matches " + got};
        }
        next.values[r * a.cols + c] = expect;
      }
    }
    if (!repeatable) break;  // transient mode checks a single delay window
    st = std::move(next);
    cells = std::move(after);
  }
  return std::nullopt;
}

std::vector<std::pair<GateType, std::array<int, 4>>> library_types(
    const BlockLibrary& lib) {
  std::vector<std::pair<GateType, std::array<int, 4>>> out;
  for (const GateType& g : lib.gates_present())
    for (const auto& u : gate_image(g)) out.emplace_back(g, u);
  return out;
}

// Greedy random fill honoring west/north constraints, retried until the
// torus wrap edges also hold. NOP is compatible with everything, so the fill
// cannot dead-end.
Assembly random_assembly(const BlockLibrary& lib, SplitMix64& rng,
                         const AssemblySpec& spec) {
  const auto types = library_types(lib);
  const std::int64_t rows =
      spec.min_rows + static_cast<std::int64_t>(
                          rng.below(spec.max_rows - spec.min_rows + 1));
  const std::int64_t cols =
      spec.min_cols + static_cast<std::int64_t>(
                          rng.below(spec.max_cols - spec.min_cols + 1));

  for (int attempt = 0; attempt < 500; ++attempt) {
    Assembly a;
    a.rows = rows;
    a.cols = cols;
    a.boundary = spec.boundary;
    std::vector<GateType> gates;
    bool ok = true;
    for (std::int64_t r = 0; r < rows && ok; ++r) {
      for (std::int64_t c = 0; c < cols && ok; ++c) {
        std::vector<std::size_t> fitting;
        for (std::size_t ti = 0; ti < types.size(); ++ti) {
          const GateType& g = types[ti].first;
          if (c > 0 && !edge_ok(gates[r * cols + c - 1], East, g)) continue;
          if (r > 0 && !edge_ok(gates[(r - 1) * cols + c], South, g)) continue;
          fitting.push_back(ti);
        }
        if (fitting.empty()) {
          ok = false;
          break;
        }
        const auto& [g, u] = types[fitting[rng.below(fitting.size())]];
        const auto ids = lib.blocks_of_type(g, u);
        a.block_ids.push_back(ids[rng.below(ids.size())]);
        gates.push_back(g);
      }
    }
    if (!ok) continue;
    if (!adjacency_violation(lib, a)) return a;
  }
  throw resource_error("could not generate an adjacency-valid assembly");
}

DecisionReport run_check(const CARule& rule, const BlockLibrary& lib,
                         const AssemblySpec& spec, int rounds, bool repeatable,
                         const Limits& limits) {
  lib.validate();
  if (rule.dimension() != 2)
    throw input_error("circuit checks run on 2D rules");
  if (rule.state_names() != lib.alphabet)
    throw input_error("library alphabet does not match the rule");
  if (rounds < 1) throw input_error("round count must be >= 1");
  if (spec.count < 0 || spec.min_rows < 1 || spec.min_cols < 1 ||
      spec.max_rows < spec.min_rows || spec.max_cols < spec.min_cols)
    throw input_error("malformed assembly generator bounds");

  std::vector<Assembly> all = spec.explicit_assemblies;
  SplitMix64 rng(spec.seed);
  for (int i = 0; i < spec.count; ++i) all.push_back(random_assembly(lib, rng, spec));
  if (all.empty()) throw input_error("no assemblies to check");

  for (std::size_t i = 0; i < all.size(); ++i) {
    if (auto bad = adjacency_violation(lib, all[i]))
      throw input_error("assembly " + std::to_string(i) + ": " + *bad);
    if (auto fail = run_assembly(rule, lib, all[i], rounds, repeatable, limits))
      return DecisionReport::make_no("assembly " + std::to_string(i) + ", " +
                                     fail->what);
  }
  return DecisionReport::make_yes(
      std::to_string(all.size()) + " assemblies checked over " +
      std::to_string(repeatable ? rounds : 1) + " round(s)");
}

}  // namespace

DecisionReport check_transient(const CARule& rule, const BlockLibrary& lib,
                               const AssemblySpec& spec, const Limits& limits) {
  return run_check(rule, lib, spec, 1, false, limits);
}

DecisionReport check_repeatable(const CARule& rule, const BlockLibrary& lib,
                                const AssemblySpec& spec, int rounds,
                                const Limits& limits) {
  return run_check(rule, lib, spec, rounds, true, limits);
}

std::pair<CARule, BlockLibrary> reference_wire_ca() {
  // One cell per block: a cell is a gate plus its current side values and
  // recomputes the gate from its neighbors' side values every step.
  struct StateInfo {
    GateType gate;
    std::array<int, 4> values;
  };
  std::vector<StateInfo> info;
  std::vector<std::string> names;
  for (const GateType& g : all_gates()) {
    for (const auto& u : gate_image(g)) {
      info.push_back({g, u});
      names.push_back(g.name() + ":" + std::to_string(u[0]) +
                      std::to_string(u[1]) + std::to_string(u[2]) +
                      std::to_string(u[3]));
    }
  }

  const std::vector<Offset> nbhd{{0, 0}, {0, 1}, {1, 0}, {0, -1}, {-1, 0}};
  auto shared = std::make_shared<std::vector<StateInfo>>(info);
  auto local = [shared](std::span<const State> w) -> State {
    const auto& table = *shared;
    const StateInfo& me = table[w[0]];
    // w[1] = east, w[2] = south, w[3] = west, w[4] = north
    const std::array<int, 4> in{table[w[4]].values[South], table[w[1]].values[West],
                                table[w[2]].values[North], table[w[3]].values[East]};
    const std::array<int, 4> out = gate_eval(me.gate, in);
    for (std::size_t s = 0; s < table.size(); ++s)
      if (table[s].gate == me.gate && table[s].values == out)
        return static_cast<State>(s);
    return w[0];  // unreachable: out is in the gate's image by construction
  };
  CARule rule(2, names, nbhd, CARule::LocalFn(local));

  BlockLibrary lib;
  lib.block_side = 1;
  lib.delay = 1;
  lib.alphabet = rule.state_names();
  for (std::size_t s = 0; s < info.size(); ++s)
    lib.blocks.push_back({info[s].gate, info[s].values, {static_cast<State>(s)}});
  lib.validate();
  return {std::move(rule), std::move(lib)};
}

}  // namespace casim

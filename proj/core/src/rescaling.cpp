#include "casim/rescaling.hpp"

#include <cassert>

#include "casim/engine.hpp"

namespace casim {

void validate_shape(const BlockShape& shape, int dimension) {
  if (static_cast<int>(shape.m.size()) != dimension)
    throw input_error("block shape dimension does not match the rule");
  for (std::int64_t v : shape.m)
    if (v < 1) throw input_error("block shape components must be >= 1");
  if (shape.t < 1) throw input_error("time factor must be >= 1");
}

std::uint64_t BlockCodec::block_state_count() const {
  std::uint64_t n = 1;
  for (std::int64_t i = 0; i < block_cells(); ++i) {
    if (n > (std::uint64_t{1} << 62) / base)
      throw resource_error("block alphabet exceeds 2^62 states");
    n *= base;
  }
  return n;
}

std::uint64_t BlockCodec::encode(std::span<const State> tuple) const {
  assert(static_cast<std::int64_t>(tuple.size()) == block_cells());
  std::uint64_t id = 0;
  for (std::size_t i = tuple.size(); i-- > 0;) id = id * base + tuple[i];
  return id;
}

void BlockCodec::decode(std::uint64_t id, std::span<State> tuple) const {
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    tuple[i] = static_cast<State>(id % base);
    id /= base;
  }
}

namespace {

void check_divisibility(const BlockShape& shape, const PeriodicConfig& c) {
  for (int a = 0; a < c.dimension(); ++a)
    if (c.period(a) % shape.m[a] != 0)
      throw input_error("period is not divisible by the block shape");
}

std::vector<std::string> block_state_names(const CARule& rule,
                                           const BlockCodec& codec) {
  const std::uint64_t count = codec.block_state_count();
  std::vector<std::string> names;
  names.reserve(count);
  std::vector<State> tuple(codec.block_cells());
  for (std::uint64_t id = 0; id < count; ++id) {
    codec.decode(id, tuple);
    std::string n = "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) n += ',';
      n += rule.state_name(tuple[i]);
    }
    n += ')';
    names.push_back(std::move(n));
  }
  return names;
}

}  // namespace

PeriodicConfig block_encode(const BlockShape& shape, const CARule& rule,
                            const PeriodicConfig& c) {
  validate_shape(shape, c.dimension());
  check_divisibility(shape, c);
  const BlockCodec codec{rule.state_count(), shape.m};
  std::vector<State> tuple(codec.block_cells());

  if (c.dimension() == 1) {
    const std::int64_t bp = c.period(0) / shape.m[0];
    std::vector<State> out(bp);
    for (std::int64_t z = 0; z < bp; ++z) {
      for (std::int64_t j = 0; j < shape.m[0]; ++j)
        tuple[j] = c.cells()[z * shape.m[0] + j];
      out[z] = static_cast<State>(codec.encode(tuple));
    }
    return PeriodicConfig(std::move(out));
  }

  const std::int64_t b0 = c.period(0) / shape.m[0];
  const std::int64_t b1 = c.period(1) / shape.m[1];
  std::vector<State> out(b0 * b1);
  for (std::int64_t z0 = 0; z0 < b0; ++z0) {
    for (std::int64_t z1 = 0; z1 < b1; ++z1) {
      for (std::int64_t j1 = 0; j1 < shape.m[1]; ++j1)
        for (std::int64_t j0 = 0; j0 < shape.m[0]; ++j0)
          tuple[j0 + shape.m[0] * j1] =
              c.at({z0 * shape.m[0] + j0, z1 * shape.m[1] + j1});
      out[z0 * b1 + z1] = static_cast<State>(codec.encode(tuple));
    }
  }
  return PeriodicConfig(b0, b1, std::move(out));
}

PeriodicConfig block_decode(const BlockShape& shape, const CARule& rule,
                            const PeriodicConfig& blocks) {
  validate_shape(shape, blocks.dimension());
  const BlockCodec codec{rule.state_count(), shape.m};
  std::vector<State> tuple(codec.block_cells());

  if (blocks.dimension() == 1) {
    const std::int64_t p = blocks.period(0) * shape.m[0];
    std::vector<State> out(p);
    for (std::int64_t z = 0; z < blocks.period(0); ++z) {
      codec.decode(blocks.cells()[z], tuple);
      for (std::int64_t j = 0; j < shape.m[0]; ++j)
        out[z * shape.m[0] + j] = tuple[j];
    }
    return PeriodicConfig(std::move(out));
  }

  const std::int64_t p0 = blocks.period(0) * shape.m[0];
  const std::int64_t p1 = blocks.period(1) * shape.m[1];
  std::vector<State> out(p0 * p1);
  for (std::int64_t z0 = 0; z0 < blocks.period(0); ++z0) {
    for (std::int64_t z1 = 0; z1 < blocks.period(1); ++z1) {
      codec.decode(blocks.cells()[z0 * blocks.period(1) + z1], tuple);
      for (std::int64_t j1 = 0; j1 < shape.m[1]; ++j1)
        for (std::int64_t j0 = 0; j0 < shape.m[0]; ++j0)
          out[(z0 * shape.m[0] + j0) * p1 + z1 * shape.m[1] + j1] =
              tuple[j0 + shape.m[0] * j1];
    }
  }
  return PeriodicConfig(p0, p1, std::move(out));
}

CARule rescale(const CARule& rule, const BlockShape& shape, const Limits& limits) {
  validate_shape(shape, rule.dimension());
  const int d = rule.dimension();
  const BlockCodec codec{rule.state_count(), shape.m};
  const std::uint64_t qb = codec.block_state_count();

  // Per-axis block radius: everything t steps of `rule` can see from inside
  // one block, measured in blocks.
  std::array<std::int64_t, 2> rho{0, 0};
  for (int a = 0; a < d; ++a)
    rho[a] = (static_cast<std::int64_t>(rule.radius()) * shape.t + shape.m[a] - 1) /
             shape.m[a];

  std::vector<Offset> nbhd;
  if (d == 1) {
    for (std::int64_t o = -rho[0]; o <= rho[0]; ++o)
      nbhd.push_back({static_cast<int>(o), 0});
  } else {
    for (std::int64_t o0 = -rho[0]; o0 <= rho[0]; ++o0)
      for (std::int64_t o1 = -rho[1]; o1 <= rho[1]; ++o1)
        nbhd.push_back({static_cast<int>(o0), static_cast<int>(o1)});
  }

  std::uint64_t entries = 1;
  for (std::size_t i = 0; i < nbhd.size(); ++i) {
    if (entries > limits.max_table_entries / qb)
      throw resource_error("rescaled rule table would exceed the table budget");
    entries *= qb;
  }

  // Materialize the window of blocks as a cell array, run t plain steps and
  // read back the central block.
  const std::int64_t rows = (2 * rho[0] + 1) * shape.m[0];
  const std::int64_t cols = d == 2 ? (2 * rho[1] + 1) * shape.m[1] : 1;
  const std::int64_t rt = static_cast<std::int64_t>(rule.radius()) * shape.t;
  std::vector<State> tuple(codec.block_cells());

  std::vector<State> table(entries);
  std::vector<State> cells;
  for (std::uint64_t w = 0; w < entries; ++w) {
    cells.assign(rows * cols, 0);
    std::uint64_t rest = w;
    // Window digits are big-endian over the neighborhood, so recover blocks
    // in reverse order.
    for (std::size_t k = nbhd.size(); k-- > 0;) {
      const std::uint64_t id = rest % qb;
      rest /= qb;
      codec.decode(id, tuple);
      const std::int64_t base0 = (nbhd[k][0] + rho[0]) * shape.m[0];
      if (d == 1) {
        for (std::int64_t j = 0; j < shape.m[0]; ++j) cells[base0 + j] = tuple[j];
      } else {
        const std::int64_t base1 = (nbhd[k][1] + rho[1]) * shape.m[1];
        for (std::int64_t j1 = 0; j1 < shape.m[1]; ++j1)
          for (std::int64_t j0 = 0; j0 < shape.m[0]; ++j0)
            cells[(base0 + j0) * cols + (base1 + j1)] =
                tuple[j0 + shape.m[0] * j1];
      }
    }
    std::int64_t cur_rows = rows, cur_cols = cols;
    for (std::int64_t s = 0; s < shape.t; ++s) {
      cells = detail::step_array(rule, cells, cur_rows, cur_cols);
      cur_rows -= 2 * rule.radius();
      if (d == 2) cur_cols -= 2 * rule.radius();
    }
    // The central block now sits at offset rho*m - rt from the shrunk
    // array's corner.
    const std::int64_t off0 = rho[0] * shape.m[0] - rt;
    if (d == 1) {
      for (std::int64_t j = 0; j < shape.m[0]; ++j) tuple[j] = cells[off0 + j];
    } else {
      const std::int64_t off1 = rho[1] * shape.m[1] - rt;
      for (std::int64_t j1 = 0; j1 < shape.m[1]; ++j1)
        for (std::int64_t j0 = 0; j0 < shape.m[0]; ++j0)
          tuple[j0 + shape.m[0] * j1] = cells[(off0 + j0) * cur_cols + (off1 + j1)];
    }
    table[w] = static_cast<State>(codec.encode(tuple));
  }

  return CARule(d, block_state_names(rule, codec), std::move(nbhd),
                std::move(table));
}

}  // namespace casim

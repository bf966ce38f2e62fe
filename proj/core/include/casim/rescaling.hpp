#pragma once

#include <cstdint>
#include <vector>

#include "casim/common.hpp"
#include "casim/config.hpp"
#include "casim/rule.hpp"

namespace casim {

// Space/time rescaling parameters: a rectangular block shape with one
// positive extent per dimension, and a positive time factor.
struct BlockShape {
  std::vector<std::int64_t> m;
  std::int64_t t = 1;

  std::int64_t block_cells() const {
    std::int64_t n = 1;
    for (std::int64_t v : m) n *= v;
    return n;
  }
  bool operator==(const BlockShape&) const = default;
};

// Bijection between cell tuples and block states. Tuple slots enumerate the
// in-block offsets with the first axis varying fastest; slot 0 is the least
// significant digit of the block state id.
struct BlockCodec {
  std::uint64_t base;              // |Q| of the cell alphabet
  std::vector<std::int64_t> m;     // block shape

  std::int64_t block_cells() const {
    std::int64_t n = 1;
    for (std::int64_t v : m) n *= v;
    return n;
  }
  std::uint64_t block_state_count() const;
  std::uint64_t encode(std::span<const State> tuple) const;
  void decode(std::uint64_t id, std::span<State> tuple) const;
};

void validate_shape(const BlockShape& shape, int dimension);

// Repack a torus configuration into blocks of the given shape. Each period
// must be divisible by the matching shape component; the recoding is a
// bijection and block_decode inverts it exactly.
PeriodicConfig block_encode(const BlockShape& shape, const CARule& rule,
                            const PeriodicConfig& c);
PeriodicConfig block_decode(const BlockShape& shape, const CARule& rule,
                            const PeriodicConfig& blocks);

// The rescaled automaton: one step over the block alphabet equals t steps of
// `rule` read through the block recoding. The result's neighborhood is the
// box of per-axis radii ceil(radius * t / m_i). Throws resource_error when
// the dense table would exceed limits.max_table_entries.
CARule rescale(const CARule& rule, const BlockShape& shape,
               const Limits& limits = {});

}  // namespace casim

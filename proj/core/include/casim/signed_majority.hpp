#pragma once

#include <array>

#include "casim/common.hpp"
#include "casim/rule.hpp"

namespace casim {

// State codec for the symmetric signed majority rule: 64 states, one inner
// value and one sign per von Neumann offset, each in {-1, +1}. Bit 0 holds
// the inner value, bits 1..5 the signs in neighborhood order
// ((0,0), (0,1), (1,0), (0,-1), (-1,0)). Set bit means +1.
struct SignedMajorityCodec {
  static constexpr std::size_t kStateCount = 64;
  static const std::array<Offset, 5>& neighborhood();

  static int inner(State s) { return (s & 1u) ? +1 : -1; }
  // Sign the state assigns to neighborhood offset index j.
  static int sign(State s, std::size_t j) {
    return (s >> (1 + j)) & 1u ? +1 : -1;
  }
  static State make(int inner, const std::array<int, 5>& signs);
  // Index of the opposite offset within the neighborhood.
  static std::size_t opposite(std::size_t j);
};

// The symmetric signed majority rule: each cell flips or keeps its neighbor's
// inner value according to a pair-symmetric weight built from both sign
// vectors, then takes the strict majority of the five weighted inner values.
// Sign vectors never change. The deciding sum has five odd terms, so it is
// never zero. The local map is function-backed; 64^5 windows do not fit a
// dense table.
CARule signed_majority();

}  // namespace casim

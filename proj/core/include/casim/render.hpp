#pragma once

#include <string>
#include <vector>

#include "casim/config.hpp"
#include "casim/rule.hpp"

namespace casim {

// Rendering options. State i maps to gray floor(255 * i / (|Q| - 1)), with a
// one-state alphabet drawn black; output is binary PGM (P5, maxval 255),
// byte-identical across runs and platforms. Space-time rows are emitted
// oldest first unless time_up is set, matching diagrams whose time axis
// points upward.
struct RenderSpec {
  bool time_up = false;
  // Bi-periodic configs are infinite; render cells [-half_width, half_width].
  // Required (>= 0) for bi-periodic inputs, ignored otherwise.
  std::int64_t half_width = -1;
};

std::string pgm_bytes(std::int64_t width, std::int64_t height,
                      const std::vector<unsigned char>& grays);

unsigned char gray_of_state(State s, std::size_t state_count);

// Space-time diagram of a 1D configuration: one row per time step 0..steps.
std::string render_spacetime(const CARule& rule, const Config& c,
                             std::int64_t steps, const RenderSpec& spec,
                             const Limits& limits = {});

// One PGM frame per time step 0..steps for a 2D torus.
std::vector<std::string> render_frames(const CARule& rule, const PeriodicConfig& c,
                                       std::int64_t steps);

}  // namespace casim

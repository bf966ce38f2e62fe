#include "casim/render.hpp"

#include <algorithm>
#include <sstream>

#include "casim/engine.hpp"

namespace casim {

std::string pgm_bytes(std::int64_t width, std::int64_t height,
                      const std::vector<unsigned char>& grays) {
  if (width < 1 || height < 1 ||
      static_cast<std::int64_t>(grays.size()) != width * height)
    throw input_error("pgm dimensions do not match the pixel count");
  std::ostringstream out;
  out << "P5\n" << width << ' ' << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(grays.data()),
            static_cast<std::streamsize>(grays.size()));
  return out.str();
}

unsigned char gray_of_state(State s, std::size_t state_count) {
  if (state_count <= 1) return 0;
  return static_cast<unsigned char>(255u * s / (state_count - 1));
}

namespace {

std::string rows_to_pgm(std::vector<std::vector<unsigned char>> rows,
                        bool time_up) {
  if (time_up) std::reverse(rows.begin(), rows.end());
  std::vector<unsigned char> all;
  for (const auto& r : rows) all.insert(all.end(), r.begin(), r.end());
  return pgm_bytes(static_cast<std::int64_t>(rows.front().size()),
                   static_cast<std::int64_t>(rows.size()), all);
}

}  // namespace

std::string render_spacetime(const CARule& rule, const Config& c,
                             std::int64_t steps, const RenderSpec& spec,
                             const Limits& limits) {
  if (steps < 0) throw input_error("step count must be >= 0");
  const std::size_t q = rule.state_count();

  if (const auto* p = std::get_if<PeriodicConfig>(&c)) {
    if (p->dimension() != 1)
      throw input_error("space-time rendering needs a 1D configuration");
    PeriodicConfig cur = *p;
    std::vector<std::vector<unsigned char>> rows;
    for (std::int64_t t = 0;; ++t) {
      std::vector<unsigned char> row(cur.cells().size());
      for (std::size_t i = 0; i < row.size(); ++i)
        row[i] = gray_of_state(cur.cells()[i], q);
      rows.push_back(std::move(row));
      if (t == steps) break;
      cur = step_periodic(rule, cur);
    }
    return rows_to_pgm(std::move(rows), spec.time_up);
  }

  if (const auto* b = std::get_if<BiPeriodicConfig>(&c)) {
    if (spec.half_width < 0)
      throw input_error("bi-periodic rendering needs a half width");
    BiPeriodicConfig cur = *b;
    std::vector<std::vector<unsigned char>> rows;
    for (std::int64_t t = 0;; ++t) {
      std::vector<unsigned char> row(2 * spec.half_width + 1);
      for (std::int64_t z = -spec.half_width; z <= spec.half_width; ++z)
        row[z + spec.half_width] = gray_of_state(cur.at(z), q);
      rows.push_back(std::move(row));
      if (t == steps) break;
      if (static_cast<std::uint64_t>(cur.mid().size()) > limits.max_config_cells)
        throw resource_error("bi-periodic middle exceeded the cell budget");
      cur = step_biperiodic(rule, cur);
    }
    return rows_to_pgm(std::move(rows), spec.time_up);
  }

  throw input_error("space-time rendering takes periodic or bi-periodic input");
}

std::vector<std::string> render_frames(const CARule& rule, const PeriodicConfig& c,
                                       std::int64_t steps) {
  if (c.dimension() != 2) throw input_error("frame rendering needs a 2D torus");
  if (steps < 0) throw input_error("step count must be >= 0");
  const std::size_t q = rule.state_count();
  std::vector<std::string> frames;
  PeriodicConfig cur = c;
  for (std::int64_t t = 0;; ++t) {
    std::vector<unsigned char> grays(cur.cells().size());
    for (std::size_t i = 0; i < grays.size(); ++i)
      grays[i] = gray_of_state(cur.cells()[i], q);
    frames.push_back(pgm_bytes(cur.period(1), cur.period(0), grays));
    if (t == steps) break;
    cur = step_periodic(rule, cur);
  }
  return frames;
}

}  // namespace casim

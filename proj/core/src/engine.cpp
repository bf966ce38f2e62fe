#include "casim/engine.hpp"

#include <algorithm>
#include <cassert>

namespace casim {

namespace {

void check_alphabet(const CARule& rule, State max_state) {
  if (max_state >= rule.state_count())
    throw input_error("configuration uses states outside the rule's alphabet");
}

std::int64_t wrap(std::int64_t v, std::int64_t p) {
  std::int64_t m = v % p;
  return m < 0 ? m + p : m;
}

}  // namespace

State apply_local(const CARule& rule, std::span<const State> window) {
  if (window.size() != rule.neighborhood_size())
    throw input_error("window size does not match the rule's neighborhood");
  for (State s : window)
    if (s >= rule.state_count()) throw input_error("state index out of range");
  return rule.eval(window);
}

PeriodicConfig step_periodic(const CARule& rule, const PeriodicConfig& c) {
  if (rule.dimension() != c.dimension())
    throw input_error("rule and configuration dimensions differ");
  check_alphabet(rule, c.max_state());

  const int r = rule.radius();
  const auto& nbhd = rule.neighborhood();
  std::vector<State> window(nbhd.size());

  if (c.dimension() == 1) {
    const std::int64_t p = c.period(0);
    // Halo copy removes per-cell modulo arithmetic.
    std::vector<State> halo(p + 2 * r);
    for (std::int64_t i = 0; i < p + 2 * r; ++i)
      halo[i] = c.cells()[wrap(i - r, p)];
    std::vector<State> out(p);
    for (std::int64_t z = 0; z < p; ++z) {
      for (std::size_t j = 0; j < nbhd.size(); ++j)
        window[j] = halo[z + r + nbhd[j][0]];
      out[z] = rule.eval(window);
    }
    return PeriodicConfig(std::move(out));
  }

  const std::int64_t p0 = c.period(0), p1 = c.period(1);
  const std::int64_t h1 = p1 + 2 * r;
  std::vector<State> halo((p0 + 2 * r) * h1);
  for (std::int64_t i = 0; i < p0 + 2 * r; ++i)
    for (std::int64_t j = 0; j < h1; ++j)
      halo[i * h1 + j] = c.cells()[wrap(i - r, p0) * p1 + wrap(j - r, p1)];
  std::vector<State> out(p0 * p1);
  for (std::int64_t i = 0; i < p0; ++i) {
    for (std::int64_t j = 0; j < p1; ++j) {
      for (std::size_t k = 0; k < nbhd.size(); ++k)
        window[k] = halo[(i + r + nbhd[k][0]) * h1 + (j + r + nbhd[k][1])];
      out[i * p1 + j] = rule.eval(window);
    }
  }
  return PeriodicConfig(p0, p1, std::move(out));
}

namespace detail {

namespace {

State raw_at(const RawBiPeriodic& c, std::int64_t z) {
  const std::int64_t idx = z - c.start;
  const std::int64_t m = static_cast<std::int64_t>(c.mid.size());
  if (idx >= 0 && idx < m) return c.mid[idx];
  if (idx < 0) {
    const std::int64_t l = static_cast<std::int64_t>(c.left.size());
    std::int64_t k = idx % l;
    return c.left[k < 0 ? k + l : k];
  }
  return c.right[(idx - m) % static_cast<std::int64_t>(c.right.size())];
}

}  // namespace

RawBiPeriodic step_biperiodic_raw(const CARule& rule, const RawBiPeriodic& c) {
  const int r = rule.radius();
  const auto& nbhd = rule.neighborhood();
  std::vector<State> window(nbhd.size());
  auto image_at = [&](std::int64_t z) {
    for (std::size_t j = 0; j < nbhd.size(); ++j)
      window[j] = raw_at(c, z + nbhd[j][0]);
    return rule.eval(window);
  };

  const std::int64_t l = static_cast<std::int64_t>(c.left.size());
  const std::int64_t rr = static_cast<std::int64_t>(c.right.size());
  const std::int64_t m = static_cast<std::int64_t>(c.mid.size());
  const std::int64_t end = c.start + m;

  RawBiPeriodic out;
  out.start = c.start - r;
  // Cells left of start-r see only tail pattern, so their image is periodic
  // with the same period and anchoring; one word suffices.
  out.left.resize(l);
  for (std::int64_t i = 0; i < l; ++i)
    out.left[i] = image_at(c.start - r - l + i);
  out.mid.resize(m + 2 * r);
  for (std::int64_t i = 0; i < m + 2 * r; ++i)
    out.mid[i] = image_at(c.start - r + i);
  out.right.resize(rr);
  for (std::int64_t i = 0; i < rr; ++i)
    out.right[i] = image_at(end + r + i);
  return out;
}

std::vector<State> step_array(const CARule& rule, const std::vector<State>& in,
                              std::int64_t rows, std::int64_t cols) {
  const int r = rule.radius();
  const auto& nbhd = rule.neighborhood();
  std::vector<State> window(nbhd.size());

  if (rule.dimension() == 1) {
    assert(rows >= 2 * r + 1);
    std::vector<State> out(rows - 2 * r);
    for (std::int64_t z = 0; z < rows - 2 * r; ++z) {
      for (std::size_t j = 0; j < nbhd.size(); ++j)
        window[j] = in[z + r + nbhd[j][0]];
      out[z] = rule.eval(window);
    }
    return out;
  }

  assert(rows >= 2 * r + 1 && cols >= 2 * r + 1);
  const std::int64_t orows = rows - 2 * r, ocols = cols - 2 * r;
  std::vector<State> out(orows * ocols);
  for (std::int64_t i = 0; i < orows; ++i) {
    for (std::int64_t j = 0; j < ocols; ++j) {
      for (std::size_t k = 0; k < nbhd.size(); ++k)
        window[k] = in[(i + r + nbhd[k][0]) * cols + (j + r + nbhd[k][1])];
      out[i * ocols + j] = rule.eval(window);
    }
  }
  return out;
}

}  // namespace detail

BiPeriodicConfig step_biperiodic(const CARule& rule, const BiPeriodicConfig& c) {
  if (rule.dimension() != 1)
    throw input_error("bi-periodic stepping is defined in dimension 1 only");
  check_alphabet(rule, c.max_state());
  detail::RawBiPeriodic raw{c.left(), c.mid(), c.right(), c.start()};
  detail::RawBiPeriodic img = detail::step_biperiodic_raw(rule, raw);
  return BiPeriodicConfig::from_parts(std::move(img.left), std::move(img.mid),
                                      std::move(img.right), img.start);
}

FinitePattern evolve_window(const CARule& rule, const FinitePattern& u,
                            std::int64_t steps) {
  if (rule.dimension() != u.dimension())
    throw input_error("rule and pattern dimensions differ");
  if (steps < 0) throw input_error("step count must be >= 0");
  check_alphabet(rule, u.max_state());
  const int r = rule.radius();
  if (u.support() < r * steps)
    throw input_error("pattern support too small for the requested steps");

  std::vector<State> cells = u.cells();
  std::int64_t n = u.support();
  for (std::int64_t t = 0; t < steps; ++t) {
    const std::int64_t s = 2 * n + 1;
    cells = detail::step_array(rule, cells, s, u.dimension() == 2 ? s : 1);
    n -= r;
  }
  return FinitePattern(u.dimension(), n, std::move(cells));
}

std::vector<State> trace(const CARule& rule, const Config& c, Coord cell,
                         std::int64_t steps, const Limits& limits) {
  if (steps < 0) throw input_error("step count must be >= 0");
  std::vector<State> out;
  out.reserve(steps + 1);

  if (const auto* p = std::get_if<PeriodicConfig>(&c)) {
    PeriodicConfig cur = *p;
    for (std::int64_t t = 0;; ++t) {
      out.push_back(cur.at(cell));
      if (t == steps) break;
      cur = step_periodic(rule, cur);
    }
    return out;
  }

  if (const auto* b = std::get_if<BiPeriodicConfig>(&c)) {
    if (rule.dimension() != 1)
      throw input_error("bi-periodic stepping is defined in dimension 1 only");
    BiPeriodicConfig cur = *b;
    for (std::int64_t t = 0;; ++t) {
      out.push_back(cur.at(cell[0]));
      if (t == steps) break;
      if (static_cast<std::uint64_t>(cur.mid().size()) > limits.max_config_cells)
        throw resource_error("bi-periodic middle exceeded the cell budget after " +
                             std::to_string(t) + " steps");
      BiPeriodicConfig next = step_biperiodic(rule, cur);
      if (next == cur) {
        // Frozen orbit: the rest of the trace is this constant.
        out.resize(steps + 1, out.back());
        break;
      }
      cur = std::move(next);
    }
    return out;
  }

  const auto& fp = std::get<FinitePattern>(c);
  const std::int64_t norm =
      std::max(cell[0] < 0 ? -cell[0] : cell[0],
               fp.dimension() == 2 ? (cell[1] < 0 ? -cell[1] : cell[1])
                                   : std::int64_t{0});
  if (fp.support() < norm + rule.radius() * steps)
    throw input_error("pattern support cannot cover the requested horizon");
  FinitePattern cur = fp;
  for (std::int64_t t = 0;; ++t) {
    out.push_back(cur.at(cell));
    if (t == steps) break;
    cur = evolve_window(rule, cur, 1);
  }
  return out;
}

}  // namespace casim

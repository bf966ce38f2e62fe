#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "casim/common.hpp"

namespace casim {

// Torus configuration: a d-dimensional array of states repeated periodically
// over the whole lattice. The period vector is part of the identity; two
// configurations with different periods never compare equal.
class PeriodicConfig {
 public:
  // 1D word of period cells.size().
  explicit PeriodicConfig(std::vector<State> cells);
  // 2D grid, row-major, periods (rows, cols).
  PeriodicConfig(std::int64_t rows, std::int64_t cols, std::vector<State> cells);

  int dimension() const { return dimension_; }
  std::int64_t period(int axis) const { return period_[axis]; }
  std::int64_t cell_count() const {
    return static_cast<std::int64_t>(cells_.size());
  }
  const std::vector<State>& cells() const { return cells_; }
  std::vector<State>& cells() { return cells_; }

  // Wrapped lookup at an arbitrary lattice position.
  State at(Coord z) const;
  State max_state() const;

  bool operator==(const PeriodicConfig&) const = default;

 private:
  int dimension_;
  std::array<std::int64_t, 2> period_;
  std::vector<State> cells_;
};

// Eventually bi-periodic 1D configuration: an infinite periodic word to the
// left, an explicit middle, an infinite periodic word to the right. The
// stored form is canonical: the middle is as small as possible while still
// containing cell 0, and when the middle is empty the tail boundary sits as
// close to cell 0 as the tail contents allow. Tail lengths are preserved by
// canonicalization (only rotations are applied), so orbits under stepping
// compare exactly.
class BiPeriodicConfig {
 public:
  // origin: index into mid of the cell at lattice position 0. Must be 0 when
  // mid is empty, otherwise in [0, mid.size()).
  BiPeriodicConfig(std::vector<State> left, std::vector<State> mid,
                   std::vector<State> right, std::int64_t origin);

  // Places mid[0] at lattice position start_cell instead of interpreting an
  // origin index. Used by stepping; canonicalizes like the main constructor.
  static BiPeriodicConfig from_parts(std::vector<State> left,
                                     std::vector<State> mid,
                                     std::vector<State> right,
                                     std::int64_t start_cell);

  int dimension() const { return 1; }
  const std::vector<State>& left() const { return left_; }
  const std::vector<State>& mid() const { return mid_; }
  const std::vector<State>& right() const { return right_; }

  // Lattice position of mid[0] (equals -origin()).
  std::int64_t start() const { return start_; }
  // Index into mid identifying cell 0 (0 when mid is empty).
  std::int64_t origin() const { return -start_; }

  // |left| + |mid| + |right|, the description size.
  std::int64_t description_size() const {
    return static_cast<std::int64_t>(left_.size() + mid_.size() + right_.size());
  }

  State at(std::int64_t z) const;
  State max_state() const;

  // The translated configuration c' with c'(z) = c(z + k).
  BiPeriodicConfig shifted(std::int64_t k) const;

  bool operator==(const BiPeriodicConfig&) const = default;

 private:
  BiPeriodicConfig() = default;
  void canonicalize();

  std::vector<State> left_, mid_, right_;
  std::int64_t start_ = 0;
};

// Center-anchored finite pattern over the max-norm ball of radius n:
// a word of length 2n+1 in 1D, a (2n+1) x (2n+1) square in 2D (row-major).
class FinitePattern {
 public:
  FinitePattern(int dimension, std::int64_t support, std::vector<State> cells);

  int dimension() const { return dimension_; }
  // Ball radius of the support.
  std::int64_t support() const { return support_; }
  std::int64_t side() const { return 2 * support_ + 1; }
  const std::vector<State>& cells() const { return cells_; }

  // Lookup by offset from the center; components must lie in [-n, n].
  State at(Coord rel) const;
  State max_state() const;

  bool operator==(const FinitePattern&) const = default;

 private:
  int dimension_;
  std::int64_t support_;
  std::vector<State> cells_;
};

using Config = std::variant<PeriodicConfig, BiPeriodicConfig, FinitePattern>;

int config_dimension(const Config& c);

}  // namespace casim

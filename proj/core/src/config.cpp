#include "casim/config.hpp"

#include <algorithm>
#include <cassert>

namespace casim {

namespace {

std::int64_t wrap(std::int64_t v, std::int64_t p) {
  std::int64_t m = v % p;
  return m < 0 ? m + p : m;
}

State max_of(const std::vector<State>& v) {
  State m = 0;
  for (State s : v) m = std::max(m, s);
  return m;
}

void rotate_left_one(std::vector<State>& w) {
  if (w.size() > 1) std::rotate(w.begin(), w.begin() + 1, w.end());
}

void rotate_right_one(std::vector<State>& w) {
  if (w.size() > 1) std::rotate(w.begin(), w.end() - 1, w.end());
}

}  // namespace

PeriodicConfig::PeriodicConfig(std::vector<State> cells)
    : dimension_(1), period_{static_cast<std::int64_t>(cells.size()), 1},
      cells_(std::move(cells)) {
  if (cells_.empty()) throw input_error("periodic configuration needs period >= 1");
}

PeriodicConfig::PeriodicConfig(std::int64_t rows, std::int64_t cols,
                               std::vector<State> cells)
    : dimension_(2), period_{rows, cols}, cells_(std::move(cells)) {
  if (rows < 1 || cols < 1)
    throw input_error("periodic configuration needs periods >= 1");
  if (static_cast<std::int64_t>(cells_.size()) != rows * cols)
    throw input_error("periodic configuration cell count does not match periods");
}

State PeriodicConfig::at(Coord z) const {
  if (dimension_ == 1) return cells_[wrap(z[0], period_[0])];
  return cells_[wrap(z[0], period_[0]) * period_[1] + wrap(z[1], period_[1])];
}

State PeriodicConfig::max_state() const { return max_of(cells_); }

BiPeriodicConfig::BiPeriodicConfig(std::vector<State> left, std::vector<State> mid,
                                   std::vector<State> right, std::int64_t origin)
    : left_(std::move(left)), mid_(std::move(mid)), right_(std::move(right)) {
  if (left_.empty() || right_.empty())
    throw input_error("bi-periodic tails must be non-empty");
  if (mid_.empty()) {
    if (origin != 0)
      throw input_error("origin must be 0 for an empty middle");
  } else if (origin < 0 || origin >= static_cast<std::int64_t>(mid_.size())) {
    throw input_error("origin must index into the middle word");
  }
  start_ = -origin;
  canonicalize();
}

BiPeriodicConfig BiPeriodicConfig::from_parts(std::vector<State> left,
                                              std::vector<State> mid,
                                              std::vector<State> right,
                                              std::int64_t start_cell) {
  if (left.empty() || right.empty())
    throw input_error("bi-periodic tails must be non-empty");
  BiPeriodicConfig c;
  c.left_ = std::move(left);
  c.mid_ = std::move(mid);
  c.right_ = std::move(right);
  c.start_ = start_cell;
  c.canonicalize();
  return c;
}

State BiPeriodicConfig::at(std::int64_t z) const {
  const std::int64_t idx = z - start_;
  const std::int64_t m = static_cast<std::int64_t>(mid_.size());
  if (idx >= 0 && idx < m) return mid_[idx];
  if (idx < 0) {
    // Left tail, anchored so a copy of the word ends just before the middle.
    const std::int64_t l = static_cast<std::int64_t>(left_.size());
    return left_[wrap(idx, l)];
  }
  return right_[(idx - m) % static_cast<std::int64_t>(right_.size())];
}

State BiPeriodicConfig::max_state() const {
  return std::max({max_of(left_), max_of(mid_), max_of(right_)});
}

BiPeriodicConfig BiPeriodicConfig::shifted(std::int64_t k) const {
  BiPeriodicConfig c = *this;
  c.start_ -= k;
  c.canonicalize();
  return c;
}

// Canonical form: (1) pull middle cells matching a tail's periodic
// continuation into that tail (rotating the tail keeps its anchoring
// consistent); (2) with an empty middle, slide the tail boundary toward
// cell 0 as far as the tails agree; (3) grow the middle back just enough to
// contain cell 0, so `origin` is always a valid index. Tail word lengths
// never change, which keeps equality exact along an orbit.
void BiPeriodicConfig::canonicalize() {
  // (1) absorb into the left tail; the continuation of the left tail into
  // the first middle cell is left_[0] under the end-anchored convention.
  while (!mid_.empty() && mid_.front() == left_.front()) {
    mid_.erase(mid_.begin());
    ++start_;
    rotate_left_one(left_);
  }
  while (!mid_.empty() && mid_.back() == right_.back()) {
    mid_.pop_back();
    rotate_right_one(right_);
  }
  if (mid_.empty()) {
    // (2) boundary at start_: cells < start_ from the left tail, >= start_
    // from the right tail. Slide toward 0 while contents agree.
    while (start_ < 0 && right_.front() == left_.front()) {
      ++start_;
      rotate_left_one(left_);
      rotate_left_one(right_);
    }
    while (start_ > 0 && left_.back() == right_.back()) {
      --start_;
      rotate_right_one(left_);
      rotate_right_one(right_);
    }
  }
  // (3) ensure cell 0 lies inside the middle (or at the boundary of an
  // empty middle at position 0).
  while (start_ > 0) {
    mid_.insert(mid_.begin(), left_.back());
    rotate_right_one(left_);
    --start_;
  }
  while (start_ + static_cast<std::int64_t>(mid_.size()) <= 0 && !(mid_.empty() && start_ == 0)) {
    mid_.push_back(right_.front());
    rotate_left_one(right_);
  }
}

FinitePattern::FinitePattern(int dimension, std::int64_t support,
                             std::vector<State> cells)
    : dimension_(dimension), support_(support), cells_(std::move(cells)) {
  if (dimension_ != 1 && dimension_ != 2)
    throw input_error("pattern dimension must be 1 or 2");
  if (support_ < 0) throw input_error("pattern support must be >= 0");
  const std::int64_t s = side();
  const std::int64_t want = dimension_ == 1 ? s : s * s;
  if (static_cast<std::int64_t>(cells_.size()) != want)
    throw input_error("pattern cell count does not match its support");
}

State FinitePattern::at(Coord rel) const {
  if (rel[0] < -support_ || rel[0] > support_)
    throw input_error("pattern lookup outside support");
  if (dimension_ == 1) return cells_[rel[0] + support_];
  if (rel[1] < -support_ || rel[1] > support_)
    throw input_error("pattern lookup outside support");
  return cells_[(rel[0] + support_) * side() + (rel[1] + support_)];
}

State FinitePattern::max_state() const { return max_of(cells_); }

int config_dimension(const Config& c) {
  return std::visit([](const auto& v) { return v.dimension(); }, c);
}

}  // namespace casim

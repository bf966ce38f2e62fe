#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "casim/common.hpp"

namespace casim {

// A cellular automaton rule: dimension (1 or 2), ordered alphabet,
// ordered neighborhood and a total local map. The local map is either a
// dense table with one entry per window (indexed big-endian in neighborhood
// order, first offset most significant) or, for rules whose window space is
// too large to materialize, an equivalent function. Values are immutable
// after construction and safe to share across threads.
class CARule {
 public:
  using LocalFn = std::function<State(std::span<const State>)>;

  CARule(int dimension, std::vector<std::string> state_names,
         std::vector<Offset> neighborhood, std::vector<State> table);
  CARule(int dimension, std::vector<std::string> state_names,
         std::vector<Offset> neighborhood, LocalFn local);

  int dimension() const { return dimension_; }
  std::size_t state_count() const { return state_names_.size(); }
  const std::vector<std::string>& state_names() const { return state_names_; }
  const std::string& state_name(State s) const;
  // Throws input_error for unknown names.
  State state_index(std::string_view name) const;
  std::optional<State> find_state(std::string_view name) const;

  const std::vector<Offset>& neighborhood() const { return neighborhood_; }
  std::size_t neighborhood_size() const { return neighborhood_.size(); }
  // Smallest n such that the neighborhood fits in the max-norm ball of
  // radius n.
  int radius() const { return radius_; }
  // Position of the zero offset in the neighborhood, if present.
  std::optional<std::size_t> center_index() const { return center_index_; }

  bool has_table() const { return !table_.empty(); }
  const std::vector<State>& table() const { return table_; }

  // |Q|^|V|. Throws resource_error if it does not fit in 62 bits.
  std::uint64_t window_count() const;

  // Local map evaluation. `eval` assumes a well-formed window; apply_local
  // (engine.hpp) is the checked variant.
  State eval(std::span<const State> window) const;

  std::uint64_t window_to_index(std::span<const State> window) const;
  void window_of_index(std::uint64_t index, std::span<State> out) const;
  std::vector<State> window_of_index(std::uint64_t index) const;

 private:
  void init_common();

  int dimension_;
  std::vector<std::string> state_names_;
  std::vector<Offset> neighborhood_;
  std::vector<State> table_;  // empty for function-backed rules
  LocalFn local_;             // null for table-backed rules
  int radius_ = 0;
  std::optional<std::size_t> center_index_;
};

}  // namespace casim

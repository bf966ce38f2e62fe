#include "casim/rule.hpp"

#include "casim/report.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <unordered_map>

namespace casim {

namespace {

int max_norm(const Offset& o) {
  int a = o[0] < 0 ? -o[0] : o[0];
  int b = o[1] < 0 ? -o[1] : o[1];
  return a > b ? a : b;
}

void validate_shape(int dimension, const std::vector<std::string>& names,
                    const std::vector<Offset>& nbhd) {
  if (dimension != 1 && dimension != 2)
    throw input_error("rule dimension must be 1 or 2");
  if (names.empty()) throw input_error("rule needs a non-empty alphabet");
  for (const auto& n : names) {
    if (n.empty()) throw input_error("empty state name");
    for (char c : n)
      if (std::isspace(static_cast<unsigned char>(c)))
        throw input_error("state name contains whitespace: '" + n + "'");
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw input_error("duplicate state name: '" + names[i] + "'");
  if (nbhd.empty()) throw input_error("rule needs a non-empty neighborhood");
  for (const auto& o : nbhd) {
    if (dimension == 1 && o[1] != 0)
      throw input_error("1D neighborhood offset with nonzero second component");
  }
  for (std::size_t i = 0; i < nbhd.size(); ++i)
    for (std::size_t j = i + 1; j < nbhd.size(); ++j)
      if (nbhd[i] == nbhd[j]) throw input_error("duplicate neighborhood offset");
}

}  // namespace

CARule::CARule(int dimension, std::vector<std::string> state_names,
               std::vector<Offset> neighborhood, std::vector<State> table)
    : dimension_(dimension),
      state_names_(std::move(state_names)),
      neighborhood_(std::move(neighborhood)),
      table_(std::move(table)) {
  init_common();
  if (static_cast<std::uint64_t>(table_.size()) != window_count())
    throw input_error("rule table size does not match |Q|^|V|");
  for (State s : table_)
    if (s >= state_count()) throw input_error("rule table entry out of range");
}

CARule::CARule(int dimension, std::vector<std::string> state_names,
               std::vector<Offset> neighborhood, LocalFn local)
    : dimension_(dimension),
      state_names_(std::move(state_names)),
      neighborhood_(std::move(neighborhood)),
      local_(std::move(local)) {
  init_common();
  if (!local_) throw input_error("rule needs a local map");
}

void CARule::init_common() {
  validate_shape(dimension_, state_names_, neighborhood_);
  radius_ = 0;
  for (std::size_t i = 0; i < neighborhood_.size(); ++i) {
    radius_ = std::max(radius_, max_norm(neighborhood_[i]));
    if (neighborhood_[i] == Offset{0, 0}) center_index_ = i;
  }
}

const std::string& CARule::state_name(State s) const {
  if (s >= state_count()) throw input_error("state index out of range");
  return state_names_[s];
}

State CARule::state_index(std::string_view name) const {
  if (auto s = find_state(name)) return *s;
  throw input_error("unknown state name: '" + std::string(name) + "'");
}

std::optional<State> CARule::find_state(std::string_view name) const {
  for (std::size_t i = 0; i < state_names_.size(); ++i)
    if (state_names_[i] == name) return static_cast<State>(i);
  return std::nullopt;
}

std::uint64_t CARule::window_count() const {
  const std::uint64_t q = state_count();
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < neighborhood_.size(); ++i) {
    if (n > (std::uint64_t{1} << 62) / q)
      throw resource_error("window space |Q|^|V| exceeds 2^62");
    n *= q;
  }
  return n;
}

State CARule::eval(std::span<const State> window) const {
  assert(window.size() == neighborhood_.size());
  if (!table_.empty()) {
    const std::uint64_t q = state_count();
    std::uint64_t idx = 0;
    for (State s : window) {
      assert(s < q);
      idx = idx * q + s;
    }
    return table_[idx];
  }
  return local_(window);
}

std::uint64_t CARule::window_to_index(std::span<const State> window) const {
  if (window.size() != neighborhood_.size())
    throw input_error("window size does not match neighborhood");
  const std::uint64_t q = state_count();
  std::uint64_t idx = 0;
  for (State s : window) {
    if (s >= q) throw input_error("state index out of range");
    idx = idx * q + s;
  }
  return idx;
}

void CARule::window_of_index(std::uint64_t index, std::span<State> out) const {
  const std::uint64_t q = state_count();
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<State>(index % q);
    index /= q;
  }
}

std::vector<State> CARule::window_of_index(std::uint64_t index) const {
  std::vector<State> w(neighborhood_.size());
  window_of_index(index, w);
  return w;
}

const char* verdict_name(DecisionReport::Verdict v) {
  switch (v) {
    case DecisionReport::Verdict::Yes: return "yes";
    case DecisionReport::Verdict::No: return "no";
    default: return "unknown";
  }
}

}  // namespace casim

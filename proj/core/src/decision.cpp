#include "casim/decision.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "casim/engine.hpp"
#include "casim/zigzag.hpp"

namespace casim {

namespace {

constexpr std::uint64_t kPhiSaturated = std::uint64_t{1} << 63;

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a >= kPhiSaturated || b >= kPhiSaturated || a > kPhiSaturated / b)
    return kPhiSaturated;
  return a * b;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < exp; ++i) v = saturating_mul(v, base);
  return v;
}

}  // namespace

PhiSpec PhiSpec::parse(const std::string& text) {
  PhiSpec spec;
  spec.text_ = text;
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw input_error("empty growth bound");

  std::size_t pos = 0;
  while (pos < compact.size()) {
    std::size_t end = compact.find('*', pos);
    if (end == std::string::npos) end = compact.size();
    const std::string tok = compact.substr(pos, end - pos);
    if (tok.empty()) throw input_error("empty factor in growth bound");
    Factor f;
    if (tok == "n") {
      f.kind = Factor::Kind::Linear;
    } else if (tok == "2^n") {
      f.kind = Factor::Kind::Exponential;
    } else if (tok.rfind("n^", 0) == 0) {
      f.kind = Factor::Kind::Power;
      const std::string k = tok.substr(2);
      if (k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("bad exponent in growth bound factor '" + tok + "'");
      f.value = std::stoull(k);
      if (f.value < 1 || f.value > 6)
        throw input_error("power factors allow exponents 1..6");
    } else {
      if (tok.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("bad growth bound factor '" + tok + "'");
      f.kind = Factor::Kind::Constant;
      f.value = std::stoull(tok);
      if (f.value < 1) throw input_error("constant factors must be >= 1");
    }
    spec.factors_.push_back(f);
    pos = end + 1;
    if (end == compact.size()) break;
    if (pos == compact.size()) throw input_error("trailing '*' in growth bound");
  }
  return spec;
}

std::uint64_t PhiSpec::eval(std::uint64_t n) const {
  std::uint64_t v = 1;
  for (const Factor& f : factors_) {
    switch (f.kind) {
      case Factor::Kind::Constant: v = saturating_mul(v, f.value); break;
      case Factor::Kind::Linear: v = saturating_mul(v, n); break;
      case Factor::Kind::Power: v = saturating_mul(v, saturating_pow(n, f.value)); break;
      case Factor::Kind::Exponential:
        v = saturating_mul(v, n >= 63 ? kPhiSaturated : std::uint64_t{1} << n);
        break;
    }
  }
  if (v < 1) throw input_error("growth bound evaluates below 1");
  return v;
}

State pred(const CARule& rule, std::int64_t t, const FinitePattern& u) {
  if (t < 1) throw input_error("prediction needs t >= 1");
  if (u.dimension() != rule.dimension())
    throw input_error("rule and pattern dimensions differ");
  if (u.support() != static_cast<std::int64_t>(rule.radius()) * t)
    throw input_error("pattern support must equal radius * t");
  const FinitePattern v = evolve_window(rule, u, t);
  return v.at({0, 0});
}

DecisionReport ubpred_bounded(const CARule& rule, const BiPeriodicConfig& c,
                              State q, std::int64_t horizon,
                              const Limits& limits) {
  if (rule.dimension() != 1)
    throw input_error("reachability queries run on 1D rules");
  if (q >= rule.state_count()) throw input_error("state index out of range");
  if (horizon < 0) throw input_error("horizon must be >= 0");

  BiPeriodicConfig cur = c;
  for (std::int64_t t = 0; t <= horizon; ++t) {
    if (cur.at(0) == q)
      return DecisionReport::make_yes_at(static_cast<std::uint64_t>(t));
    if (t == horizon) break;
    if (static_cast<std::uint64_t>(cur.mid().size()) > limits.max_config_cells)
      throw resource_error("bi-periodic middle exceeded the cell budget");
    BiPeriodicConfig next = step_biperiodic(rule, cur);
    if (next == cur) {
      // Fixed point: the remaining trace is constant and q was not it.
      return DecisionReport::make_unknown(
          "not reached within horizon " + std::to_string(horizon) +
          " (orbit frozen at step " + std::to_string(t) + ")");
    }
    cur = std::move(next);
  }
  return DecisionReport::make_unknown("not reached within horizon " +
                                      std::to_string(horizon));
}

std::int64_t zigzag_stabilization_bound(std::int64_t description_size) {
  const std::int64_t L = description_size;
  return 9 * L * L + 10 * L + 10;
}

DecisionReport ubpred_zigzag(const CARule& inner, const BiPeriodicConfig& c,
                             State q, const Limits& limits) {
  const CARule wrapper = zigzag(inner, limits);
  if (q >= wrapper.state_count()) throw input_error("state index out of range");
  if (c.max_state() >= wrapper.state_count())
    throw input_error("configuration uses states outside the zigzag alphabet");

  const std::int64_t bound = zigzag_stabilization_bound(c.description_size());
  BiPeriodicConfig cur = c;
  for (std::int64_t t = 0; t <= bound; ++t) {
    const State s = cur.at(0);
    if (s == q) return DecisionReport::make_yes_at(static_cast<std::uint64_t>(t));
    if (s == ZigzagAlphabet::E) {
      // The error state spreads and never retreats; cell 0 stays e forever.
      break;
    }
    if (t == bound) break;
    if (static_cast<std::uint64_t>(cur.mid().size()) > limits.max_config_cells)
      throw resource_error("bi-periodic middle exceeded the cell budget");
    BiPeriodicConfig next = step_biperiodic(wrapper, cur);
    if (next == cur) break;  // frozen; nothing new can appear
    cur = std::move(next);
  }
  return DecisionReport::make_no(
      "cell 0 stabilizes within " + std::to_string(bound) +
      " steps and never shows the queried state");
}

namespace {

struct CellsHash {
  std::size_t operator()(const std::vector<State>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (State s : v) {
      h ^= s;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

CycleInfo cycle_structure(const CARule& rule, const PeriodicConfig& c,
                          const Limits& limits) {
  std::unordered_map<std::vector<State>, std::uint64_t, CellsHash> seen;
  std::uint64_t stored_cells = 0;
  PeriodicConfig cur = c;
  for (std::uint64_t t = 0;; ++t) {
    auto [it, inserted] = seen.emplace(cur.cells(), t);
    if (!inserted) return {it->second, t - it->second};
    stored_cells += cur.cells().size();
    if (stored_cells > limits.max_orbit_cells)
      throw resource_error("cycle detection exceeded the memory budget after " +
                           std::to_string(t) + " steps");
    cur = step_periodic(rule, cur);
  }
}

DecisionReport cycle_gt_phi(const CARule& rule, const PeriodicConfig& c,
                            const PhiSpec& phi, const Limits& limits) {
  std::int64_t n = c.period(0);
  if (c.dimension() == 2) {
    if (c.period(0) != c.period(1))
      throw input_error("long-cycle queries need an n x n period in 2D");
    n = c.period(0);
  }
  const CycleInfo info = cycle_structure(rule, c, limits);
  const std::uint64_t bound = phi.eval(static_cast<std::uint64_t>(n));
  DecisionReport report = info.cycle_length > bound
                              ? DecisionReport::make_yes()
                              : DecisionReport::make_no();
  report.measured = {info.transient, info.cycle_length};
  report.note = "cycle " + std::to_string(info.cycle_length) +
                (info.cycle_length > bound ? " > " : " <= ") + phi.text() +
                "(n) = " + std::to_string(bound);
  return report;
}

std::vector<std::vector<State>> column_language(const CARule& rule,
                                                std::int64_t n, std::int64_t k,
                                                const Limits& limits) {
  if (rule.dimension() != 1)
    throw input_error("column languages are computed for 1D rules");
  if (n < 1 || k < 1) throw input_error("column width and depth must be >= 1");

  const std::int64_t r = rule.radius();
  const std::int64_t width = n + 2 * r * (k - 1);
  std::uint64_t windows = 1;
  for (std::int64_t i = 0; i < width; ++i) {
    if (windows > limits.max_enumeration / rule.state_count())
      throw resource_error("column enumeration exceeds the budget");
    windows *= rule.state_count();
  }

  // The initial window covers cells [1 - r(k-1), n + r(k-1)]; after j steps
  // the surviving array starts at cell 1 - r(k-1) + r*j, so the column block
  // [1, n] sits at offset r(k-1-j).
  std::vector<std::vector<State>> words;
  std::vector<State> cells(width);
  for (std::uint64_t id = 0; id < windows; ++id) {
    std::uint64_t rest = id;
    for (std::int64_t i = width; i-- > 0;) {
      cells[i] = static_cast<State>(rest % rule.state_count());
      rest /= rule.state_count();
    }
    std::vector<State> word;
    word.reserve(n * k);
    std::vector<State> arr = cells;
    for (std::int64_t j = 0;; ++j) {
      const std::int64_t off = r * (k - 1 - j);
      for (std::int64_t i = 0; i < n; ++i) word.push_back(arr[off + i]);
      if (j == k - 1) break;
      arr = detail::step_array(rule, arr, static_cast<std::int64_t>(arr.size()), 1);
    }
    words.push_back(std::move(word));
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

}  // namespace casim

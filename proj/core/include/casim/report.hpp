#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace casim {

// Outcome of a decision procedure, with whatever evidence it produced.
// witness_time is present exactly when a reachability-style query answered
// yes; measured carries (transient, cycle) for orbit queries; note holds a
// human-readable counterexample or diagnostic.
struct DecisionReport {
  enum class Verdict { Yes, No, Unknown };

  Verdict verdict = Verdict::Unknown;
  std::optional<std::uint64_t> witness_time;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> measured;
  std::string note;

  bool yes() const { return verdict == Verdict::Yes; }
  bool no() const { return verdict == Verdict::No; }
  bool unknown() const { return verdict == Verdict::Unknown; }

  static DecisionReport make_yes(std::string note = {}) {
    return {Verdict::Yes, std::nullopt, std::nullopt, std::move(note)};
  }
  static DecisionReport make_yes_at(std::uint64_t t, std::string note = {}) {
    return {Verdict::Yes, t, std::nullopt, std::move(note)};
  }
  static DecisionReport make_no(std::string note = {}) {
    return {Verdict::No, std::nullopt, std::nullopt, std::move(note)};
  }
  static DecisionReport make_unknown(std::string note = {}) {
    return {Verdict::Unknown, std::nullopt, std::nullopt, std::move(note)};
  }
};

const char* verdict_name(DecisionReport::Verdict v);

}  // namespace casim

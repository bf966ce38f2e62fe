#include "casim/builtins.hpp"

#include <algorithm>

#include "casim/signed_majority.hpp"
#include "casim/zigzag.hpp"

namespace casim {

namespace {

const std::vector<Offset> kRange1{{-1, 0}, {0, 0}, {1, 0}};

std::vector<std::string> binary_names() { return {"0", "1"}; }

}  // namespace

CARule rule110() {
  // Window (x, y, z) maps to (1 - xyz) * max(y, z); indexed big-endian this
  // is exactly Wolfram code 110.
  std::vector<State> table(8);
  for (State x = 0; x < 2; ++x)
    for (State y = 0; y < 2; ++y)
      for (State z = 0; z < 2; ++z)
        table[(x * 2 + y) * 2 + z] = (1 - x * y * z) * std::max(y, z);
  return CARule(1, binary_names(), kRange1, std::move(table));
}

CARule identity_rule() {
  return CARule(1, binary_names(), {{0, 0}}, std::vector<State>{0, 1});
}

CARule shift_rule() {
  return CARule(1, binary_names(), {{1, 0}}, std::vector<State>{0, 1});
}

CARule not_rule() {
  return CARule(1, binary_names(), {{0, 0}}, std::vector<State>{1, 0});
}

CARule or_spread_rule() {
  std::vector<State> table(8);
  for (State x = 0; x < 2; ++x)
    for (State y = 0; y < 2; ++y)
      for (State z = 0; z < 2; ++z)
        table[(x * 2 + y) * 2 + z] = std::max({x, y, z});
  return CARule(1, binary_names(), kRange1, std::move(table));
}

CARule xor_rule() {
  std::vector<State> table(8);
  for (State x = 0; x < 2; ++x)
    for (State y = 0; y < 2; ++y)
      for (State z = 0; z < 2; ++z)
        table[(x * 2 + y) * 2 + z] = (x + y + z) % 2;
  return CARule(1, binary_names(), kRange1, std::move(table));
}

CARule make_identity(std::vector<std::string> state_names) {
  std::vector<State> table(state_names.size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<State>(i);
  return CARule(1, std::move(state_names), {{0, 0}}, std::move(table));
}

std::vector<std::pair<std::string, CARule>> toy_rules() {
  std::vector<std::pair<std::string, CARule>> out;
  out.emplace_back("identity", identity_rule());
  out.emplace_back("shift", shift_rule());
  out.emplace_back("not", not_rule());
  out.emplace_back("or-spread", or_spread_rule());
  out.emplace_back("xor", xor_rule());
  return out;
}

std::vector<std::string> builtin_rule_names() {
  return {"rule110",   "identity", "shift",           "not",
          "or-spread", "xor",      "signed-majority", "zigzag:<inner>"};
}

bool is_builtin_rule_name(const std::string& name) {
  if (name.rfind("zigzag:", 0) == 0)
    return is_builtin_rule_name(name.substr(7));
  static const char* plain[] = {"rule110",   "identity", "shift", "not",
                                "or-spread", "xor",      "signed-majority"};
  for (const char* p : plain)
    if (name == p) return true;
  return false;
}

CARule builtin_rule(const std::string& name) {
  if (name == "rule110") return rule110();
  if (name == "identity") return identity_rule();
  if (name == "shift") return shift_rule();
  if (name == "not") return not_rule();
  if (name == "or-spread") return or_spread_rule();
  if (name == "xor") return xor_rule();
  if (name == "signed-majority") return signed_majority();
  if (name.rfind("zigzag:", 0) == 0) return zigzag(builtin_rule(name.substr(7)));
  throw input_error("unknown builtin rule: '" + name + "'");
}

}  // namespace casim

#include "casim/textio.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "casim/builtins.hpp"
#include "casim/zigzag.hpp"

namespace casim {

namespace {

struct Token {
  std::string text;
  std::size_t line;  // 1-based
  std::size_t col;   // 1-based
};

[[noreturn]] void fail_at(std::size_t line, std::size_t col, const std::string& msg) {
  throw input_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
}

[[noreturn]] void fail_at(const Token& t, const std::string& msg) {
  fail_at(t.line, t.col, msg);
}

// Lines of whitespace-separated tokens; '#' comments stripped; blank lines
// dropped.
std::vector<std::vector<Token>> tokenize(const std::string& text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 1;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::vector<Token> toks;
    for (std::size_t i = start; i < end;) {
      char c = text[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < end && !std::isspace(static_cast<unsigned char>(text[j])) &&
             text[j] != '#')
        ++j;
      toks.push_back({text.substr(i, j - i), line_no, i - start + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (end == text.size()) break;
    start = end + 1;
    ++line_no;
  }
  return lines;
}

std::int64_t parse_int(const Token& t) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(t.text, &pos);
  } catch (const std::exception&) {
    fail_at(t, "expected an integer, got '" + t.text + "'");
  }
  if (pos != t.text.size()) fail_at(t, "expected an integer, got '" + t.text + "'");
  return v;
}

Offset parse_offset(const Token& t, int dimension) {
  std::string s = t.text;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    fail_at(t, "expected an offset like (-1) or (0,1)");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = s.find(',', pos);
    parts.push_back(s.substr(pos, comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(parts.size()) != dimension)
    fail_at(t, "offset arity does not match the dimension");
  Offset o{0, 0};
  for (int a = 0; a < dimension; ++a) {
    try {
      std::size_t used = 0;
      o[a] = std::stoi(parts[a], &used);
      if (used != parts[a].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      fail_at(t, "bad offset component '" + parts[a] + "'");
    }
  }
  return o;
}

State state_from_token(const Token& t, const CARule& rule) {
  if (auto s = rule.find_state(t.text)) return *s;
  fail_at(t, "unknown state name: '" + t.text + "'");
}

// A word is either whitespace-separated state names or, when every state
// name is a single character, one compact run.
std::vector<State> word_from_tokens(const std::vector<Token>& toks,
                                    std::size_t first, const CARule& rule) {
  std::vector<State> out;
  const bool compact_ok = std::all_of(
      rule.state_names().begin(), rule.state_names().end(),
      [](const std::string& n) { return n.size() == 1; });
  for (std::size_t i = first; i < toks.size(); ++i) {
    if (auto s = rule.find_state(toks[i].text)) {
      out.push_back(*s);
      continue;
    }
    if (compact_ok) {
      bool all = true;
      std::vector<State> expanded;
      for (char c : toks[i].text) {
        if (auto s = rule.find_state(std::string(1, c))) {
          expanded.push_back(*s);
        } else {
          all = false;
          break;
        }
      }
      if (all) {
        out.insert(out.end(), expanded.begin(), expanded.end());
        continue;
      }
    }
    fail_at(toks[i], "unknown state name: '" + toks[i].text + "'");
  }
  return out;
}

std::string word_text(std::span<const State> w, const CARule& rule) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += rule.state_name(w[i]);
  }
  return out;
}

}  // namespace

CARule parse_rule(const std::string& text, const Limits& limits) {
  const auto lines = tokenize(text);

  int dimension = 0;
  std::vector<std::string> states;
  std::vector<Offset> nbhd;
  struct RuleLine {
    std::vector<Token> toks;
  };
  std::vector<RuleLine> rule_lines;
  std::optional<Token> default_tok;

  for (const auto& line : lines) {
    const Token& head = line.front();
    if (head.text == "dimension") {
      if (line.size() != 2) fail_at(head, "dimension takes one value");
      dimension = static_cast<int>(parse_int(line[1]));
      if (dimension != 1 && dimension != 2)
        fail_at(line[1], "dimension must be 1 or 2");
    } else if (head.text == "states") {
      if (line.size() < 2) fail_at(head, "states needs at least one name");
      for (std::size_t i = 1; i < line.size(); ++i) states.push_back(line[i].text);
    } else if (head.text == "neighborhood") {
      if (dimension == 0) fail_at(head, "dimension must come before neighborhood");
      if (line.size() < 2) fail_at(head, "neighborhood needs at least one offset");
      for (std::size_t i = 1; i < line.size(); ++i)
        nbhd.push_back(parse_offset(line[i], dimension));
    } else if (head.text == "rule") {
      rule_lines.push_back({line});
    } else if (head.text == "default") {
      if (line.size() != 3 || line[1].text != "->")
        fail_at(head, "default syntax: default -> <state|unchanged>");
      if (default_tok) fail_at(head, "duplicate default");
      default_tok = line[2];
    } else {
      fail_at(head, "unknown directive '" + head.text + "'");
    }
  }

  if (dimension == 0) throw input_error("rule file lacks a dimension line");
  if (states.empty()) throw input_error("rule file lacks a states line");
  if (nbhd.empty()) throw input_error("rule file lacks a neighborhood line");

  // Alphabet holder for name resolution before the real rule exists.
  CARule probe = [&] {
    std::vector<State> id(states.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<State>(i);
    return CARule(1, states, {{0, 0}}, std::move(id));
  }();

  const std::uint64_t q = states.size();
  std::uint64_t entries = 1;
  for (std::size_t i = 0; i < nbhd.size(); ++i) {
    if (entries > limits.max_table_entries / q)
      throw resource_error("rule table would exceed the table budget");
    entries *= q;
  }

  std::optional<std::size_t> center;
  for (std::size_t i = 0; i < nbhd.size(); ++i)
    if (nbhd[i] == Offset{0, 0}) center = i;

  constexpr State kUnset = ~State{0};
  std::vector<State> table(entries, kUnset);

  for (const auto& rl : rule_lines) {
    const auto& toks = rl.toks;
    // rule s_1 .. s_|V| -> s
    if (toks.size() != nbhd.size() + 3 || toks[nbhd.size() + 1].text != "->")
      fail_at(toks.front(), "rule syntax: rule <" + std::to_string(nbhd.size()) +
                                " states> -> <state>");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < nbhd.size(); ++i)
      idx = idx * q + state_from_token(toks[1 + i], probe);
    const State img = state_from_token(toks[nbhd.size() + 2], probe);
    if (table[idx] != kUnset && table[idx] != img)
      fail_at(toks.front(), "conflicting duplicate rule for this window");
    table[idx] = img;
  }

  if (default_tok) {
    const bool unchanged = default_tok->text == "unchanged";
    State def = 0;
    if (unchanged) {
      if (!center)
        fail_at(*default_tok,
                "default -> unchanged needs the zero offset in the neighborhood");
    } else {
      def = state_from_token(*default_tok, probe);
    }
    std::vector<State> w(nbhd.size());
    for (std::uint64_t idx = 0; idx < entries; ++idx) {
      if (table[idx] != kUnset) continue;
      if (unchanged) {
        std::uint64_t rest = idx;
        for (std::size_t i = nbhd.size(); i-- > 0;) {
          w[i] = static_cast<State>(rest % q);
          rest /= q;
        }
        table[idx] = w[*center];
      } else {
        table[idx] = def;
      }
    }
  } else {
    for (std::uint64_t idx = 0; idx < entries; ++idx) {
      if (table[idx] != kUnset) continue;
      std::vector<State> w(nbhd.size());
      std::uint64_t rest = idx;
      for (std::size_t i = nbhd.size(); i-- > 0;) {
        w[i] = static_cast<State>(rest % q);
        rest /= q;
      }
      throw input_error("rule table is not total and no default is given; "
                        "first missing window: [" +
                        word_text(w, probe) + "]");
    }
  }
  return CARule(dimension, std::move(states), std::move(nbhd), std::move(table));
}

std::string serialize_rule(const CARule& rule, const Limits& limits) {
  const std::uint64_t entries = rule.window_count();
  if (entries > limits.max_table_entries)
    throw resource_error("rule window space exceeds the table budget");

  std::ostringstream out;
  out << "dimension " << rule.dimension() << "\n";
  out << "states";
  for (const auto& n : rule.state_names()) out << ' ' << n;
  out << "\nneighborhood";
  for (const Offset& o : rule.neighborhood()) {
    out << " (" << o[0];
    if (rule.dimension() == 2) out << ',' << o[1];
    out << ')';
  }
  out << "\n";
  std::vector<State> w(rule.neighborhood_size());
  for (std::uint64_t idx = 0; idx < entries; ++idx) {
    rule.window_of_index(idx, w);
    out << "rule";
    for (State s : w) out << ' ' << rule.state_name(s);
    out << " -> " << rule.state_name(rule.eval(w)) << "\n";
  }
  return out.str();
}

namespace {

Config parse_biperiodic(const std::vector<std::vector<Token>>& lines,
                        const CARule& rule) {
  std::vector<State> left, mid, right;
  std::optional<std::int64_t> origin;
  bool saw_left = false, saw_mid = false, saw_right = false;
  for (const auto& line : lines) {
    const Token& head = line.front();
    if (head.text == "left:") {
      left = word_from_tokens(line, 1, rule);
      saw_left = true;
    } else if (head.text == "mid:") {
      mid = word_from_tokens(line, 1, rule);
      saw_mid = true;
    } else if (head.text == "right:") {
      right = word_from_tokens(line, 1, rule);
      saw_right = true;
    } else if (head.text == "origin:") {
      if (line.size() != 2) fail_at(head, "origin takes one integer");
      origin = parse_int(line[1]);
    } else {
      fail_at(head, "unknown directive '" + head.text + "' in bi-periodic config");
    }
  }
  if (!saw_left || !saw_right)
    throw input_error("bi-periodic config needs left: and right: words");
  if (!saw_mid) mid.clear();
  return BiPeriodicConfig(std::move(left), std::move(mid), std::move(right),
                          origin.value_or(0));
}

}  // namespace

Config parse_config(const std::string& text, const CARule& rule) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw input_error("empty configuration");
  const std::string& head = lines.front().front().text;

  if (head == "left:" || head == "mid:" || head == "right:" || head == "origin:")
    return parse_biperiodic(lines, rule);

  if (head == "window:") return parse_pattern(text, rule);

  if (head == "period:") {
    if (lines.size() != 1)
      fail_at(lines[1].front(), "period configs are a single line");
    auto w = word_from_tokens(lines.front(), 1, rule);
    if (w.empty()) throw input_error("period word must be non-empty");
    return PeriodicConfig(std::move(w));
  }

  // 2D torus: `grid:` followed by rows, or bare row-per-line input.
  std::vector<std::vector<State>> rows;
  std::size_t first_line = 0;
  if (head == "grid:") {
    if (lines.front().size() > 1)
      rows.push_back(word_from_tokens(lines.front(), 1, rule));
    first_line = 1;
  }
  for (std::size_t i = first_line; i < lines.size(); ++i)
    rows.push_back(word_from_tokens(lines[i], 0, rule));
  if (rows.empty()) throw input_error("grid needs at least one row");
  const std::size_t cols = rows.front().size();
  std::vector<State> cells;
  for (const auto& r : rows) {
    if (r.size() != cols || cols == 0)
      throw input_error("grid rows must be non-empty and equally long");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  return PeriodicConfig(static_cast<std::int64_t>(rows.size()),
                        static_cast<std::int64_t>(cols), std::move(cells));
}

std::string serialize_config(const Config& config, const CARule& rule) {
  std::ostringstream out;
  if (const auto* b = std::get_if<BiPeriodicConfig>(&config)) {
    out << "left: " << word_text(b->left(), rule) << "\n";
    out << "mid:";
    if (!b->mid().empty()) out << ' ' << word_text(b->mid(), rule);
    out << "\n";
    out << "right: " << word_text(b->right(), rule) << "\n";
    out << "origin: " << b->origin() << "\n";
    return out.str();
  }
  if (const auto* fp = std::get_if<FinitePattern>(&config))
    return serialize_pattern(*fp, rule);
  const auto& p = std::get<PeriodicConfig>(config);
  if (p.dimension() == 1) {
    out << "period: " << word_text(p.cells(), rule) << "\n";
    return out.str();
  }
  out << "grid:\n";
  for (std::int64_t r = 0; r < p.period(0); ++r) {
    for (std::int64_t c = 0; c < p.period(1); ++c) {
      if (c) out << ' ';
      out << rule.state_name(p.cells()[r * p.period(1) + c]);
    }
    out << "\n";
  }
  return out.str();
}

FinitePattern parse_pattern(const std::string& text, const CARule& rule) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().front().text != "window:")
    throw input_error("pattern files start with window:");
  std::vector<std::vector<State>> rows;
  if (lines.front().size() > 1)
    rows.push_back(word_from_tokens(lines.front(), 1, rule));
  for (std::size_t i = 1; i < lines.size(); ++i)
    rows.push_back(word_from_tokens(lines[i], 0, rule));
  if (rows.empty()) throw input_error("pattern needs cells");
  if (rows.size() == 1) {
    const auto& w = rows.front();
    if (w.size() % 2 == 0)
      throw input_error("1D pattern length must be odd (a centered window)");
    return FinitePattern(1, static_cast<std::int64_t>(w.size() / 2), w);
  }
  const std::size_t side = rows.size();
  std::vector<State> cells;
  for (const auto& r : rows) {
    if (r.size() != side)
      throw input_error("2D pattern must be a square grid");
    cells.insert(cells.end(), r.begin(), r.end());
  }
  if (side % 2 == 0) throw input_error("2D pattern side must be odd");
  return FinitePattern(2, static_cast<std::int64_t>(side / 2), std::move(cells));
}

std::string serialize_pattern(const FinitePattern& p, const CARule& rule) {
  std::ostringstream out;
  if (p.dimension() == 1) {
    out << "window: " << word_text(p.cells(), rule) << "\n";
    return out.str();
  }
  out << "window:\n";
  const std::int64_t side = p.side();
  for (std::int64_t r = 0; r < side; ++r) {
    for (std::int64_t c = 0; c < side; ++c) {
      if (c) out << ' ';
      out << rule.state_name(p.cells()[r * side + c]);
    }
    out << "\n";
  }
  return out.str();
}

std::vector<State> parse_state_word(const std::string& text, const CARule& rule) {
  const auto lines = tokenize(text);
  if (lines.size() != 1) throw input_error("expected a single word");
  return word_from_tokens(lines.front(), 0, rule);
}

StateOrder parse_order(const std::string& text, const CARule& rule) {
  const auto lines = tokenize(text);
  std::vector<std::pair<State, State>> pairs;
  for (const auto& line : lines) {
    if (line.size() != 3 || line[1].text != "<=")
      fail_at(line.front(), "order lines read <state> <= <state>");
    pairs.emplace_back(state_from_token(line[0], rule),
                       state_from_token(line[2], rule));
  }
  return StateOrder::from_pairs(rule.state_count(), pairs);
}

std::string serialize_order(const StateOrder& order, const CARule& rule) {
  std::ostringstream out;
  for (const auto& [a, b] : order.generators())
    out << rule.state_name(a) << " <= " << rule.state_name(b) << "\n";
  return out.str();
}

namespace {

std::vector<State> tuple_from_token(const Token& t, const CARule& G,
                                    std::size_t cells) {
  std::string s = t.text;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    fail_at(t, "expected a block tuple like (a,b)");
  s = s.substr(1, s.size() - 2);
  std::vector<State> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = s.find(',', pos);
    const std::string name = s.substr(pos, comma - pos);
    if (auto st = G.find_state(name)) {
      out.push_back(*st);
    } else {
      fail_at(t, "unknown state name in tuple: '" + name + "'");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != cells) fail_at(t, "tuple arity does not match the shape");
  return out;
}

std::string tuple_text(std::uint64_t id, const BlockCodec& codec, const CARule& G) {
  std::vector<State> tuple(codec.block_cells());
  codec.decode(id, tuple);
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ',';
    out += G.state_name(tuple[i]);
  }
  out += ')';
  return out;
}

}  // namespace

SimulationWitness parse_witness(const std::string& text, const CARule& F,
                                const CARule& G) {
  const auto lines = tokenize(text);
  SimulationWitness w;
  bool saw_m = false, saw_t = false;
  enum class Section { None, Blocks, Pi } section = Section::None;
  std::vector<std::pair<std::uint64_t, State>> pi;
  std::vector<std::uint64_t> blocks;

  BlockCodec codec{G.state_count(), {}};
  for (const auto& line : lines) {
    const Token& head = line.front();
    if (head.text == "m:") {
      if (line.size() < 2) fail_at(head, "m: needs at least one integer");
      for (std::size_t i = 1; i < line.size(); ++i)
        w.shape.m.push_back(parse_int(line[i]));
      codec.m = w.shape.m;
      saw_m = true;
      section = Section::None;
    } else if (head.text == "t:") {
      if (line.size() != 2) fail_at(head, "t: takes one integer");
      w.shape.t = parse_int(line[1]);
      saw_t = true;
      section = Section::None;
    } else if (head.text == "blocks:") {
      if (!saw_m) fail_at(head, "m: must come before blocks:");
      section = Section::Blocks;
      for (std::size_t i = 1; i < line.size(); ++i)
        blocks.push_back(
            codec.encode(tuple_from_token(line[i], G, codec.block_cells())));
    } else if (head.text == "pi:") {
      if (!saw_m) fail_at(head, "m: must come before pi:");
      section = Section::Pi;
    } else if (section == Section::Blocks) {
      for (const Token& t : line)
        blocks.push_back(codec.encode(tuple_from_token(t, G, codec.block_cells())));
    } else if (section == Section::Pi) {
      if (line.size() != 3 || line[1].text != "->")
        fail_at(head, "pi lines read <tuple> -> <state>");
      const std::uint64_t id =
          codec.encode(tuple_from_token(line[0], G, codec.block_cells()));
      pi.emplace_back(id, state_from_token(line[2], F));
    } else {
      fail_at(head, "unknown directive '" + head.text + "' in witness");
    }
  }
  if (!saw_m || !saw_t) throw input_error("witness needs m: and t: lines");

  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  w.block_states.reserve(blocks.size());
  w.projection.assign(blocks.size(), 0);
  for (std::uint64_t id : blocks) {
    if (id > ~State{0}) throw input_error("block tuple id exceeds the state range");
    w.block_states.push_back(static_cast<State>(id));
  }
  for (const auto& [id, target] : pi) {
    const auto it = std::lower_bound(blocks.begin(), blocks.end(), id);
    if (it == blocks.end() || *it != id)
      throw input_error("pi maps a tuple that is not in blocks:");
    w.projection[it - blocks.begin()] = target;
  }
  if (pi.size() != blocks.size())
    throw input_error("pi must map every block tuple exactly once");
  return w;
}

std::string serialize_witness(const SimulationWitness& w, const CARule& F,
                              const CARule& G) {
  const BlockCodec codec{G.state_count(), w.shape.m};
  std::ostringstream out;
  out << "m:";
  for (std::int64_t v : w.shape.m) out << ' ' << v;
  out << "\nt: " << w.shape.t << "\n";
  out << "blocks:\n";
  for (State b : w.block_states) out << tuple_text(b, codec, G) << "\n";
  out << "pi:\n";
  for (std::size_t i = 0; i < w.block_states.size(); ++i)
    out << tuple_text(w.block_states[i], codec, G) << " -> "
        << F.state_name(w.projection[i]) << "\n";
  return out.str();
}

BlockLibrary parse_library(const std::string& directory) {
  namespace fs = std::filesystem;
  const fs::path dir(directory);
  if (!fs::is_directory(dir))
    throw input_error("library path is not a directory: " + directory);

  BlockLibrary lib;
  const fs::path meta_path = dir / "meta";
  if (!fs::exists(meta_path))
    throw input_error("library lacks a meta file: " + meta_path.string());

  const auto meta_lines = tokenize(read_file(meta_path.string()));
  std::vector<std::string> states;
  for (const auto& line : meta_lines) {
    const Token& head = line.front();
    if (head.text == "N") {
      if (line.size() != 2) fail_at(head, "N takes one integer");
      lib.block_side = parse_int(line[1]);
    } else if (head.text == "delta") {
      if (line.size() != 2) fail_at(head, "delta takes one integer");
      lib.delay = parse_int(line[1]);
    } else if (head.text == "states") {
      for (std::size_t i = 1; i < line.size(); ++i) states.push_back(line[i].text);
    } else {
      fail_at(head, "unknown meta directive '" + head.text + "'");
    }
  }
  if (states.empty()) throw input_error("library meta lacks a states line");
  lib.alphabet = states;

  CARule probe = make_identity(states);

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().filename() == "meta") continue;
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  for (const fs::path& f : files) {
    const auto lines = tokenize(read_file(f.string()));
    Block b;
    std::vector<std::vector<State>> rows;
    bool saw_gate = false, saw_u = false;
    for (const auto& line : lines) {
      const Token& head = line.front();
      if (head.text == "gate:") {
        if (line.size() != 2) fail_at(head, "gate: takes one name");
        b.gate = GateType::from_name(line[1].text);
        saw_gate = true;
      } else if (head.text == "u:") {
        if (line.size() != 5) fail_at(head, "u: takes four bits");
        for (int i = 0; i < 4; ++i) {
          const std::int64_t v = parse_int(line[1 + i]);
          if (v != 0 && v != 1) fail_at(line[1 + i], "side values are bits");
          b.side_values[i] = static_cast<int>(v);
        }
        saw_u = true;
      } else {
        rows.push_back(word_from_tokens(line, 0, probe));
      }
    }
    if (!saw_gate || !saw_u)
      throw input_error("block file " + f.filename().string() +
                        " needs gate: and u: lines");
    for (const auto& r : rows) {
      if (static_cast<std::int64_t>(r.size()) != lib.block_side)
        throw input_error("block file " + f.filename().string() +
                          " has a row of the wrong width");
      b.pattern.insert(b.pattern.end(), r.begin(), r.end());
    }
    if (static_cast<std::int64_t>(rows.size()) != lib.block_side)
      throw input_error("block file " + f.filename().string() +
                        " has the wrong number of rows");
    lib.blocks.push_back(std::move(b));
  }
  lib.validate();
  return lib;
}

void serialize_library(const BlockLibrary& lib, const std::string& directory) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  std::ostringstream meta;
  meta << "N " << lib.block_side << "\ndelta " << lib.delay << "\nstates";
  for (const auto& s : lib.alphabet) meta << ' ' << s;
  meta << "\n";
  write_file((fs::path(directory) / "meta").string(), meta.str());

  for (std::size_t i = 0; i < lib.blocks.size(); ++i) {
    const Block& b = lib.blocks[i];
    std::ostringstream out;
    out << "gate: " << b.gate.name() << "\n";
    out << "u: " << b.side_values[0] << ' ' << b.side_values[1] << ' '
        << b.side_values[2] << ' ' << b.side_values[3] << "\n";
    for (std::int64_t r = 0; r < lib.block_side; ++r) {
      for (std::int64_t c = 0; c < lib.block_side; ++c) {
        if (c) out << ' ';
        out << lib.alphabet[b.pattern[r * lib.block_side + c]];
      }
      out << "\n";
    }
    char name[32];
    std::snprintf(name, sizeof name, "block_%04zu.txt", i);
    write_file((fs::path(directory) / name).string(), out.str());
  }
}

std::string serialize_report(const DecisionReport& report) {
  std::ostringstream out;
  out << "verdict: " << verdict_name(report.verdict) << "\n";
  if (report.witness_time) out << "witness_time: " << *report.witness_time << "\n";
  if (report.measured) {
    out << "transient: " << report.measured->first << "\n";
    out << "cycle: " << report.measured->second << "\n";
  }
  if (!report.note.empty()) out << "note: " << report.note << "\n";
  return out.str();
}

CARule rule_from_spec(const std::string& spec, const Limits& limits) {
  if (spec.rfind("zigzag:", 0) == 0)
    return zigzag(rule_from_spec(spec.substr(7), limits), limits);
  if (is_builtin_rule_name(spec)) return builtin_rule(spec);
  if (std::filesystem::exists(spec)) return parse_rule(read_file(spec), limits);
  throw input_error("rule spec '" + spec +
                    "' is neither a builtin name nor an existing file");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write file: " + path);
  out << contents;
  if (!out) throw input_error("failed writing file: " + path);
}

const char* format_grammar() {
  return R"(File formats ('#' starts a comment; words are state names, or one
compact run when every state name is a single character):

rule file:
  dimension <d>                        d in {1, 2}
  states <name>+
  neighborhood (<dx>[,<dy>])+
  rule <s_1> ... <s_|V|> -> <s>        one line per window, any order
  default -> <state|unchanged>         optional; 'unchanged' needs offset 0

config file, one of:
  left: <word> / mid: <word> / right: <word> / origin: <i>
                                       1D bi-periodic; origin indexes mid
  period: <word>                       1D torus
  grid: + one row per line             2D torus

pattern file:
  window: <word>                       1D centered window (odd length)
  window: + one row per line           2D square window (odd side)

order file:
  <state> <= <state>                   one generator per line

witness file:
  m: <ints> / t: <int>
  blocks: + one cell tuple (a,b,...) per line
  pi: + lines (a,b,...) -> <state>

library directory:
  meta                                 N <n> / delta <d> / states <name>+
  one file per block                   gate: <name> / u: <4 bits> / N rows

reports:
  verdict: yes|no|unknown / witness_time: <t> / transient: <t> / cycle: <t>
)";
}

}  // namespace casim

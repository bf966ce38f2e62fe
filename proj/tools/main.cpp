// casim command line: simulation, rendering and the decision problems over
// the library. Data goes to stdout, diagnostics to stderr. Exit codes:
// 0 yes/success, 1 no, 2 unknown, 3 input error, 4 resource limit.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "casim/builtins.hpp"
#include "casim/circuit.hpp"
#include "casim/decision.hpp"
#include "casim/engine.hpp"
#include "casim/freezing.hpp"
#include "casim/render.hpp"
#include "casim/rescaling.hpp"
#include "casim/simulation.hpp"
#include "casim/textio.hpp"
#include "casim/zigzag.hpp"

namespace {

using namespace casim;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInput = 3;
constexpr int kExitResource = 4;

int verdict_exit(const DecisionReport& r) {
  switch (r.verdict) {
    case DecisionReport::Verdict::Yes: return kExitYes;
    case DecisionReport::Verdict::No: return kExitNo;
    default: return kExitUnknown;
  }
}

// Window argument: inline word ("110"), or @file with a window: pattern.
FinitePattern pattern_from_arg(const std::string& arg, const CARule& rule) {
  if (!arg.empty() && arg.front() == '@')
    return parse_pattern(read_file(arg.substr(1)), rule);
  const std::vector<State> w = parse_state_word(arg, rule);
  if (w.size() % 2 == 0)
    throw input_error("1D window length must be odd (a centered pattern)");
  return FinitePattern(1, static_cast<std::int64_t>(w.size() / 2), w);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"casim: cellular automata simulation and verification"};
  app.require_subcommand(1);
  app.footer(std::string("Exit codes: 0 yes/success, 1 no, 2 unknown, 3 input "
                         "error, 4 resource limit.\n\n") +
             format_grammar());

  Limits limits;
  app.add_option("--max-table-entries", limits.max_table_entries,
                 "Dense rule table budget")->capture_default_str();
  app.add_option("--max-enumeration", limits.max_enumeration,
                 "Exhaustive window scan budget")->capture_default_str();
  app.add_option("--max-orbit-cells", limits.max_orbit_cells,
                 "Cycle detection memory budget")->capture_default_str();
  app.add_option("--max-config-cells", limits.max_config_cells,
                 "Bi-periodic middle growth budget")->capture_default_str();
  app.add_option("--max-search-nodes", limits.max_search_nodes,
                 "Witness search node budget")->capture_default_str();

  std::string rule_spec, config_path, out_path, window_arg, q_name, phi_text;
  std::string f_spec, g_spec, witness_path, library_path, mode_name, boundary_name;
  std::string frames_dir, order_path;
  std::int64_t steps = 0, horizon = 0, t_steps = 1, col_n = 1, col_k = 1;
  std::int64_t m_max = 1, t_max = 1, half_width = -1;
  std::int64_t rows_min = 1, rows_max = 3, cols_min = 1, cols_max = 3;
  int rounds = 1, count = 10;
  std::uint64_t seed = 0;
  bool time_up = false;

  auto* c_sim = app.add_subcommand("simulate", "Step a configuration and print it");
  c_sim->add_option("--rule", rule_spec, "Builtin name or rule file")->required();
  c_sim->add_option("--config", config_path, "Configuration file")->required();
  c_sim->add_option("--steps", steps, "Steps to apply")->required();
  c_sim->add_option("--out", out_path, "Write to a file instead of stdout");

  auto* c_render = app.add_subcommand("render", "Render a space-time PGM or 2D frames");
  c_render->add_option("--rule", rule_spec)->required();
  c_render->add_option("--config", config_path)->required();
  c_render->add_option("--steps", steps)->required();
  c_render->add_option("--out", out_path, "Output PGM path (1D)");
  c_render->add_option("--frames-dir", frames_dir, "Output directory (2D)");
  c_render->add_flag("--time-up", time_up, "Put time 0 at the bottom row");
  c_render->add_option("--half-width", half_width,
                       "Rendered half width for bi-periodic input");

  auto* c_pred = app.add_subcommand("pred", "Center state after t steps");
  c_pred->add_option("--rule", rule_spec)->required();
  c_pred->add_option("--t", t_steps, "Steps")->required();
  c_pred->add_option("--window", window_arg,
                     "Pattern over the radius*t ball (word or @file)")->required();

  auto* c_ub = app.add_subcommand("ubpred", "Bounded reachability at cell 0");
  c_ub->add_option("--rule", rule_spec)->required();
  c_ub->add_option("--config", config_path, "Bi-periodic configuration")->required();
  c_ub->add_option("--q", q_name, "Queried state")->required();
  c_ub->add_option("--horizon", horizon)->required();

  auto* c_ubz = app.add_subcommand("ubpred-zigzag",
                                   "Exact reachability for the zigzag wrapper");
  c_ubz->add_option("--rule", rule_spec, "Inner rule (radius 1, 1D)")->required();
  c_ubz->add_option("--config", config_path,
                    "Bi-periodic configuration over the wrapper alphabet")->required();
  c_ubz->add_option("--q", q_name, "Queried wrapper state")->required();

  auto* c_cycle = app.add_subcommand("cycle", "Orbit transient and cycle length");
  c_cycle->add_option("--rule", rule_spec)->required();
  c_cycle->add_option("--config", config_path, "Periodic configuration")->required();
  c_cycle->add_option("--phi", phi_text,
                      "Growth bound; ask whether cycle > phi(n)");

  auto* c_col = app.add_subcommand("column-lang", "Bounded column-factor language");
  c_col->add_option("--rule", rule_spec)->required();
  c_col->add_option("--n", col_n, "Column width")->required();
  c_col->add_option("--k", col_k, "Column depth")->required();

  auto* c_frz = app.add_subcommand("check-freezing",
                                   "Synthesize or check a freezing order");
  c_frz->add_option("--rule", rule_spec)->required();
  c_frz->add_option("--order", order_path, "Check this order instead");

  std::vector<std::int64_t> f_m;
  std::int64_t f_t = 1;
  auto* c_ver = app.add_subcommand("verify-sim", "Verify a simulation witness");
  c_ver->add_option("--f", f_spec, "Simulated rule")->required();
  c_ver->add_option("--g", g_spec, "Simulating rule")->required();
  c_ver->add_option("--witness", witness_path)->required();
  c_ver->add_option("--f-m", f_m,
                    "Rescale the simulated side by this block shape first "
                    "(general two-sided simulation)");
  c_ver->add_option("--f-t", f_t, "Time factor for the simulated side");

  auto* c_search = app.add_subcommand("search-sim",
                                      "Search for a strong simulation witness");
  c_search->add_option("--f", f_spec)->required();
  c_search->add_option("--g", g_spec)->required();
  c_search->add_option("--m-max", m_max)->required();
  c_search->add_option("--t-max", t_max)->required();
  c_search->add_option("--out", out_path, "Write the witness to a file");

  auto* c_circ = app.add_subcommand("check-circuit",
                                    "Check gate-block simulation over a library");
  c_circ->add_option("--library", library_path,
                     "Library directory, or 'ref' for the built-in reference")
      ->required();
  c_circ->add_option("--rule", rule_spec, "Rule (defaults to builtin for 'ref')");
  c_circ->add_option("--mode", mode_name, "transient or repeatable")->required();
  c_circ->add_option("--rounds", rounds, "Rounds for repeatable mode");
  c_circ->add_option("--count", count, "Generated assemblies")->capture_default_str();
  c_circ->add_option("--seed", seed, "Generator seed")->required();
  c_circ->add_option("--rows-min", rows_min)->capture_default_str();
  c_circ->add_option("--rows-max", rows_max)->capture_default_str();
  c_circ->add_option("--cols-min", cols_min)->capture_default_str();
  c_circ->add_option("--cols-max", cols_max)->capture_default_str();
  c_circ->add_option("--boundary", boundary_name, "torus or padded")
      ->default_val("torus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help exits 0; anything malformed is an input error.
    return app.exit(e) == 0 ? kExitYes : kExitInput;
  }

  try {
    if (c_sim->parsed()) {
      const CARule rule = rule_from_spec(rule_spec, limits);
      Config cfg = parse_config(read_file(config_path), rule);
      for (std::int64_t i = 0; i < steps; ++i) {
        if (auto* p = std::get_if<PeriodicConfig>(&cfg)) {
          cfg = step_periodic(rule, *p);
        } else if (auto* b = std::get_if<BiPeriodicConfig>(&cfg)) {
          if (static_cast<std::uint64_t>(b->mid().size()) > limits.max_config_cells)
            throw resource_error(
                "bi-periodic middle exceeded the cell budget after " +
                std::to_string(i) + " steps");
          cfg = step_biperiodic(rule, *b);
        } else {
          cfg = evolve_window(rule, std::get<FinitePattern>(cfg), 1);
        }
      }
      const std::string text = serialize_config(cfg, rule);
      if (out_path.empty())
        std::cout << text;
      else
        write_file(out_path, text);
      return kExitYes;
    }

    if (c_render->parsed()) {
      const CARule rule = rule_from_spec(rule_spec, limits);
      Config cfg = parse_config(read_file(config_path), rule);
      if (config_dimension(cfg) == 2) {
        if (frames_dir.empty())
          throw input_error("2D rendering needs --frames-dir");
        const auto frames =
            render_frames(rule, std::get<PeriodicConfig>(cfg), steps);
        std::filesystem::create_directories(frames_dir);
        for (std::size_t i = 0; i < frames.size(); ++i) {
          char name[32];
          std::snprintf(name, sizeof name, "frame_%04zu.pgm", i);
          write_file((std::filesystem::path(frames_dir) / name).string(),
                     frames[i]);
        }
        return kExitYes;
      }
      if (out_path.empty()) throw input_error("1D rendering needs --out");
      RenderSpec spec;
      spec.time_up = time_up;
      spec.half_width = half_width;
      write_file(out_path, render_spacetime(rule, cfg, steps, spec, limits));
      return kExitYes;
    }

    if (c_pred->parsed()) {
      const CARule rule = rule_from_spec(rule_spec, limits);
      const FinitePattern u = pattern_from_arg(window_arg, rule);
      std::cout << rule.state_name(pred(rule, t_steps, u)) << "\n";
      return kExitYes;
    }

    if (c_ub->parsed()) {
      const CARule rule = rule_from_spec(rule_spec, limits);
      Config cfg = parse_config(read_file(config_path), rule);
      const auto* b = std::get_if<BiPeriodicConfig>(&cfg);
      if (!b) throw input_error("ubpred needs a bi-periodic configuration");
      const DecisionReport r =
          ubpred_bounded(rule, *b, rule.state_index(q_name), horizon, limits);
      std::cout << serialize_report(r);
      return verdict_exit(r);
    }

    if (c_ubz->parsed()) {
      const CARule inner = rule_from_spec(rule_spec, limits);
      const CARule wrapper = zigzag(inner, limits);
      Config cfg = parse_config(read_file(config_path), wrapper);
      const auto* b = std::get_if<BiPeriodicConfig>(&cfg);
      if (!b) throw input_error("ubpred-zigzag needs a bi-periodic configuration");
      const DecisionReport r =
          ubpred_zigzag(inner, *b, wrapper.state_index(q_name), limits);
      std::cout << serialize_report(r);
      return verdict_exit(r);
    }

    if (c_cycle->parsed()) {
      const CARule rule = rule_from_spec(rule_spec, limits);
      Config cfg = parse_config(read_file(config_path), rule);
      const auto* p = std::get_if<PeriodicConfig>(&cfg);
      if (!p) throw input_error("cycle needs a periodic configuration");
      if (phi_text.empty()) {
        const CycleInfo info = cycle_structure(rule, *p, limits);
        DecisionReport r = DecisionReport::make_yes();
        r.measured = {info.transient, info.cycle_length};
        std::cout << serialize_report(r);
        return kExitYes;
      }
      const DecisionReport r =
          cycle_gt_phi(rule, *p, PhiSpec::parse(phi_text), limits);
      std::cout << serialize_report(r);
      return verdict_exit(r);
    }

    if (c_col->parsed()) {
      const CARule rule = rule_from_spec(rule_spec, limits);
      const auto words = column_language(rule, col_n, col_k, limits);
      for (const auto& word : words) {
        for (std::int64_t j = 0; j < col_k; ++j) {
          if (j) std::cout << " / ";
          for (std::int64_t i = 0; i < col_n; ++i) {
            if (i) std::cout << ' ';
            std::cout << rule.state_name(word[j * col_n + i]);
          }
        }
        std::cout << "\n";
      }
      return kExitYes;
    }

    if (c_frz->parsed()) {
      const CARule rule = rule_from_spec(rule_spec, limits);
      if (!order_path.empty()) {
        const StateOrder order = parse_order(read_file(order_path), rule);
        const DecisionReport r = check_freezing(rule, order, limits);
        std::cout << serialize_report(r);
        return verdict_exit(r);
      }
      const FreezingSynthesis syn = find_freezing_order(rule, limits);
      if (syn.order) {
        std::cout << serialize_order(*syn.order, rule);
        return kExitYes;
      }
      std::cout << "cycle:";
      for (State s : syn.violating_cycle) std::cout << ' ' << rule.state_name(s);
      std::cout << "\n";
      return kExitNo;
    }

    if (c_ver->parsed()) {
      CARule F = rule_from_spec(f_spec, limits);
      const CARule G = rule_from_spec(g_spec, limits);
      if (!f_m.empty()) {
        // General relation: the witness then projects onto the rescaled F,
        // whose states are written as cell tuples.
        F = rescale(F, BlockShape{f_m, f_t}, limits);
      }
      const SimulationWitness w = parse_witness(read_file(witness_path), F, G);
      const DecisionReport r = verify_witness(F, G, w, limits);
      std::cout << serialize_report(r);
      return verdict_exit(r);
    }

    if (c_search->parsed()) {
      const CARule F = rule_from_spec(f_spec, limits);
      const CARule G = rule_from_spec(g_spec, limits);
      const SearchOutcome outcome =
          search_strong_simulation(F, G, m_max, t_max, limits);
      if (outcome.witness) {
        const std::string text = serialize_witness(*outcome.witness, F, G);
        std::cout << text;
        if (!out_path.empty()) write_file(out_path, text);
        return kExitYes;
      }
      std::cout << "verdict: no\n";
      if (!outcome.skipped.empty()) {
        std::cerr << "skipped shapes (resource limit):";
        for (const BlockShape& s : outcome.skipped) {
          std::cerr << " m=";
          for (std::size_t i = 0; i < s.m.size(); ++i)
            std::cerr << (i ? "x" : "") << s.m[i];
          std::cerr << ",t=" << s.t;
        }
        std::cerr << "\n";
        return kExitResource;
      }
      return kExitNo;
    }

    if (c_circ->parsed()) {
      CARule rule = [&] {
        if (library_path == "ref" && rule_spec.empty())
          return reference_wire_ca().first;
        return rule_from_spec(rule_spec, limits);
      }();
      BlockLibrary lib = library_path == "ref" ? reference_wire_ca().second
                                               : parse_library(library_path);
      AssemblySpec spec;
      spec.seed = seed;
      spec.count = count;
      spec.min_rows = rows_min;
      spec.max_rows = rows_max;
      spec.min_cols = cols_min;
      spec.max_cols = cols_max;
      if (boundary_name == "torus")
        spec.boundary = BoundaryMode::Torus;
      else if (boundary_name == "padded")
        spec.boundary = BoundaryMode::Padded;
      else
        throw input_error("boundary must be torus or padded");

      DecisionReport r;
      if (mode_name == "transient")
        r = check_transient(rule, lib, spec, limits);
      else if (mode_name == "repeatable")
        r = check_repeatable(rule, lib, spec, rounds, limits);
      else
        throw input_error("mode must be transient or repeatable");
      std::cout << serialize_report(r);
      return verdict_exit(r);
    }

    throw input_error("no subcommand");
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

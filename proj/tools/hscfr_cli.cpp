// hscfr: command-line front end for the solver library.
//
//   hscfr stats kuhn
//   hscfr solve --game leduc --variant dcfr --schedule hs30 --out leduc.csv
//   hscfr bench configs/paper_matrix.json --out-dir results
//   hscfr exploit --game kuhn --profile kuhn.json
//   hscfr bound --game kuhn --schedule hs30 --iters 1000 --dump weights.csv
//
// Exit codes: 0 ok, 1 a run failed, 2 usage, 3 validation, 4 I/O.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hscfr/bench.hpp"
#include "hscfr/errors.hpp"
#include "hscfr/evaluation.hpp"
#include "hscfr/games.hpp"
#include "hscfr/profile_io.hpp"
#include "hscfr/schedule.hpp"
#include "hscfr/solver.hpp"

namespace {

using namespace hscfr;

enum ExitCode { kOk = 0, kRunFailed = 1, kUsage = 2, kValidation = 3, kIo = 4 };

struct GameOptions {
   std::string name;
   std::optional<int> x, fields, resources;
   std::optional<bool> wild;
   bool full_recall = false;

   void add_to(CLI::App* cmd, bool positional)
   {
      std::vector<std::string> names;
      for(auto n : game_names()) names.emplace_back(n);
      auto* opt = positional ? cmd->add_option("game", name, "Game name") : cmd->add_option("--game", name, "Game name");
      opt->required()->check(CLI::IsMember(names));
      cmd->add_option("--x", x, "Cards (goofspiel), die faces (liars_dice) or grid width (battleship)");
      cmd->add_option("--fields", fields, "Blotto battlefields");
      cmd->add_option("--resources", resources, "Blotto resources per player");
      cmd->add_option("--wild", wild, "Liar's dice: highest face is wild (true/false)");
      cmd->add_flag("--full-recall", full_recall, "Goofspiel: key information sets on the full bid history");
   }

   GameRules rules() const
   {
      GameParams p{x, fields, resources, wild, std::nullopt};
      if(full_recall) p.full_recall = true;
      return make_game(name, p);
   }
};

std::string triple_text(const GameStats& s, bool exact)
{
   if(exact) return std::to_string(s.histories) + " " + std::to_string(s.infosets) + " " + std::to_string(s.leaves);
   return two_sig_figs(s.histories) + " " + two_sig_figs(s.infosets) + " " + two_sig_figs(s.leaves);
}

int cmd_stats(const GameOptions& game)
{
   const GameRules rules = game.rules();
   const TreeGame tree = build_tree(rules);
   const GameStats stats = tree_stats(tree);
   const auto reference = reference_size(rules);
   if(not reference) {
      std::cout << triple_text(stats, true) << " (no reference)\n";
   } else if(matches_reference(stats, *reference)) {
      std::cout << triple_text(stats, reference->exact) << " (match)\n";
   } else {
      std::cout << triple_text(stats, reference->exact) << " (mismatch: expected "
                << triple_text(reference->stats, reference->exact) << ")\n";
   }
   std::cout << "exact: histories=" << stats.histories << " infosets=" << stats.infosets << " leaves=" << stats.leaves
             << " delta=" << format_number(tree.utility_range()) << " max_actions=" << tree.max_actions() << "\n";
   return reference && not matches_reference(stats, *reference) ? kValidation : kOk;
}

struct SolveOptions {
   GameOptions game;
   std::string variant = "dcfr";
   std::string schedule;
   long iters = 1000;
   std::string mode = "alternating";
   long checkpoint_every = 10;
   std::string averaging = "discount";
   std::string out;
   std::string profile_out;
   bool no_timing = false;
};

int cmd_solve(const SolveOptions& o)
{
   SolverConfig cfg;
   cfg.variant = parse_variant(o.variant);
   cfg.schedule = o.schedule.empty() ? default_schedule(cfg.variant) : parse_schedule(o.schedule);
   cfg.iterations = o.iters;
   cfg.mode = parse_update_mode(o.mode);
   cfg.checkpoint_every = o.checkpoint_every;
   cfg.averaging = parse_averaging(o.averaging);
   cfg.validate();

   const GameRules rules = o.game.rules();
   const TreeGame tree = build_tree(rules);
   const RunResult result = run(tree, cfg);

   const std::string csv = convergence_csv(result.checkpoints, not o.no_timing);
   if(o.out.empty()) std::cout << csv;
   else write_text_file(o.out, csv);
   if(not o.profile_out.empty()) write_profile(o.profile_out, tree, result.average);

   std::cerr << rules.id() << " " << to_string(cfg.variant) << "/" << cfg.schedule.name << " "
             << to_string(cfg.mode) << " n=" << cfg.iterations << ": exploitability "
             << format_number(result.final_exploitability()) << ", solve " << static_cast<long>(result.solve_ms)
             << " ms, evaluation " << static_cast<long>(result.eval_ms) << " ms\n";
   return kOk;
}

int cmd_bench(const std::string& config_path, const std::string& out_dir, unsigned threads)
{
   const BenchConfig config = read_bench_config(config_path);
   const BenchReport report = run_bench(config, out_dir, threads, &std::cerr);
   std::cout << summary_csv(report.summary);
   if(report.failures > 0) {
      std::cerr << report.failures << " of " << config.runs.size() << " runs failed\n";
      return kRunFailed;
   }
   return kOk;
}

int cmd_exploit(const GameOptions& game, const std::string& profile_path, std::optional<double> game_value)
{
   const TreeGame tree = build_tree(game.rules());
   const StrategyProfile profile = read_profile(profile_path, tree);
   const auto report = exploitability(tree, profile, game_value);
   const auto values = expected_value(tree, profile);
   std::cout << "value_p0=" << format_number(values[0]) << "\n"
             << "br_value_p0=" << format_number(report.br_values[0]) << "\n"
             << "br_value_p1=" << format_number(report.br_values[1]) << "\n"
             << "exploitability=" << format_number(report.exploitability) << "\n";
   if(report.per_player) {
      std::cout << "exploitability_p0=" << format_number((*report.per_player)[0]) << "\n"
                << "exploitability_p1=" << format_number((*report.per_player)[1]) << "\n";
   }
   return kOk;
}

struct BoundOptions {
   GameOptions game;
   std::string schedule = "hs30";
   long iters = 1000;
   double k = 1.0;
   std::string dump;
   std::optional<double> threshold;
};

int cmd_bound(const BoundOptions& o, bool with_game)
{
   const ScheduleSet set = parse_schedule(o.schedule);
   if(o.iters < 1) throw ConfigError("iterations must be at least 1");
   std::cout << "schedule=" << set.name << " n=" << o.iters << " U=" << format_number(set.gamma_upper_bound())
             << " within_ranges=" << (set.within_theorem_ranges() ? "yes" : "no") << "\n";
   if(o.threshold) {
      const auto t = weight_threshold(set.gamma, o.iters, *o.threshold);
      std::cout << "weight_threshold(" << format_number(*o.threshold) << ")=" << (t ? std::to_string(*t) : "not reached")
                << "\n";
   }
   if(with_game) {
      const TreeGame tree = build_tree(o.game.rules());
      const BoundInput in = bound_input(tree, set.gamma_upper_bound(), o.iters);
      std::cout << "delta=" << format_number(in.delta) << " infosets=" << format_number(in.infosets)
                << " max_actions=" << format_number(in.max_actions) << "\n"
                << "hs_dcfr_bound=" << format_number(theorem_bound(in, BoundKind::hs_dcfr)) << "\n"
                << "hs_pcfr_plus_bound=" << format_number(theorem_bound(in, BoundKind::hs_pcfr_plus, o.k))
                << " (K=" << format_number(o.k) << ")\n";
   }
   if(not o.dump.empty()) {
      std::string csv = "t,alpha,beta,gamma,weight\n";
      for(long t = 0; t <= o.iters; ++t) {
         const auto hp = eval_schedule(set, t, o.iters);
         csv += std::to_string(t) + ',' + format_number(hp.alpha) + ',' + format_number(hp.beta) + ','
                + format_number(hp.gamma) + ',' + format_number(strategy_discount(t, hp.gamma)) + '\n';
      }
      if(o.dump == "-") std::cout << csv;
      else write_text_file(o.dump, csv);
   }
   return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
   CLI::App app{"Discounted CFR family solver with scheduled hyperparameters"};
   app.require_subcommand(1);

   GameOptions stats_game;
   auto* stats = app.add_subcommand("stats", "Print tree size and compare with the reference table");
   stats_game.add_to(stats, true);

   SolveOptions solve_opts;
   auto* solve = app.add_subcommand("solve", "Run one solver configuration and write its convergence CSV");
   solve_opts.game.add_to(solve, false);
   solve->add_option("--variant", solve_opts.variant, "cfr, cfr_plus, dcfr or pcfr_plus")
      ->check(CLI::IsMember({"cfr", "cfr_plus", "dcfr", "pcfr_plus"}));
   solve->add_option("--schedule", solve_opts.schedule, "Schedule name or alpha=S:SLOPE,beta=..,gamma=.. (default: the variant's own)");
   solve->add_option("--iters", solve_opts.iters, "Iterations")->capture_default_str();
   solve->add_option("--mode", solve_opts.mode, "alternating or simultaneous")
      ->check(CLI::IsMember({"alternating", "simultaneous"}))
      ->capture_default_str();
   solve->add_option("--checkpoint-every", solve_opts.checkpoint_every, "Checkpoint interval")->capture_default_str();
   solve->add_option("--averaging", solve_opts.averaging, "discount ((t/(t+1))^gamma products) or power (t^gamma weights)")
      ->check(CLI::IsMember({"discount", "power"}))
      ->capture_default_str();
   solve->add_option("--out", solve_opts.out, "CSV path (default: stdout)");
   solve->add_option("--profile-out", solve_opts.profile_out, "Write the average strategy as JSON");
   solve->add_flag("--no-timing", solve_opts.no_timing, "Write 0 in the elapsed_ms column");

   std::string bench_config;
   std::string bench_out = "bench_out";
   unsigned bench_threads = 0;
   auto* bench = app.add_subcommand("bench", "Run an experiment matrix from a JSON config");
   bench->add_option("config", bench_config, "Config path")->required();
   bench->add_option("--out-dir", bench_out, "Output directory")->capture_default_str();
   bench->add_option("--threads", bench_threads, "Worker threads (0 = all cores)")->capture_default_str();

   GameOptions exploit_game;
   std::string exploit_profile;
   std::optional<double> exploit_value;
   auto* exploit = app.add_subcommand("exploit", "Evaluate a strategy profile file");
   exploit_game.add_to(exploit, false);
   exploit->add_option("--profile", exploit_profile, "Profile JSON")->required();
   exploit->add_option("--game-value", exploit_value, "Game value for player 0, enables per-player exploitability");

   BoundOptions bound_opts;
   auto* bound = app.add_subcommand("bound", "Print convergence bounds and dump schedule values");
   {
      std::vector<std::string> names;
      for(auto n : game_names()) names.emplace_back(n);
      bound->add_option("--game", bound_opts.game.name, "Game name")->check(CLI::IsMember(names));
      bound->add_option("--x", bound_opts.game.x, "Game size parameter");
      bound->add_option("--fields", bound_opts.game.fields, "Blotto battlefields");
      bound->add_option("--resources", bound_opts.game.resources, "Blotto resources");
   }
   bound->add_option("--schedule", bound_opts.schedule, "Schedule")->capture_default_str();
   bound->add_option("--iters", bound_opts.iters, "Horizon n / iterations T")->capture_default_str();
   bound->add_option("--k", bound_opts.k, "Constant of the predictive bound")->capture_default_str();
   bound->add_option("--threshold", bound_opts.threshold, "Report the first t with weight >= threshold");
   bound->add_option("--dump", bound_opts.dump, "Write t,alpha,beta,gamma,weight for t = 0..n ('-' for stdout)");

   try {
      app.parse(argc, argv);
   } catch(const CLI::CallForHelp& e) {
      return app.exit(e);
   } catch(const CLI::ParseError& e) {
      app.exit(e);
      return kUsage;
   }

   try {
      if(*stats) return cmd_stats(stats_game);
      if(*solve) return cmd_solve(solve_opts);
      if(*bench) return cmd_bench(bench_config, bench_out, bench_threads);
      if(*exploit) return cmd_exploit(exploit_game, exploit_profile, exploit_value);
      if(*bound) return cmd_bound(bound_opts, not bound_opts.game.name.empty());
   } catch(const IoError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kIo;
   } catch(const std::exception& e) {
      // ConfigError, StructureError, CoverageError, DomainError, out_of_range
      std::cerr << "error: " << e.what() << "\n";
      return kValidation;
   }
   return kUsage;
}

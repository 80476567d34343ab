#pragma once

// Experiment matrix runner: a JSON document with a `runs` array, one
// convergence CSV per run and a summary CSV comparing baselines against
// candidates per group.
//
//   {
//     "defaults": {"iters": 1000, "checkpoint_every": 10},
//     "runs": [
//       {"game": "kuhn", "variant": "pcfr_plus", "schedule": "hs30", "role": "candidate"},
//       {"game": "kuhn", "variant": "dcfr", "role": "baseline"}
//     ]
//   }
//
// Run keys mirror the `solve` flags: game, x, fields, resources, wild,
// full_recall, variant, schedule, iters, mode, checkpoint_every, averaging,
// out. Extra keys: label (default <game>_<variant>_<schedule>), group (default
// the game id) and role (baseline, candidate or other).

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hscfr/games.hpp"
#include "hscfr/solver.hpp"

namespace hscfr {

enum class RunRole { baseline, candidate, other };

struct RunSpec {
   std::string label;
   std::string game;
   GameParams params;
   std::string game_id;
   SolverConfig solver;
   std::string out;
   std::string group;
   RunRole role = RunRole::other;
};

struct BenchConfig {
   std::vector<RunSpec> runs;
   /// Write real solver times into elapsed_ms. Off by default so repeated
   /// invocations produce byte-identical files.
   bool timing = false;
};

/// Throws ConfigError on malformed documents, unresolvable names or clashing
/// output paths.
BenchConfig parse_bench_config(const std::string& json_text);
BenchConfig read_bench_config(const std::filesystem::path& path);

struct RunOutcome {
   bool ok = false;
   std::string error;
   double final_exploitability = 0.0;
   double solve_ms = 0.0;
};

struct SummaryRow {
   std::string group;
   std::string baseline;
   double baseline_exploitability = 0.0;
   std::string candidate;
   double candidate_exploitability = 0.0;
   /// Empty when either exploitability is not positive.
   std::optional<double> oom;
};

struct BenchReport {
   std::vector<RunOutcome> outcomes;  // aligned with config.runs
   std::vector<SummaryRow> summary;
   int failures = 0;
};

/// Runs every entry on `threads` workers (0 = hardware concurrency), writes
/// <out_dir>/<run.out> per run and <out_dir>/summary.csv. File contents do not
/// depend on the worker count. Progress lines go to `log` when given.
BenchReport run_bench(
   const BenchConfig& config, const std::filesystem::path& out_dir, unsigned threads, std::ostream* log = nullptr);

/// Shortest round-trip decimal form, independent of the C locale.
std::string format_number(double value);

std::string convergence_csv(const std::vector<ConvergenceRecord>& records, bool timing = true);
/// Throws IoError naming the path.
void write_text_file(const std::filesystem::path& path, const std::string& text);

std::string summary_csv(const std::vector<SummaryRow>& rows);

}  // namespace hscfr

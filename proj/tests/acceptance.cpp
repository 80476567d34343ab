// Acceptance checks: one PASS/FAIL line per criterion, details indented
// below it. Exit status is the number of failed criteria (capped at 100).

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "hscfr/bench.hpp"
#include "hscfr/evaluation.hpp"
#include "hscfr/games.hpp"
#include "hscfr/regret.hpp"
#include "hscfr/schedule.hpp"
#include "hscfr/solver.hpp"
#include "support.hpp"

using namespace hscfr;
using namespace hscfr::testing;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

// tolerances
constexpr double kOracleTol = 1e-12;       // solver vs literal update equations
constexpr double kEnumerationTol = 1e-9;   // best responses vs enumeration
constexpr double kGameValueTol = 1e-3;     // Kuhn value from a 1000-iteration run
constexpr double kMinOom = 2.0;            // HS-PCFR+(30) over PCFR+
constexpr double kBigLeducBuildSec = 120;  // Big Leduc construction
constexpr double kOtherBuildSec = 30;      // every other game
constexpr double kMatrixMinutes = 30;
constexpr int kFuzzVectors = 10'000;
// an exploitability at or below zero is rounding noise around an exact
// equilibrium; OoM comparisons use this floor instead
constexpr double kExploitabilityFloor = 1e-300;

struct Outcome {
   bool pass = true;
   std::vector<std::string> details;

   void note(const std::string& line) { details.push_back(line); }
   void require(bool ok, const std::string& line)
   {
      details.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
      pass = pass && ok;
   }
};

std::string num(double x)
{
   std::ostringstream os;
   os.precision(4);
   os << x;
   return os.str();
}

double seconds_since(Clock::time_point start)
{
   return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void criterion(const std::string& name, const std::function<void(Outcome&)>& body)
{
   Outcome out;
   try {
      body(out);
   } catch(const std::exception& e) {
      out.pass = false;
      out.note(std::string("exception: ") + e.what());
   }
   std::cout << (out.pass ? "PASS " : "FAIL ") << name << '\n';
   for(const auto& d : out.details) std::cout << "    " << d << '\n';
   std::cout.flush();
   if(not out.pass) ++failures;
}

GameParams x_param(int x)
{
   GameParams p;
   p.x = x;
   return p;
}

// ---------------------------------------------------------------------------

void game_sizes(Outcome& out)
{
   const std::vector<std::pair<std::string, GameParams>> games{
      {"kuhn", {}},
      {"goofspiel_li", x_param(3)},
      {"leduc", {}},
      {"big_leduc", {}},
      {"goofspiel", x_param(4)},
      {"goofspiel_li", x_param(4)},
      {"goofspiel", x_param(5)},
      {"goofspiel_li", x_param(5)},
      {"liars_dice", x_param(4)},
      {"liars_dice", x_param(6)},
      {"battleship", x_param(2)},
      {"battleship", x_param(3)},
   };
   for(const auto& [name, params] : games) {
      const GameRules rules = make_game(name, params);
      const auto start = Clock::now();
      const GameStats stats = tree_stats(build_tree(rules));
      const double secs = seconds_since(start);
      const auto ref = reference_size(rules);
      const bool match = ref && matches_reference(stats, *ref);
      const double limit = name == "big_leduc" ? kBigLeducBuildSec : kOtherBuildSec;
      out.require(match && secs < limit,
                  rules.id() + ": " + std::to_string(stats.histories) + " / " + std::to_string(stats.infosets) + " / "
                     + std::to_string(stats.leaves) + (ref && ref->exact ? " (exact)" : " (2 s.f.)") + ", built in "
                     + num(secs) + " s");
   }
}

void weight_thresholds(Outcome& out)
{
   const std::vector<std::tuple<std::string, ScalarSchedule, long>> cases{
      {"constant gamma=2", ScalarSchedule::constant(2.0), 19},
      {"hs15", builtin_schedule("hs15").gamma, 136},
      {"hs30", builtin_schedule("hs30").gamma, 272},
   };
   for(const auto& [name, gamma, want] : cases) {
      const auto got = weight_threshold(gamma, 1000, 0.9);
      out.require(got == want, name + ": " + (got ? std::to_string(*got) : "not reached") + " (want " + std::to_string(want) + ")");
   }
}

void update_oracle(Outcome& out)
{
   const TreeGame g = build_tree(toy_game());
   for(const char* schedule : {"dcfr", "hs30"}) {
      const long n = 10;
      SolverConfig cfg;
      cfg.variant = Variant::dcfr;
      cfg.schedule = builtin_schedule(schedule);
      cfg.iterations = n;
      Solver solver(g, cfg);
      ToyOracle oracle;
      const int A = g.find_infoset(Player::first, "A");
      const int B = g.find_infoset(Player::second, "B");
      double worst = 0.0;
      for(long t = 0; t < n; ++t) {
         solver.iterate();
         oracle.iterate(t, {cfg.schedule.alpha(t, n), cfg.schedule.beta(t, n), cfg.schedule.gamma(t, n)});
         const std::pair<std::span<const double>, const double*> pairs[] = {
            {solver.cum_regret(Player::first, A), oracle.R0},
            {solver.cum_strategy(Player::first, A), oracle.C0},
            {solver.cum_regret(Player::second, B), oracle.R1},
            {solver.cum_strategy(Player::second, B), oracle.C1},
         };
         for(const auto& [got, want] : pairs) {
            for(std::size_t a = 0; a < got.size(); ++a) worst = std::max(worst, std::abs(got[a] - want[a]));
         }
      }
      out.require(worst <= kOracleTol, std::string("dcfr variant, ") + schedule + " schedule, 10 iterations: max |diff| " + num(worst));
   }
}

void exploitability_oracle(Outcome& out)
{
   std::mt19937_64 rng(2024);
   for(const char* name : {"kuhn", "blotto"}) {
      const TreeGame g = build_tree(make_game(name));
      std::vector<StrategyProfile> profiles{StrategyProfile::uniform(g)};
      if(std::string(name) == "kuhn") {
         profiles.push_back(kuhn_equilibrium(g, 0.0));
         profiles.push_back(kuhn_equilibrium(g, 0.25));
      }
      for(int i = 0; i < 10; ++i) profiles.push_back(random_profile(g, rng, i % 2 ? 0.4 : 0.0));
      double worst = 0.0;
      for(const auto& s : profiles) {
         const double bf0 = brute_force_br(g, s, Player::first);
         const double bf1 = brute_force_br(g, s, Player::second);
         const auto report = exploitability(g, s);
         worst = std::max({worst, std::abs(report.br_values[0] - bf0), std::abs(report.br_values[1] - bf1),
                           std::abs(report.exploitability - (bf0 + bf1) / 2)});
      }
      out.require(worst <= kEnumerationTol, std::string(name) + ": " + std::to_string(profiles.size())
                                               + " profiles vs pure-strategy enumeration, max |diff| " + num(worst));
   }

   const TreeGame kuhn = build_tree(make_game("kuhn"));
   const double closed_form = enumerate_value(kuhn, kuhn_equilibrium(kuhn, 1.0 / 6.0));
   SolverConfig cfg;
   cfg.variant = Variant::dcfr;
   cfg.schedule = builtin_schedule("dcfr");
   cfg.iterations = 1000;
   const RunResult r = run(kuhn, cfg);
   const double value = expected_value(kuhn, r.average)[0];
   out.require(std::abs(value - closed_form) <= kGameValueTol,
               "kuhn value after 1000 alternating dcfr iterations: " + num(value) + " (equilibrium " + num(closed_form) + ")");
}

struct MatrixResult {
   std::map<std::string, double> final_e;
   double minutes = 0;
   int failures = 0;
};

MatrixResult run_matrix(const fs::path& config, const fs::path& dir, unsigned threads)
{
   const BenchConfig cfg = read_bench_config(config);
   const auto start = Clock::now();
   const BenchReport report = run_bench(cfg, dir, threads);
   MatrixResult m;
   m.minutes = seconds_since(start) / 60.0;
   m.failures = report.failures;
   for(std::size_t i = 0; i < cfg.runs.size(); ++i) {
      if(report.outcomes[i].ok) m.final_e[cfg.runs[i].label] = report.outcomes[i].final_exploitability;
   }
   return m;
}

void convergence_orderings(Outcome& out, const MatrixResult& m)
{
   const auto e = [&](const std::string& label) {
      const auto it = m.final_e.find(label);
      if(it == m.final_e.end()) throw std::runtime_error("matrix has no successful run " + label);
      return it->second;
   };
   for(const char* game : {"kuhn", "goofspiel-4", "liars_dice-4", "blotto-3-5"}) {
      const std::string g = game;
      const double base = e(g + "_pcfr_plus_pcfr_plus");
      const double hs = e(g + "_pcfr_plus_hs30");
      const double gap = oom(std::max(base, kExploitabilityFloor), std::max(hs, kExploitabilityFloor));
      out.require(gap >= kMinOom, g + ": HS-PCFR+(30) " + num(hs) + " vs PCFR+ " + num(base) + ", " + num(gap) + " OoM");
   }
   for(const char* game : {"leduc", "goofspiel_li-4"}) {
      const std::string g = game;
      const double base = e(g + "_dcfr_dcfr");
      const double hs = e(g + "_dcfr_hs30");
      out.require(hs < base, g + ": HS-DCFR(30) " + num(hs) + " vs DCFR " + num(base));
   }
   for(const char* game : {"goofspiel_li-4", "blotto-3-5"}) {
      const std::string g = game;
      const double nc = e(g + "_dcfr_dcfr_nc");
      const double hs30 = e(g + "_dcfr_hs30");
      const double hs15 = e(g + "_dcfr_hs15");
      out.require(nc > hs30 && nc > hs15, g + ": DCFR-NC " + num(nc) + " vs HS-DCFR(30) " + num(hs30) + ", HS-DCFR(15) " + num(hs15)
                                             + " (DCFR " + num(e(g + "_dcfr_dcfr")) + ")");
   }
   out.require(m.failures == 0, "matrix runs failed: " + std::to_string(m.failures));
   out.require(m.minutes < kMatrixMinutes, "matrix wall time " + num(m.minutes) + " min");
}

// Same DCFR comparisons with iteration weights k^gamma(t) in place of the
// (t/(t+1))^gamma(t) products; informational only.
void power_averaging_note()
{
   std::cout << "INFO power averaging (weights k^gamma(t)), 1000 alternating iterations:\n";
   for(const auto& [name, params] : std::vector<std::pair<std::string, GameParams>>{
          {"leduc", {}}, {"goofspiel_li", x_param(4)}, {"blotto", {}}}) {
      const TreeGame g = build_tree(make_game(name, params));
      std::cout << "    " << g.name() << ':';
      for(const char* schedule : {"dcfr", "hs30", "hs15", "dcfr_nc"}) {
         SolverConfig cfg;
         cfg.schedule = builtin_schedule(schedule);
         cfg.iterations = 1000;
         cfg.checkpoint_every = 1000;
         cfg.averaging = Averaging::power;
         std::cout << ' ' << schedule << '=' << num(run(g, cfg).final_exploitability());
      }
      std::cout << '\n';
   }
}

void theorem_sanity(Outcome& out)
{
   for(const char* game : {"kuhn", "leduc"}) {
      const TreeGame g = build_tree(make_game(game));
      for(const char* schedule : {"hs30", "hs15", "hs5", "hs30_fixed", "hs30_alpha_fixed", "hs30_beta_fixed", "dcfr"}) {
         SolverConfig cfg;
         cfg.variant = Variant::dcfr;
         cfg.schedule = builtin_schedule(schedule);
         cfg.iterations = 1000;
         cfg.mode = UpdateMode::simultaneous;
         if(not cfg.schedule.within_theorem_ranges() || cfg.schedule.gamma_upper_bound() > 30) {
            out.require(false, std::string(schedule) + " is outside the theorem ranges");
            continue;
         }
         const RunResult r = run(g, cfg);
         double worst_ratio = 0.0;
         bool ok = true;
         for(const auto& c : r.checkpoints) {
            const double bound = theorem_bound(bound_input(g, cfg.schedule.gamma_upper_bound(), c.iteration), BoundKind::hs_dcfr);
            ok = ok && c.exploitability <= bound;
            worst_ratio = std::max(worst_ratio, c.exploitability / bound);
         }
         out.require(ok, std::string(game) + " " + schedule + ": " + std::to_string(r.checkpoints.size())
                            + " checkpoints, max e/bound " + num(worst_ratio));
      }
   }
}

std::vector<double> fuzz_vector(std::mt19937_64& rng, std::size_t k)
{
   std::uniform_real_distribution<double> unit(-1.0, 1.0);
   std::uniform_int_distribution<int> exponent(-12, 12);
   std::uniform_int_distribution<int> shape(0, 9);
   std::vector<double> v(k);
   for(auto& x : v) x = shape(rng) == 0 ? 0.0 : unit(rng) * std::pow(10.0, exponent(rng));
   return v;
}

bool is_distribution(const std::vector<double>& p)
{
   double total = 0.0;
   for(double x : p) {
      if(not(x >= 0.0)) return false;
      total += x;
   }
   return std::abs(total - 1.0) <= 1e-12;
}

void kernel_suite(Outcome& out)
{
   std::mt19937_64 rng(77);
   std::uniform_int_distribution<std::size_t> size(1, 12);
   std::uniform_real_distribution<double> log_scale(-8.0, 8.0);

   int valid = 0, scaled_ok = 0, scaled_checked = 0;
   for(int i = 0; i < kFuzzVectors; ++i) {
      const auto r = fuzz_vector(rng, size(rng));
      std::vector<double> p(r.size()), q(r.size());
      match_strategy(r, p);
      valid += is_distribution(p);
      const double c = std::pow(10.0, log_scale(rng));
      auto s = r;
      double positive = 0.0;
      for(auto& x : s) {
         positive += std::max(x, 0.0);
         x *= c;
      }
      match_strategy(s, q);
      if(positive * std::min(c, 1.0) < 1e-280) continue;  // tiny mass may cross the uniform cutoff
      ++scaled_checked;
      bool same = true;
      for(std::size_t a = 0; a < p.size(); ++a) same = same && std::abs(p[a] - q[a]) <= 1e-12;
      scaled_ok += same;
   }
   for(int i = 0; i < kFuzzVectors; ++i) {
      auto r = fuzz_vector(rng, 6);
      for(auto& x : r) x = std::abs(x);
      std::vector<double> p(r.size());
      predictive_strategy(r, fuzz_vector(rng, 6), p);
      valid += is_distribution(p);
   }
   out.require(valid == 2 * kFuzzVectors, "distribution validity: " + std::to_string(valid) + " / " + std::to_string(2 * kFuzzVectors));
   out.require(scaled_ok == scaled_checked && scaled_checked >= kFuzzVectors * 8 / 10,
               "scale invariance: " + std::to_string(scaled_ok) + " / " + std::to_string(scaled_checked));

   std::uniform_real_distribution<double> alpha(1.0, 5.0), beta(-5.0, 0.0), gamma(0.0, 30.0), unit(-1.0, 1.0);
   const double delta = 3.0;
   double lowest = 0.0;
   for(int i = 0; i < kFuzzVectors; ++i) {
      const std::size_t k = size(rng);
      std::vector<double> R(k, 0.0), C(k, 0.0), sigma(k, 0.0), m(k, 0.0), r(k);
      const double bias = i % 2 ? -1.0 : 0.0;
      for(long t = 0; t < 40; ++t) {
         for(auto& x : r) x = std::clamp(delta * (bias + unit(rng)), -delta, delta);
         const auto triple = t == 0 ? DiscountTriple{} : discount_triple(t, alpha(rng), beta(rng), gamma(rng));
         apply_regret_update({R, C, sigma, m}, r, triple, Variant::dcfr);
         for(double x : R) lowest = std::min(lowest, x);
      }
   }
   out.require(lowest >= -2 * delta, "discounted regrets under beta <= 0: min " + num(lowest) + " >= -2*delta = " + num(-2 * delta));

   int nonneg = 0;
   for(int i = 0; i < kFuzzVectors; ++i) {
      const std::size_t k = size(rng);
      auto start = fuzz_vector(rng, k);
      for(auto& x : start) x = std::abs(x);
      const auto r = fuzz_vector(rng, k);
      bool ok = true;
      for(Variant v : {Variant::cfr_plus, Variant::pcfr_plus}) {
         auto R = start;
         std::vector<double> C(k, 0.0), sigma(k, 0.0), m(k, 0.0);
         apply_regret_update({R, C, sigma, m}, r, {}, v);
         for(double x : R) ok = ok && x >= 0.0;
      }
      nonneg += ok;
   }
   out.require(nonneg == kFuzzVectors, "cfr+/pcfr+ nonnegativity: " + std::to_string(nonneg) + " / " + std::to_string(kFuzzVectors));
}

std::string slurp(const fs::path& p)
{
   std::ifstream in(p, std::ios::binary);
   std::ostringstream s;
   s << in.rdbuf();
   return s.str();
}

void determinism(Outcome& out, const fs::path& root)
{
   const char* config = R"({
     "defaults": {"iters": 300, "checkpoint_every": 10},
     "runs": [
       {"game": "kuhn", "variant": "pcfr_plus", "role": "baseline"},
       {"game": "kuhn", "variant": "pcfr_plus", "schedule": "hs30", "role": "candidate"},
       {"game": "leduc", "variant": "dcfr", "role": "baseline"},
       {"game": "leduc", "variant": "dcfr", "schedule": "hs30", "role": "candidate"},
       {"game": "leduc", "variant": "cfr_plus", "schedule": "cfr_plus", "mode": "simultaneous"},
       {"game": "goofspiel_li", "x": 3, "variant": "dcfr", "schedule": "dcfr_nc"},
       {"game": "blotto", "variant": "pcfr_plus", "schedule": "hs15"},
       {"game": "liars_dice", "x": 4, "variant": "cfr", "schedule": "cfr"}
     ]})";
   const BenchConfig cfg = parse_bench_config(config);
   const std::vector<std::pair<std::string, unsigned>> passes{{"serial", 1}, {"threads4", 4}, {"threads4_again", 4}, {"serial_again", 1}};
   for(const auto& [name, threads] : passes) {
      fs::remove_all(root / name);
      run_bench(cfg, root / name, threads);
   }
   std::vector<std::string> files{"summary.csv"};
   for(const auto& r : cfg.runs) files.push_back(r.out);
   int identical = 0;
   for(const auto& f : files) {
      const std::string ref = slurp(root / "serial" / f);
      bool same = not ref.empty();
      for(const auto& [name, threads] : passes) same = same && slurp(root / name / f) == ref;
      identical += same;
   }
   out.require(identical == static_cast<int>(files.size()),
               std::to_string(identical) + " / " + std::to_string(files.size()) + " files byte-identical across 2 serial and 2 four-thread runs");
}

}  // namespace

int main(int argc, char** argv)
{
   CLI::App app{"acceptance checks"};
   std::string config = "configs/paper_matrix.json";
   std::string out_dir = "acceptance_out";
   unsigned threads = 0;
   bool skip_matrix = false;
   app.add_option("--config", config, "experiment matrix")->capture_default_str();
   app.add_option("--out-dir", out_dir, "scratch directory")->capture_default_str();
   app.add_option("--threads", threads, "matrix workers (0 = all cores)")->capture_default_str();
   app.add_flag("--skip-matrix", skip_matrix, "skip the 1000-iteration matrix");
   CLI11_PARSE(app, argc, argv);

   const fs::path root(out_dir);
   fs::create_directories(root);

   criterion("game sizes match the reference table", game_sizes);
   criterion("weight thresholds at w=0.9, n=1000 are 19 / 136 / 272", weight_thresholds);
   criterion("dcfr updates match the literal equations within 1e-12", update_oracle);
   criterion("exploitability matches enumeration; kuhn value -1/18 recovered", exploitability_oracle);
   if(skip_matrix) {
      std::cout << "SKIP convergence orderings at 1000 iterations\n";
   } else {
      MatrixResult m;
      try {
         m = run_matrix(config, root / "matrix", threads);
      } catch(const std::exception& e) {
         std::cout << "matrix could not run: " << e.what() << '\n';
         m.failures = -1;
      }
      criterion("convergence orderings at 1000 iterations", [&](Outcome& out) { convergence_orderings(out, m); });
      power_averaging_note();
   }
   criterion("simultaneous HS-DCFR stays under the convergence bound", theorem_sanity);
   criterion("regret kernel fuzz suite", kernel_suite);
   criterion("bench output is deterministic", [&](Outcome& out) { determinism(out, root / "determinism"); });

   std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
   return std::min(failures, 100);
}

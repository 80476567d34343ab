#include "hscfr/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hscfr/errors.hpp"
#include "hscfr/evaluation.hpp"

namespace hscfr {

using nlohmann::json;

namespace {

const std::set<std::string> kRunKeys{
   "game", "x", "fields", "resources", "wild", "full_recall", "variant", "schedule", "iters",
   "mode", "checkpoint_every", "averaging", "out", "label", "group", "role"};

template <class T>
std::optional<T> optional_field(const json& run, const char* key, std::size_t index)
{
   if(not run.contains(key)) return std::nullopt;
   try {
      return run.at(key).get<T>();
   } catch(const json::exception&) {
      throw ConfigError("run " + std::to_string(index) + ": field '" + key + "' has the wrong type");
   }
}

RunRole parse_role(const std::string& text, std::size_t index)
{
   if(text == "baseline") return RunRole::baseline;
   if(text == "candidate") return RunRole::candidate;
   if(text == "other") return RunRole::other;
   throw ConfigError("run " + std::to_string(index) + ": role must be baseline, candidate or other");
}

RunSpec parse_run(const json& run, std::size_t index)
{
   if(not run.is_object()) throw ConfigError("run " + std::to_string(index) + " is not an object");
   for(const auto& item : run.items()) {
      if(not kRunKeys.contains(item.key())) {
         throw ConfigError("run " + std::to_string(index) + ": unknown key '" + item.key() + "'");
      }
   }
   RunSpec spec;
   const auto game = optional_field<std::string>(run, "game", index);
   if(not game) throw ConfigError("run " + std::to_string(index) + " has no game");
   spec.game = *game;
   spec.params.x = optional_field<int>(run, "x", index);
   spec.params.fields = optional_field<int>(run, "fields", index);
   spec.params.resources = optional_field<int>(run, "resources", index);
   spec.params.wild = optional_field<bool>(run, "wild", index);
   spec.params.full_recall = optional_field<bool>(run, "full_recall", index);
   spec.game_id = make_game(spec.game, spec.params).id();

   auto& cfg = spec.solver;
   cfg.variant = parse_variant(optional_field<std::string>(run, "variant", index).value_or("dcfr"));
   const auto schedule = optional_field<std::string>(run, "schedule", index);
   cfg.schedule = schedule ? parse_schedule(*schedule) : default_schedule(cfg.variant);
   cfg.iterations = optional_field<long>(run, "iters", index).value_or(1000);
   cfg.mode = parse_update_mode(optional_field<std::string>(run, "mode", index).value_or("alternating"));
   cfg.checkpoint_every = optional_field<long>(run, "checkpoint_every", index).value_or(10);
   cfg.averaging = parse_averaging(optional_field<std::string>(run, "averaging", index).value_or("discount"));
   cfg.validate();

   spec.label = optional_field<std::string>(run, "label", index)
                   .value_or(spec.game_id + "_" + std::string(to_string(cfg.variant)) + "_" + cfg.schedule.name);
   spec.out = optional_field<std::string>(run, "out", index).value_or(spec.label + ".csv");
   spec.group = optional_field<std::string>(run, "group", index).value_or(spec.game_id);
   spec.role = parse_role(optional_field<std::string>(run, "role", index).value_or("other"), index);
   return spec;
}

std::vector<SummaryRow> summarize(const BenchConfig& config, const std::vector<RunOutcome>& outcomes)
{
   std::vector<std::string> order;
   std::map<std::string, SummaryRow> rows;
   std::map<std::string, std::pair<bool, bool>> seen;  // (baseline, candidate)
   for(std::size_t i = 0; i < config.runs.size(); ++i) {
      const RunSpec& spec = config.runs[i];
      if(not rows.contains(spec.group)) {
         order.push_back(spec.group);
         rows[spec.group].group = spec.group;
      }
      const RunOutcome& out = outcomes[i];
      if(not out.ok || spec.role == RunRole::other) continue;
      auto& row = rows[spec.group];
      auto& [has_base, has_cand] = seen[spec.group];
      const double e = out.final_exploitability;
      if(spec.role == RunRole::baseline && (not has_base || e < row.baseline_exploitability)) {
         has_base = true;
         row.baseline = spec.label;
         row.baseline_exploitability = e;
      }
      if(spec.role == RunRole::candidate && (not has_cand || e < row.candidate_exploitability)) {
         has_cand = true;
         row.candidate = spec.label;
         row.candidate_exploitability = e;
      }
   }
   std::vector<SummaryRow> summary;
   for(const auto& group : order) {
      const auto [has_base, has_cand] = seen[group];
      if(not has_base || not has_cand) continue;
      SummaryRow row = rows[group];
      if(row.baseline_exploitability > 0.0 && row.candidate_exploitability > 0.0) {
         row.oom = oom(row.baseline_exploitability, row.candidate_exploitability);
      }
      summary.push_back(std::move(row));
   }
   return summary;
}

}  // namespace

BenchConfig parse_bench_config(const std::string& json_text)
{
   json doc;
   try {
      doc = json::parse(json_text);
   } catch(const json::parse_error& e) {
      throw ConfigError(std::string("bench config is not valid JSON: ") + e.what());
   }
   if(not doc.is_object()) throw ConfigError("bench config must be a JSON object");
   for(const auto& item : doc.items()) {
      if(item.key() != "runs" && item.key() != "defaults" && item.key() != "timing") {
         throw ConfigError("bench config: unknown top-level key '" + item.key() + "'");
      }
   }
   BenchConfig config;
   if(doc.contains("timing")) {
      if(not doc["timing"].is_boolean()) throw ConfigError("bench config: 'timing' must be a boolean");
      config.timing = doc["timing"].get<bool>();
   }
   const json defaults = doc.value("defaults", json::object());
   if(not defaults.is_object()) throw ConfigError("bench config: 'defaults' must be an object");
   const json runs = doc.value("runs", json::array());
   if(not runs.is_array()) throw ConfigError("bench config: 'runs' must be an array");

   std::set<std::string> outputs{"summary.csv"};
   for(std::size_t i = 0; i < runs.size(); ++i) {
      json merged = defaults;
      if(runs[i].is_object()) merged.update(runs[i]);
      else merged = runs[i];
      RunSpec spec = parse_run(merged, i);
      if(not outputs.insert(spec.out).second) {
         throw ConfigError("run " + std::to_string(i) + ": output '" + spec.out + "' is used twice");
      }
      config.runs.push_back(std::move(spec));
   }
   return config;
}

BenchConfig read_bench_config(const std::filesystem::path& path)
{
   std::ifstream in(path, std::ios::binary);
   if(not in) throw IoError("cannot read bench config " + path.string());
   std::ostringstream buf;
   buf << in.rdbuf();
   return parse_bench_config(buf.str());
}

std::string format_number(double value)
{
   char buf[64];
   const auto res = std::to_chars(buf, buf + sizeof buf, value);
   return std::string(buf, res.ptr);
}

std::string convergence_csv(const std::vector<ConvergenceRecord>& records, bool timing)
{
   std::string out = "iteration,exploitability,elapsed_ms\n";
   for(const auto& r : records) {
      out += std::to_string(r.iteration);
      out += ',';
      out += format_number(r.exploitability);
      out += ',';
      if(timing) {
         char buf[64];
         const auto res = std::to_chars(buf, buf + sizeof buf, r.elapsed_ms, std::chars_format::fixed, 3);
         out.append(buf, res.ptr);
      } else {
         out += '0';
      }
      out += '\n';
   }
   return out;
}

std::string summary_csv(const std::vector<SummaryRow>& rows)
{
   std::string out = "game,baseline,baseline_exploitability,candidate,candidate_exploitability,oom\n";
   for(const auto& r : rows) {
      out += r.group + ',' + r.baseline + ',' + format_number(r.baseline_exploitability) + ',' + r.candidate
             + ',' + format_number(r.candidate_exploitability) + ',' + (r.oom ? format_number(*r.oom) : "")
             + '\n';
   }
   return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
   std::ofstream out(path, std::ios::binary | std::ios::trunc);
   if(not out || not(out << text) || not out.flush()) throw IoError("cannot write " + path.string());
}

BenchReport run_bench(const BenchConfig& config, const std::filesystem::path& out_dir, unsigned threads, std::ostream* log)
{
   std::error_code ec;
   std::filesystem::create_directories(out_dir, ec);
   if(ec) throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());

   // trees are immutable, so each distinct game is built once and shared
   std::map<std::string, std::shared_ptr<const TreeGame>> trees;
   for(const auto& spec : config.runs) {
      if(not trees.contains(spec.game_id)) {
         trees[spec.game_id] = std::make_shared<const TreeGame>(build_tree(make_game(spec.game, spec.params)));
      }
   }

   BenchReport report;
   report.outcomes.resize(config.runs.size());
   std::mutex log_mutex;
   std::atomic<std::size_t> next{0};
   auto worker = [&] {
      for(std::size_t i = next++; i < config.runs.size(); i = next++) {
         const RunSpec& spec = config.runs[i];
         RunOutcome& outcome = report.outcomes[i];
         try {
            const RunResult result = run(*trees.at(spec.game_id), spec.solver);
            write_text_file(out_dir / spec.out, convergence_csv(result.checkpoints, config.timing));
            outcome.ok = true;
            outcome.final_exploitability = result.final_exploitability();
            outcome.solve_ms = result.solve_ms;
         } catch(const std::exception& e) {
            outcome.error = e.what();
         }
         if(log) {
            std::lock_guard lock(log_mutex);
            if(outcome.ok) {
               *log << spec.label << ": exploitability " << format_number(outcome.final_exploitability) << " in "
                    << static_cast<long>(outcome.solve_ms) << " ms\n";
            } else {
               *log << spec.label << ": FAILED: " << outcome.error << '\n';
            }
         }
      }
   };

   if(threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
   threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(config.runs.size(), 1)));
   if(threads <= 1) {
      worker();
   } else {
      std::vector<std::jthread> pool;
      for(unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
   }

   for(const auto& o : report.outcomes) report.failures += o.ok ? 0 : 1;
   report.summary = summarize(config, report.outcomes);
   write_text_file(out_dir / "summary.csv", summary_csv(report.summary));
   return report;
}

}  // namespace hscfr

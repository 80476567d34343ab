#include "hscfr/schedule.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hscfr/errors.hpp"

namespace hscfr {

namespace {

constexpr std::array<std::string_view, 12> kNames{
   "hs30", "hs15", "hs40", "hs5", "hs30_fixed", "hs30_alpha_fixed", "hs30_beta_fixed",
   "dcfr", "dcfr_nc", "pcfr_plus", "cfr_plus", "cfr"};

const ScalarSchedule kHsAlpha = ScalarSchedule::linear(1.0, 3.0);
const ScalarSchedule kHsBeta = ScalarSchedule::linear(-1.0, -2.0);

ScheduleSet hs_with_gamma(std::string name, ScalarSchedule gamma)
{
   return ScheduleSet{std::move(name), kHsAlpha, kHsBeta, gamma};
}

double parse_number(std::string_view text, std::string_view context)
{
   double value = 0.0;
   const auto* end = text.data() + text.size();
   const auto res = std::from_chars(text.data(), end, value);
   if(res.ec != std::errc{} || res.ptr != end) {
      throw ConfigError("schedule '" + std::string(context) + "': cannot parse number '"
                        + std::string(text) + "'");
   }
   return value;
}

ScalarSchedule parse_component(std::string_view text, std::string_view context)
{
   const auto colon = text.find(':');
   if(colon == std::string_view::npos) return ScalarSchedule::constant(parse_number(text, context));
   return ScalarSchedule::linear(
      parse_number(text.substr(0, colon), context), parse_number(text.substr(colon + 1), context));
}

}  // namespace

bool ScheduleSet::within_theorem_ranges() const
{
   return alpha.min_over_horizon() >= 1.0 && alpha.max_over_horizon() <= 5.0
          && beta.min_over_horizon() >= -5.0 && beta.max_over_horizon() <= 0.0
          && gamma.min_over_horizon() >= 0.0 && std::isfinite(gamma.max_over_horizon());
}

void ScheduleSet::validate() const
{
   if(not(zero_weight_prefix_fraction >= 0.0 && zero_weight_prefix_fraction < 1.0)) {
      throw ConfigError("schedule '" + name + "': zero-weight prefix fraction must lie in [0, 1)");
   }
   if(not bound_exempt && not within_theorem_ranges()) {
      throw ConfigError("schedule '" + name
                        + "' leaves alpha in [1, 5], beta in [-5, 0], gamma >= 0 and is not "
                          "flagged bound-exempt");
   }
}

HyperParams eval_schedule(const ScheduleSet& set, long t, long n)
{
   if(n < 1) throw std::out_of_range("schedule horizon must be at least 1");
   if(t < 0 || t > n) {
      throw std::out_of_range("iteration " + std::to_string(t) + " outside schedule horizon [0, "
                              + std::to_string(n) + "]");
   }
   return {set.alpha(t, n), set.beta(t, n), set.gamma(t, n)};
}

std::span<const std::string_view> schedule_names() { return kNames; }

ScheduleSet builtin_schedule(std::string_view name)
{
   if(name == "hs30") return hs_with_gamma("hs30", ScalarSchedule::linear(30.0, -5.0));
   if(name == "hs15") return hs_with_gamma("hs15", ScalarSchedule::linear(15.0, -5.0));
   if(name == "hs40") return hs_with_gamma("hs40", ScalarSchedule::linear(40.0, -5.0));
   if(name == "hs5") return hs_with_gamma("hs5", ScalarSchedule::linear(5.0, -5.0));
   if(name == "hs30_fixed") return hs_with_gamma("hs30_fixed", ScalarSchedule::constant(30.0));
   if(name == "hs30_alpha_fixed") {
      auto set = builtin_schedule("hs30");
      set.name = "hs30_alpha_fixed";
      set.alpha = ScalarSchedule::constant(1.0);
      return set;
   }
   if(name == "hs30_beta_fixed") {
      auto set = builtin_schedule("hs30");
      set.name = "hs30_beta_fixed";
      set.beta = ScalarSchedule::constant(-1.0);
      return set;
   }
   if(name == "dcfr") return ScheduleSet{"dcfr"};
   if(name == "dcfr_nc") {
      ScheduleSet set{"dcfr_nc"};
      set.zero_weight_prefix_fraction = 1.0 / 3.0;
      return set;
   }
   if(name == "pcfr_plus") return ScheduleSet{"pcfr_plus"};
   if(name == "cfr_plus") {
      ScheduleSet set{"cfr_plus"};
      set.gamma = ScalarSchedule::constant(1.0);
      set.clip_regrets = true;
      set.bound_exempt = true;
      return set;
   }
   if(name == "cfr") {
      // uniform averaging, no discounting
      ScheduleSet set{"cfr"};
      set.gamma = ScalarSchedule::constant(0.0);
      set.bound_exempt = true;
      return set;
   }
   throw ConfigError("unknown schedule '" + std::string(name) + "'");
}

ScheduleSet parse_schedule(std::string_view text)
{
   if(text.find('=') == std::string_view::npos && text != "exempt") return builtin_schedule(text);
   auto set = builtin_schedule("hs30");
   set.name = std::string(text);
   std::size_t pos = 0;
   while(pos <= text.size()) {
      auto comma = text.find(',', pos);
      if(comma == std::string_view::npos) comma = text.size();
      const auto item = text.substr(pos, comma - pos);
      pos = comma + 1;
      if(item.empty()) continue;
      if(item == "exempt") {
         set.bound_exempt = true;
         continue;
      }
      const auto eq = item.find('=');
      if(eq == std::string_view::npos) {
         throw ConfigError("schedule '" + std::string(text) + "': expected key=value, got '"
                           + std::string(item) + "'");
      }
      const auto key = item.substr(0, eq);
      const auto value = item.substr(eq + 1);
      if(key == "alpha") set.alpha = parse_component(value, text);
      else if(key == "beta") set.beta = parse_component(value, text);
      else if(key == "gamma") set.gamma = parse_component(value, text);
      else if(key == "prefix") set.zero_weight_prefix_fraction = parse_number(value, text);
      else {
         throw ConfigError("schedule '" + std::string(text) + "': unknown component '"
                           + std::string(key) + "'");
      }
   }
   set.validate();
   return set;
}

double strategy_discount(long t, double gamma)
{
   const double td = static_cast<double>(t);
   return std::pow(td / (td + 1.0), gamma);
}

std::optional<long> weight_threshold(const ScalarSchedule& gamma, long n, double w)
{
   if(not(w > 0.0 && w < 1.0)) throw DomainError("weight threshold must lie in (0, 1)");
   if(n < 1) throw std::out_of_range("schedule horizon must be at least 1");
   for(long t = 1; t <= n; ++t) {
      if(strategy_discount(t, gamma(t, n)) >= w) return t;
   }
   return std::nullopt;
}

}  // namespace hscfr

#include "hscfr/regret.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "hscfr/errors.hpp"

namespace hscfr {

namespace {

void fill_uniform(std::span<double> out)
{
   std::fill(out.begin(), out.end(), 1.0 / static_cast<double>(out.size()));
}

}  // namespace

std::string_view to_string(Variant v)
{
   switch(v) {
      case Variant::cfr: return "cfr";
      case Variant::cfr_plus: return "cfr_plus";
      case Variant::dcfr: return "dcfr";
      case Variant::pcfr_plus: return "pcfr_plus";
   }
   return "?";
}

Variant parse_variant(std::string_view name)
{
   if(name == "cfr") return Variant::cfr;
   if(name == "cfr_plus") return Variant::cfr_plus;
   if(name == "dcfr") return Variant::dcfr;
   if(name == "pcfr_plus") return Variant::pcfr_plus;
   throw ConfigError("unknown variant '" + std::string(name) + "' (expected cfr, cfr_plus, dcfr or pcfr_plus)");
}

void match_strategy(std::span<const double> cum_regret, std::span<double> sigma)
{
   assert(cum_regret.size() == sigma.size() && not sigma.empty());
   double total = 0.0;
   for(std::size_t a = 0; a < cum_regret.size(); ++a) {
      sigma[a] = cum_regret[a] > 0.0 ? cum_regret[a] : 0.0;
      total += sigma[a];
   }
   if(total < kTinyMass) {
      fill_uniform(sigma);
      return;
   }
   for(auto& s : sigma) s /= total;
}

void predictive_strategy(
   std::span<const double> cum_regret, std::span<const double> prediction, std::span<double> sigma)
{
   assert(cum_regret.size() == prediction.size() && cum_regret.size() == sigma.size());
   double total = 0.0;
   for(std::size_t a = 0; a < cum_regret.size(); ++a) {
      sigma[a] = std::max(cum_regret[a] + prediction[a], 0.0);
      total += sigma[a];
   }
   if(total < kTinyMass) {
      fill_uniform(sigma);
      return;
   }
   for(auto& s : sigma) s /= total;
}

DiscountTriple discount_triple(long t, double alpha, double beta, double gamma)
{
   const double td = static_cast<double>(t);
   // t^a / (t^a + 1) written as 1 / (1 + t^-a) so large alpha cannot overflow
   const double pos = 1.0 / (1.0 + std::pow(td, -alpha));
   const double neg = 1.0 / (1.0 + std::pow(td, -beta));
   const double strat = std::pow(td / (td + 1.0), gamma);
   return {pos, neg, strat};
}

void apply_regret_update(
   const InfoSetView& state, std::span<const double> instant_regret, const DiscountTriple& triple, Variant variant)
{
   auto& R = state.cum_regret;
   assert(R.size() == instant_regret.size());
   switch(variant) {
      case Variant::dcfr:
         for(std::size_t a = 0; a < R.size(); ++a) {
            R[a] = R[a] * (R[a] > 0.0 ? triple.pos : triple.neg) + instant_regret[a];
         }
         break;
      case Variant::cfr_plus:
      case Variant::pcfr_plus:
         for(std::size_t a = 0; a < R.size(); ++a) R[a] = std::max(R[a] + instant_regret[a], 0.0);
         if(variant == Variant::pcfr_plus) {
            std::copy(instant_regret.begin(), instant_regret.end(), state.prediction.begin());
         }
         break;
      case Variant::cfr:
         for(std::size_t a = 0; a < R.size(); ++a) R[a] += instant_regret[a];
         break;
   }
}

void accumulate_strategy(
   std::span<double> cum_strategy, double own_reach, std::span<const double> sigma, double strat_mult)
{
   assert(cum_strategy.size() == sigma.size());
   for(std::size_t a = 0; a < sigma.size(); ++a) {
      cum_strategy[a] = cum_strategy[a] * strat_mult + own_reach * sigma[a];
   }
}

void normalize_average(std::span<const double> cum_strategy, std::span<double> out)
{
   assert(cum_strategy.size() == out.size());
   double total = 0.0;
   for(double c : cum_strategy) total += c;
   if(total < kTinyMass) {
      fill_uniform(out);
      return;
   }
   for(std::size_t a = 0; a < out.size(); ++a) out[a] = cum_strategy[a] / total;
}

}  // namespace hscfr

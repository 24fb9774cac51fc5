#include "cheb/report.hpp"

namespace cheb {

using nlohmann::json;

std::string decimal12(const Rational& r) { return to_decimal(r, kReportDigits); }

namespace {

json rational_json(const Rational& r) { return {{"exact", to_string(r)}, {"decimal", decimal12(r)}}; }

json alpha_json(const AlphaValue& a) {
  json j = {{"value", rational_json(a.value)}};
  j["branch1"] = a.branch1 ? rational_json(*a.branch1) : json(nullptr);
  j["branch2"] = a.branch2 ? rational_json(*a.branch2) : json(nullptr);
  return j;
}

json module_json(const ChiefFactorModule& v) {
  json j = {{"label", v.label},
            {"p", v.p},
            {"n_raw", v.n_raw},
            {"q", v.q},
            {"n", v.n},
            {"delta", v.delta},
            {"theta", v.theta},
            {"central", v.central},
            {"complemented", v.complemented},
            {"h_order", v.h_order},
            {"p_fix", rational_json(v.p_fix)}};
  j["m"] = v.m ? json(*v.m) : json(nullptr);
  return j;
}

}  // namespace

json group_json(const ParsedGroup& g) {
  return {{"label", g.label},
          {"order", g.group.order()},
          {"degree", g.group.degree()},
          {"soluble", is_soluble(g.group)}};
}

json cheb_json(const ChebValue& v) {
  return {{"exact", to_string(v.exact)},
          {"decimal", decimal12(v.exact)},
          {"method", v.method},
          {"sieve_count", v.sieve_count},
          {"term_count", v.terms.size()}};
}

json mc_json(const McReport& mc, const Rational& exact) {
  return {{"trials", mc.trials},
          {"seed", mc.seed},
          {"mean", mc.mean},
          {"variance", mc.variance},
          {"ci95", {mc.ci95_lo, mc.ci95_hi}},
          {"max_waiting_time", mc.max_waiting_time},
          {"exact", to_string(exact)},
          {"exact_decimal", decimal12(exact)}};
}

json crowns_json(const CrownData& crowns) {
  json series = json::array();
  for (const auto& f : crowns.series.factors) series.push_back({{"order", f.order}, {"abelian", f.abelian}});
  json a = json::array(), b = json::array(), nonab = json::array();
  for (const auto& v : crowns.a) a.push_back(module_json(v));
  for (const auto& v : crowns.b) b.push_back(module_json(v));
  for (const auto& f : crowns.nonabelian_factors)
    nonab.push_back({{"order", f.order}, {"complemented", f.complemented}, {"position", f.position}});
  return {{"series", series}, {"noncentral", a}, {"central", b}, {"nonabelian", nonab}};
}

json bounds_json(const BoundReport& b) {
  json j = {{"group_id", b.group_id},
            {"order", b.order},
            {"soluble", b.soluble},
            {"d", b.d},
            {"sigma", std::string(kSigmaText)},
            {"five_thirds_bound", rational_json(b.five_thirds_bound)},
            {"verdicts",
             {{"crown", verdict_name(b.crown)},
              {"generators", verdict_name(b.generators)},
              {"five_thirds", verdict_name(b.five_thirds)},
              {"v_property", verdict_name(b.v_property)}}}};
  j["exact"] = b.exact ? rational_json(*b.exact) : json(nullptr);
  if (b.soluble) {
    j["crown_bound"] = rational_json(b.crown_bound);
    j["generator_bound"] = rational_json(b.generator_bound);
    j["generator_bound_fallback"] = b.generator_bound_fallback;
    j["v_property_bound"] = rational_json(b.v_property_bound);
  } else {
    j["crown_bound"] = j["generator_bound"] = j["v_property_bound"] = nullptr;
    j["generator_bound_fallback"] = false;
  }
  json factors = json::array();
  for (const auto& f : b.per_factor) factors.push_back({{"label", f.label}, {"alpha", alpha_json(f.alpha)}});
  j["per_factor"] = factors;
  return j;
}

json criteria_json(const std::vector<CriterionResult>& results) {
  json arr = json::array();
  for (const auto& r : results)
    arr.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
  return arr;
}

json make_report(const std::string& command) {
  return {{"schema_version", kReportSchemaVersion}, {"command", command}};
}

}  // namespace cheb

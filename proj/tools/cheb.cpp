// cheb: command-line front end for the Chebotarev invariant library.
#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cheb/error.hpp"
#include "cheb/report.hpp"
#include "cheb/subgroups.hpp"

using nlohmann::json;
using namespace cheb;

namespace {

struct Common {
  bool json_out = false;
  std::size_t cap_order = kDefaultOrderCap;
  std::size_t cap_sieves = kDefaultSieveCap;
  std::string file;
  std::vector<std::string> spec;
};

void add_common(CLI::App* cmd, Common& c, bool needs_group) {
  cmd->add_flag("--json", c.json_out, "emit JSON instead of a table");
  cmd->add_option("--cap-order", c.cap_order, "largest group order accepted")->check(CLI::PositiveNumber);
  cmd->add_option("--cap-sieves", c.cap_sieves, "largest sieve count for inclusion-exclusion")
      ->check(CLI::Range(1, 62));
  if (needs_group) {
    cmd->add_option("--file", c.file, "read groups from a file, one per line");
    // the group text is taken verbatim from the leftover arguments; a declared
    // positional would have CLI11 reinterpret "[[0,1],[1,1]]" as a list
    cmd->allow_extras();
    cmd->footer("GROUP SPEC: cyclic n | elementary p d | dihedral n | symmetric n | alternating n | quaternion8\n"
                "  | direct_product { spec } { spec } ... | affine p n [[..],[..]] ... [power k]\n"
                "  | perm degree (1,2,3)(4,5) (1,2) ...");
  }
}

std::vector<ParsedGroup> load_groups(const Common& c) {
  if (!c.file.empty()) {
    std::ifstream in(c.file);
    if (!in) throw std::runtime_error("cannot open " + c.file);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_group_file(ss.str(), c.cap_order);
  }
  if (c.spec.empty()) throw Error(ErrorCode::ParseError, "no group spec given");
  std::string text;
  for (const auto& s : c.spec) text += s + " ";
  std::vector<ParsedGroup> out;
  out.push_back(parse_group(text, c.cap_order));
  return out;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void emit(const std::vector<json>& reports) {
  if (reports.size() == 1)
    std::cout << reports.front().dump(2) << "\n";
  else
    std::cout << json(reports).dump(2) << "\n";
}

void print_module_row(const json& v) {
  std::cout << "  " << std::left << std::setw(10) << v["label"].get<std::string>() << " q=" << v["q"]
            << " n=" << v["n"] << " delta=" << v["delta"] << " theta=" << v["theta"] << " |H|=" << v["h_order"]
            << " p_fix=" << v["p_fix"]["exact"].get<std::string>()
            << " m=" << (v["m"].is_null() ? std::string("?") : v["m"].dump()) << "\n";
}

int run_exact(const Common& c) {
  std::vector<json> reports;
  for (const auto& g : load_groups(c)) {
    const auto t0 = std::chrono::steady_clock::now();
    ChebValue v;
    if (g.group.is_trivial()) {
      v = chebotarev(g.group, c.cap_sieves);
    } else {
      v = chebotarev(build_sieves(g.group, maximal_classes(g.group)), c.cap_sieves);
    }
    json r = make_report("exact");
    r["group"] = group_json(g);
    r["chebotarev"] = cheb_json(v);
    r["timings"] = {{"total_seconds", elapsed(t0)}};
    if (!c.json_out)
      std::cout << g.label << "  |G|=" << g.group.order() << "  C(G)=" << to_string(v.exact) << " ~ "
                << decimal12(v.exact) << "  [" << v.method << ", " << v.sieve_count << " sieves]\n";
    reports.push_back(std::move(r));
  }
  if (c.json_out) emit(reports);
  return 0;
}

int run_mc(const Common& c, std::uint64_t trials, std::uint64_t seed) {
  std::vector<json> reports;
  for (const auto& g : load_groups(c)) {
    const auto t0 = std::chrono::steady_clock::now();
    if (g.group.is_trivial()) throw Error(ErrorCode::TrivialGroup, "nothing to simulate for the trivial group");
    const SieveSystem sieves = build_sieves(g.group, maximal_classes(g.group));
    const McReport mc = mc_estimate(sieves, trials, seed);
    const Rational exact = chebotarev(sieves, c.cap_sieves).exact;
    json r = make_report("mc");
    r["group"] = group_json(g);
    r["mc"] = mc_json(mc, exact);
    r["timings"] = {{"total_seconds", elapsed(t0)}};
    if (!c.json_out)
      std::cout << g.label << "  |G|=" << g.group.order() << "  mean=" << std::setprecision(12) << mc.mean
                << "  95% CI [" << mc.ci95_lo << ", " << mc.ci95_hi << "]  exact=" << decimal12(exact)
                << "  trials=" << trials << " seed=" << seed << "\n";
    reports.push_back(std::move(r));
  }
  if (c.json_out) emit(reports);
  return 0;
}

int run_crowns(const Common& c) {
  std::vector<json> reports;
  for (const auto& g : load_groups(c)) {
    const auto t0 = std::chrono::steady_clock::now();
    json r = make_report("crowns");
    r["group"] = group_json(g);
    if (g.group.is_trivial()) {
      r["crowns"] = {{"series", json::array()},
                     {"noncentral", json::array()},
                     {"central", json::array()},
                     {"nonabelian", json::array()}};
    } else {
      SubgroupLattice lattice(g.group);
      r["crowns"] = crowns_json(crown_data(lattice));
    }
    r["timings"] = {{"total_seconds", elapsed(t0)}};
    if (!c.json_out) {
      std::cout << g.label << "  |G|=" << g.group.order() << "\n chief factor orders:";
      for (const auto& f : r["crowns"]["series"]) std::cout << " " << f["order"] << (f["abelian"] ? "" : "*");
      std::cout << "\n non-central classes (A):\n";
      for (const auto& v : r["crowns"]["noncentral"]) print_module_row(v);
      std::cout << " central classes (B):\n";
      for (const auto& v : r["crowns"]["central"]) print_module_row(v);
    }
    reports.push_back(std::move(r));
  }
  if (c.json_out) emit(reports);
  return 0;
}

int run_bounds(const Common& c) {
  std::vector<json> reports;
  bool violated = false;
  for (const auto& g : load_groups(c)) {
    const auto t0 = std::chrono::steady_clock::now();
    BoundOptions opts;
    opts.sieve_cap = c.cap_sieves;
    const BoundReport b = evaluate_bounds(g.group, g.label, opts);
    violated = violated || b.any_violated();
    json r = make_report("bounds");
    r["group"] = group_json(g);
    r["bounds"] = bounds_json(b);
    r["timings"] = {{"total_seconds", elapsed(t0)}};
    if (!c.json_out) {
      const auto& j = r["bounds"];
      auto dec = [](const json& x) { return x.is_null() ? std::string("-") : x["decimal"].get<std::string>(); };
      std::cout << g.label << "  |G|=" << b.order << "  d(G)=" << b.d << "\n"
                << "  C(G)              " << dec(j["exact"]) << "\n"
                << "  crown bound       " << dec(j["crown_bound"]) << "  " << verdict_name(b.crown) << "\n"
                << "  d(G) bound        " << dec(j["generator_bound"])
                << (b.generator_bound_fallback
                        ? " (no non-central crown; checked against d(G)+sigma = " +
                              decimal12(Rational(b.d) + sigma_upper()) + ")"
                        : std::string())
                << "  "
                << verdict_name(b.generators) << "\n"
                << "  (5/3)sqrt|G|      " << dec(j["five_thirds_bound"]) << "  " << verdict_name(b.five_thirds) << "\n"
                << "  V-property bound  " << dec(j["v_property_bound"]) << "  " << verdict_name(b.v_property) << "\n";
      for (const auto& f : j["per_factor"])
        std::cout << "  alpha " << f["label"].get<std::string>() << " = " << f["alpha"]["value"]["decimal"].get<std::string>()
                  << "\n";
    }
    reports.push_back(std::move(r));
  }
  if (c.json_out) emit(reports);
  return violated ? 1 : 0;
}

int run_verify(const Common& c, std::size_t seeds, std::uint64_t trials) {
  VerifyOptions opts;
  opts.mc_seeds = seeds;
  opts.mc_trials = trials;
  const auto t0 = std::chrono::steady_clock::now();
  const auto results = run_all_criteria(opts);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (c.json_out) {
    json rep = make_report("verify-paper");
    rep["criteria"] = criteria_json(results);
    rep["all_pass"] = all;
    rep["timings"] = {{"total_seconds", elapsed(t0)}};
    std::cout << rep.dump(2) << "\n";
  } else {
    for (const auto& r : results)
      std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " (" << std::fixed
                << std::setprecision(2) << r.seconds << "s): " << r.detail << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chebotarev invariant, crown data and bounds for finite permutation groups"};
  app.require_subcommand(1);

  Common common;
  auto* exact = app.add_subcommand("exact", "exact C(G)");
  add_common(exact, common, true);

  std::uint64_t trials = 100000, seed = 1;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of C(G)");
  add_common(mc, common, true);
  mc->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed, "64-bit seed");

  auto* bounds = app.add_subcommand("bounds", "C(G) against every bound");
  add_common(bounds, common, true);

  auto* crowns = app.add_subcommand("crowns", "chief series and crown data");
  add_common(crowns, common, true);

  std::size_t seeds = 50;
  std::uint64_t verify_trials = 100000;
  auto* verify = app.add_subcommand("verify-paper", "run the full regression catalog");
  add_common(verify, common, false);
  verify->add_option("--mc-seeds", seeds, "Monte Carlo seeds per group")->check(CLI::PositiveNumber);
  verify->add_option("--trials", verify_trials, "Monte Carlo trials per seed")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);
  for (auto* cmd : {exact, mc, bounds, crowns})
    if (cmd->parsed()) common.spec = cmd->remaining();

  try {
    if (exact->parsed()) return run_exact(common);
    if (mc->parsed()) return run_mc(common, trials, seed);
    if (bounds->parsed()) return run_bounds(common);
    if (crowns->parsed()) return run_crowns(common);
    if (verify->parsed()) return run_verify(common, seeds, verify_trials);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mobius/bounds.hpp"
#include "mobius/errors.hpp"
#include "mobius/io.hpp"
#include "mobius/knapsack.hpp"
#include "mobius/permutahedron.hpp"
#include "mobius/permutations.hpp"
#include "mobius/pointed.hpp"
#include "mobius/pointed_posets.hpp"
#include "mobius/theorems.hpp"
#include "mobius/verify.hpp"

namespace {

mobius::Bounds parse_bounds(const std::string& text) {
  mobius::Bounds b;
  if (mobius::detail::trim(text).empty()) return b;
  for (const auto& item : mobius::detail::split(text, ',')) {
    auto kv = mobius::detail::split(item, '=');
    if (kv.size() != 2)
      mobius::fail(mobius::errc::parse_error,
                   "bounds entries look like key=value, got " + item);
    const std::string key = mobius::detail::trim(kv[0]);
    const int value = mobius::detail::parse_int(kv[1], mobius::errc::parse_error);
    if (key == "i") b.i = value;
    else if (key == "pi") b.pi = value;
    else if (key == "c") b.c = value;
    else if (key == "q") b.q = value;
    else if (key == "eulerian") b.eulerian = value;
    else if (key == "enum") b.enumeration = value;
    else if (key == "census") b.census = value;
    else
      mobius::fail(mobius::errc::parse_error, "unknown bound key " + key);
  }
  return b;
}

int exit_code_for(mobius::errc code) {
  switch (code) {
    case mobius::errc::parse_error:
    case mobius::errc::invalid_input:
    case mobius::errc::malformed_composition:
    case mobius::errc::malformed_partition:
    case mobius::errc::unknown_element:
    case mobius::errc::mismatched_n:
    case mobius::errc::sum_mismatch:
    case mobius::errc::empty_filter:
      return 2;
    case mobius::errc::bound_exceeded:
    case mobius::errc::out_of_range:
      return 3;
    case mobius::errc::disagreement:
    case mobius::errc::construction_mismatch:
      return 4;
    default:
      return 1;
  }
}

std::vector<int> parse_parts(const std::string& text) {
  std::vector<int> out;
  if (mobius::detail::trim(text).empty()) return out;
  for (const auto& tok : mobius::detail::split(text, ','))
    out.push_back(mobius::detail::parse_int(tok, mobius::errc::malformed_partition));
  return out;
}

struct Options {
  std::string bounds_text;
  // mu
  int mu_n = -1;
  std::vector<std::string> generators;
  int max_parts = 0;
  int r = 0, m = -1;
  // beta
  std::string composition;
  std::string route = "auto";
  bool witnesses = false;
  // knapsack / vset
  std::string lambda_text;
  int census_n = -1;
  int vset_m = -1;
  std::string format;
  // verify
  std::vector<std::string> only;
  int n_max = 0;
  std::uint64_t seed = 20240801;
  // export
  std::string poset_kind;
  int export_n = -1;
  int export_p = -1;
};

int run_mu(const Options& opt) {
  mobius::Bounds bounds = parse_bounds(opt.bounds_text);
  std::vector<std::string> gens = opt.generators;
  if (opt.max_parts > 0) {
    if (!gens.empty())
      mobius::fail(mobius::errc::parse_error,
                   "--max-parts excludes --generators");
    mobius::FinitePoset I = mobius::build_I(opt.mu_n, bounds.i);
    for (std::size_t idx :
         mobius::filter_by_max_parts(I, opt.max_parts).generators())
      gens.push_back(I.label(idx));
  } else if (opt.r > 0) {
    if (!gens.empty() || opt.m < 0 || (opt.mu_n - opt.m) % opt.r != 0 ||
        opt.mu_n <= opt.m)
      mobius::fail(mobius::errc::parse_error,
                   "--r/--m need n - m to be a positive multiple of r");
    mobius::PointedPartition g;
    g.parts.assign((opt.mu_n - opt.m) / opt.r, opt.r);
    g.pointed = opt.m;
    gens.push_back(g.str());
  }
  mobius::MobiusReport report =
      mobius::compute_report(opt.mu_n, gens, bounds);
  std::cout << mobius::report_json(report).dump(2) << "\n";
  return report.agree ? 0 : 4;
}

int run_beta(const Options& opt) {
  mobius::Bounds bounds = parse_bounds(opt.bounds_text);
  mobius::PointedComposition c =
      mobius::PointedComposition::parse(opt.composition);
  std::int64_t value = 0;
  if (opt.route == "auto") value = mobius::beta(c, bounds.enumeration);
  else if (opt.route == "enumeration")
    value = mobius::beta_by_enumeration(c, bounds.enumeration);
  else if (opt.route == "inclusion-exclusion")
    value = mobius::beta_by_inclusion_exclusion(c);
  else
    value = mobius::beta_fixed_last(c, bounds.enumeration);
  std::cout << value << "\n";
  if (opt.witnesses && c.n() >= 1 && c.n() <= bounds.enumeration &&
      (c.total_parts() == 1 || c.pointed > 0)) {
    const std::uint32_t want = mobius::detail::partial_sum_mask(c);
    std::vector<int> w(c.n());
    for (int i = 0; i < c.n(); ++i) w[i] = i + 1;
    do {
      mobius::Permutation tau{w};
      std::uint32_t mask = 0;
      for (int pos : mobius::descent_set(tau)) mask |= std::uint32_t{1} << (pos - 1);
      if (mask == want) std::cout << tau.str() << "\n";
    } while (std::next_permutation(w.begin(), w.end()));
  }
  return 0;
}

int run_knapsack(const Options& opt) {
  mobius::Bounds bounds = parse_bounds(opt.bounds_text);
  const std::string format = opt.format.empty() ? "text" : opt.format;
  if (opt.census_n >= 0) {
    auto rows = mobius::census(opt.census_n, bounds.census);
    if (format == "csv") {
      std::cout << mobius::census_csv(rows);
    } else if (format == "json") {
      std::cout << mobius::census_json(rows).dump(2) << "\n";
    } else {
      for (const auto& cert : rows)
        std::cout << mobius::join_ints(cert.lambda) << "\n";
      std::cout << rows.size() << " knapsack partitions of " << opt.census_n
                << "\n";
    }
    return 0;
  }
  auto cert = mobius::is_knapsack(parse_parts(opt.lambda_text));
  if (format == "csv") std::cout << mobius::census_csv({cert});
  else std::cout << mobius::certificate_json(cert).dump(2) << "\n";
  return 0;
}

int run_vset(const Options& opt) {
  mobius::VSet v = mobius::build_V(parse_parts(opt.lambda_text), opt.vset_m);
  const std::string format = opt.format.empty() ? "text" : opt.format;
  if (format == "json") {
    std::cout << mobius::vset_json(v).dump(2) << "\n";
  } else {
    for (const auto& c : v.members) std::cout << c.str() << "\n";
    std::cout << v.members.size() << " compositions\n";
  }
  return 0;
}

int run_verify(const Options& opt) {
  mobius::VerifyConfig cfg;
  cfg.bounds = parse_bounds(opt.bounds_text);
  cfg.n_max = opt.n_max;
  cfg.seed = opt.seed;
  auto results = mobius::run_checks(opt.only, cfg);
  int failed = 0;
  for (const auto& r : results) {
    if (!r.warning.empty()) std::cerr << "warning: " << r.warning << "\n";
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": "
              << r.detail << "\n";
    if (!r.pass) ++failed;
  }
  std::cout << (results.size() - failed) << "/" << results.size()
            << " checks passed\n";
  return failed == 0 ? 0 : 4;
}

int run_export(const Options& opt) {
  mobius::Bounds bounds = parse_bounds(opt.bounds_text);
  const std::string format = opt.format.empty() ? "dot" : opt.format;
  mobius::FinitePoset poset;
  std::set<mobius::FinitePoset::Index> shaded;
  if (opt.poset_kind == "I" || opt.poset_kind == "Pi" ||
      opt.poset_kind == "C") {
    if (opt.export_n < 0)
      mobius::fail(mobius::errc::parse_error, "--n is required for this poset");
    if (opt.poset_kind == "I") poset = mobius::build_I(opt.export_n, bounds.i);
    else if (opt.poset_kind == "Pi")
      poset = mobius::build_Pi(opt.export_n, bounds.pi);
    else poset = mobius::build_C(opt.export_n, bounds.c);
  } else if (opt.poset_kind == "Q") {
    if (opt.export_p < 0)
      mobius::fail(mobius::errc::parse_error, "--p is required for this poset");
    poset = mobius::build_Q(opt.export_p, bounds.q);
  } else {  // R
    std::vector<int> lambda = parse_parts(opt.lambda_text);
    mobius::FinitePoset q =
        mobius::build_Q(static_cast<int>(lambda.size()), bounds.q);
    poset = q.induced(mobius::build_R(q, lambda));
    for (mobius::FinitePoset::Index x = 0; x < poset.size(); ++x) {
      auto w = mobius::OrderedSetPartition::parse(poset.label(x));
      if (mobius::is_boundary(w, lambda)) shaded.insert(x);
    }
  }
  if (format == "json") std::cout << mobius::to_json(poset).dump(2) << "\n";
  else std::cout << mobius::to_dot(poset, shaded);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mobius functions of type-restricted pointed partition posets"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--bounds", opt.bounds_text,
                 "size-limit overrides, e.g. \"pi=7,enum=9\"")
      ->envname("MOBIUS_BOUNDS");

  auto* mu = app.add_subcommand(
      "mu", "evaluate the Mobius function of a type-restricted poset");
  mu->add_option("--n", opt.mu_n, "ground-set size")->required();
  mu->add_option("--generators", opt.generators,
                 "pointed partition literals like \"1,1,2|0\" "
                 "(repeat or separate with ';')")
      ->delimiter(';');
  mu->add_option("--max-parts", opt.max_parts,
                 "use the filter of partitions with at most this many parts");
  mu->add_option("--r", opt.r, "use the single generator (r,...,r|m)");
  mu->add_option("--m", opt.m, "pointed part for --r");

  auto* beta = app.add_subcommand("beta", "evaluate the descent statistic");
  beta->add_option("--composition", opt.composition,
                   "pointed composition literal like \"2,1|0\"")
      ->required();
  beta->add_option("--route", opt.route, "evaluation route")
      ->check(CLI::IsMember(
          {"auto", "enumeration", "inclusion-exclusion", "fixed-last"}));
  beta->add_flag("--witnesses", opt.witnesses,
                 "list the counted permutations at small n");

  auto* knapsack =
      app.add_subcommand("knapsack", "recognize or census knapsack partitions");
  auto* lam = knapsack->add_option("--lambda", opt.lambda_text,
                                   "partition literal like \"1,1,1,4\"");
  auto* cen = knapsack->add_option("--census", opt.census_n,
                                   "sweep all partitions of this n");
  lam->excludes(cen);
  knapsack->add_option("--format", opt.format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* vset = app.add_subcommand(
      "vset", "list the compositions attached to a knapsack partition");
  vset->add_option("--lambda", opt.lambda_text, "knapsack partition literal")
      ->required();
  vset->add_option("--m", opt.vset_m, "pointed part")->required();
  vset->add_option("--format", opt.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* verify =
      app.add_subcommand("verify", "run the named consistency checks");
  verify->add_option("--only", opt.only, "subset of checks, by name")
      ->delimiter(',');
  verify->add_option("--n-max", opt.n_max,
                     "cap the scale of each check (clamped per check)");
  verify->add_option("--seed", opt.seed, "seed for the randomized checks");

  auto* exp = app.add_subcommand("export", "emit a poset as DOT or JSON");
  exp->add_option("--poset", opt.poset_kind, "I, Pi, C, Q, or R")
      ->required()
      ->check(CLI::IsMember({"I", "Pi", "C", "Q", "R"}));
  exp->add_option("--n", opt.export_n, "ground-set size for I, Pi, C");
  exp->add_option("--p", opt.export_p, "ground-set size for Q");
  exp->add_option("--lambda", opt.lambda_text, "ascending parts for R");
  exp->add_option("--format", opt.format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*mu) return run_mu(opt);
    if (*beta) return run_beta(opt);
    if (*knapsack) {
      if (!*lam && !*cen)
        mobius::fail(mobius::errc::parse_error,
                     "one of --lambda or --census is required");
      return run_knapsack(opt);
    }
    if (*vset) return run_vset(opt);
    if (*verify) return run_verify(opt);
    return run_export(opt);
  } catch (const mobius::error& e) {
    std::cerr << "error: " << e.what() << " [" << mobius::errc_name(e.code())
              << "]\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

/**
 * @file cli.hpp
 * @brief Command-line front end.
 *
 *   verify gk --qbar N | verify gsx49 | verify fk --q N
 *   semigroup --gens a,b,c [--upto B]
 *   orders --gens a,b,c --q N
 *   bound --q N --r R
 *   deduce-dim --q N --g G
 *
 * Common flags: --format text|json, --out FILE, -v.
 * Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parameter error.
 */
#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "maxcurves/curves.hpp"
#include "maxcurves/numsg.hpp"
#include "maxcurves/report.hpp"
#include "maxcurves/verify.hpp"

namespace maxcurves::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

enum class Format { Text, Json };

struct RunConfig {
  Format format = Format::Text;
  std::string out_path;
  int verbosity = 0;
  std::int64_t census_delta = 0;

  std::int64_t qbar = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
  std::int64_t g = 0;
  std::vector<int> gens;
  std::optional<std::int64_t> upto;
};

namespace detail {

using nlohmann::json;

struct Output {
  json doc;
  std::string text;
  bool passed = true;
};

inline Output run_verify(const curves::CurveModel& curve, const RunConfig& cfg) {
  verify::ReportOptions opts;
  opts.census_delta = cfg.census_delta;
  const auto rep = verify::theorem_report(curve, opts);
  return {report::to_json(rep), report::to_text(rep, cfg.verbosity), rep.passing()};
}

inline Output run_semigroup(const RunConfig& cfg) {
  const numsg::NumericalSemigroup s(cfg.gens);
  json doc = report::header("semigroup");
  doc["semigroup"] = report::semigroup_fragment(s);
  doc["apery_genus"] = numsg::apery_genus(s.generators());
  std::ostringstream os;
  os << "generators: " << numsg::detail::join(s.generators()) << "\n";
  os << "genus: " << s.genus() << "\n";
  os << "conductor: " << s.conductor() << "  (Frobenius number " << s.frobenius_number() << ")\n";
  if (s.gaps().size() > report::kMaxListedGaps)
    os << "gaps: " << s.gaps().size() << " gaps (elided)\n";
  else
    os << "gaps: " << report::detail::seq(s.gaps()) << "\n";
  if (cfg.upto) {
    const auto ng = numsg::nongaps_upto(s, *cfg.upto);
    doc["nongaps_upto"] = {{"bound", *cfg.upto}, {"values", ng}};
    os << "non-gaps <= " << *cfg.upto << ": " << report::detail::seq(ng) << "\n";
  }
  doc["passing"] = true;
  return {doc, os.str(), true};
}

inline Output run_orders(const RunConfig& cfg) {
  const numsg::NumericalSemigroup s(cfg.gens);
  const int r = numsg::frobenius_dimension_from_semigroup(s, cfg.q);
  const auto orders = numsg::rational_point_orders(s, cfg.q);
  json doc = report::header("orders");
  doc["semigroup"] = report::semigroup_fragment(s);
  doc["q"] = cfg.q;
  doc["nongaps_upto_q_plus_1"] = s.nongaps_upto(cfg.q + 1);
  doc["frobenius_dimension"] = r;
  doc["orders"] = orders.orders();
  doc["passing"] = true;
  std::ostringstream os;
  os << "non-gaps <= q+1: " << report::detail::seq(s.nongaps_upto(cfg.q + 1)) << "\n";
  os << "Frobenius dimension r = " << r << "\n";
  os << "orders at the place: " << orders.str() << "\n";
  return {doc, os.str(), true};
}

inline Output run_bound(const RunConfig& cfg) {
  const auto b = verify::castelnuovo_bound(cfg.q, cfg.r);
  json doc = report::header("bound");
  doc["q"] = cfg.q;
  doc["r"] = cfg.r;
  doc["numerator"] = b.numerator;
  doc["denominator"] = b.denominator;
  doc["value"] = b.str();
  doc["passing"] = true;
  return {doc, b.raw_str() + " = " + b.str() + "\n", true};
}

inline Output run_deduce_dim(const RunConfig& cfg) {
  const auto dims = verify::deduce_frobenius_dimension(cfg.q, cfg.g);
  json doc = report::header("deduce-dim");
  doc["q"] = cfg.q;
  doc["g"] = cfg.g;
  doc["candidates"] = dims;
  doc["conclusive"] = dims.size() == 1;
  json bounds = json::array();
  std::ostringstream os;
  for (std::int64_t r = 2; r <= cfg.q + 1 && r <= 12; ++r) {
    const auto b = verify::castelnuovo_bound(cfg.q, r);
    bounds.push_back({{"r", r}, {"bound", b.str()}, {"admits_g", b.at_least(cfg.g)}});
    if (cfg.verbosity > 0) os << "  r = " << r << ": bound " << b.raw_str() << " = " << b.str() << "\n";
  }
  doc["bounds"] = bounds;
  doc["passing"] = true;
  std::string text = "candidate Frobenius dimensions: " + json(dims).dump() + (dims.size() == 1 ? "" : " (inconclusive)") + "\n";
  return {doc, text + os.str(), true};
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification toolkit for maximal curves with Frobenius dimension 3", "maxcurves"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", cfg.out_path, "Write output to FILE instead of standard output");
  app.add_flag("-v,--verbose", cfg.verbosity, "Increase detail of text output");
  app.add_option("--inject-census-delta", cfg.census_delta, "Perturb the census (testing only)")->group("");

  auto* verify_cmd = app.add_subcommand("verify", "Run a full curve verification");
  verify_cmd->require_subcommand(1);
  auto* gk = verify_cmd->add_subcommand("gk", "GK curve over F_{qbar^6}");
  gk->add_option("--qbar", cfg.qbar, "Prime power qbar >= 2")->required();
  auto* gsx = verify_cmd->add_subcommand("gsx49", "z^16 = t(t+1)^6 over F_49");
  auto* fk = verify_cmd->add_subcommand("fk", "Degree-3 Kummer cover of a Fermat curve over F_{q^2}");
  fk->add_option("--q", cfg.q, "Odd prime power q = 2 mod 3")->required();

  auto* sg = app.add_subcommand("semigroup", "Gap structure of a numerical semigroup");
  sg->add_option("--gens", cfg.gens, "Comma-separated generators")->required()->delimiter(',');
  sg->add_option("--upto", cfg.upto, "List non-gaps up to this bound");

  auto* ord = app.add_subcommand("orders", "Order sequence at a rational place from its semigroup");
  ord->add_option("--gens", cfg.gens, "Comma-separated generators")->required()->delimiter(',');
  ord->add_option("--q", cfg.q, "The curve is maximal over F_{q^2}")->required();

  auto* bound = app.add_subcommand("bound", "Castelnuovo-type genus bound");
  bound->add_option("--q", cfg.q)->required();
  bound->add_option("--r", cfg.r, "Frobenius dimension")->required();

  auto* dd = app.add_subcommand("deduce-dim", "Frobenius dimensions compatible with a genus");
  dd->add_option("--q", cfg.q)->required();
  dd->add_option("--g", cfg.g)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  cfg.format = format == "json" ? Format::Json : Format::Text;

  detail::Output result;
  try {
    if (*gk) result = detail::run_verify(curves::make_gk(cfg.qbar), cfg);
    else if (*gsx) result = detail::run_verify(curves::make_gsx49(), cfg);
    else if (*fk) result = detail::run_verify(curves::make_fk(cfg.q), cfg);
    else if (*sg) result = detail::run_semigroup(cfg);
    else if (*ord) result = detail::run_orders(cfg);
    else if (*bound) result = detail::run_bound(cfg);
    else if (*dd) result = detail::run_deduce_dim(cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::string payload = cfg.format == Format::Json ? result.doc.dump(2) + "\n" : result.text;
  if (cfg.out_path.empty()) {
    out << payload;
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return kUsage;
    }
    file << payload;
  }
  return result.passed ? kPass : kCheckFailed;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace maxcurves::cli

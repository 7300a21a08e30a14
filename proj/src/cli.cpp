#include "cbound/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "cbound/bounds.hpp"
#include "cbound/campaign.hpp"
#include "cbound/hilbert.hpp"
#include "cbound/lpp.hpp"
#include "cbound/reproduce.hpp"
#include "cbound/serialize.hpp"
#include "cbound/verifier.hpp"

namespace cbound::cli {

namespace {

enum class OutputMode { table, json, csv };

struct OutputFlags {
  bool json = false;
  bool csv = false;

  OutputMode mode() const {
    if (json && csv) throw InvalidArgument("--json and --csv are mutually exclusive");
    return json ? OutputMode::json : csv ? OutputMode::csv : OutputMode::table;
  }
};

void add_output_flags(CLI::App* cmd, OutputFlags& flags) {
  cmd->add_flag("--json", flags.json, "JSON output");
  cmd->add_flag("--csv", flags.csv, "CSV output");
}

std::string join(const std::vector<Int>& values, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + std::to_string(values[i]);
  return out;
}

std::string join_ints(std::span<const int> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
  return out;
}

DegreeSequence read_degrees(const std::string& text, std::ostream& err) {
  std::vector<int> d = parse_int_list(text);
  if (!std::is_sorted(d.begin(), d.end())) {
    std::sort(d.begin(), d.end());
    err << "note: degrees sorted to " << join_ints(d) << "\n";
  }
  return DegreeSequence(std::move(d));
}

void print_row(std::ostream& out, const std::string& key, const std::string& value) {
  out << std::left << std::setw(18) << (key + ":") << value << "\n";
}

// ---- threshold -----------------------------------------------------------

struct ThresholdArgs {
  std::string degrees;
  int D = 0;
  OutputFlags output;
};

int cmd_threshold(const ThresholdArgs& args, std::ostream& out, std::ostream& err) {
  const AciParams params(read_degrees(args.degrees, err), args.D);
  if (params.D > params.sigma()) {
    throw InvalidArgument("D = " + std::to_string(params.D) + " exceeds sigma = " + std::to_string(params.sigma()) +
                          "; no point threshold applies");
  }
  const BoundReport report = best_threshold(params);
  switch (args.output.mode()) {
    case OutputMode::json:
      out << to_json(report).dump(2) << "\n";
      break;
    case OutputMode::csv:
      out << "tag,value,applicable\n";
      for (const auto& b : report.bounds) {
        out << to_string(b.tag) << "," << (b.value ? std::to_string(*b.value) : "") << ","
            << (b.applicable() ? "true" : "false") << "\n";
      }
      break;
    case OutputMode::table:
      print_row(out, "degrees", join_ints(params.degrees.values()));
      print_row(out, "D", std::to_string(params.D));
      print_row(out, "sigma", std::to_string(params.sigma()));
      print_row(out, "tau_minus", std::to_string(params.tau_minus()));
      print_row(out, "tau_plus", std::to_string(params.tau_plus()));
      out << "bounds:\n";
      for (const auto& b : report.bounds) {
        out << "  " << std::left << std::setw(16) << (std::string(to_string(b.tag)) + ":")
            << (b.value ? std::to_string(*b.value) : "n/a") << "\n";
      }
      print_row(out, "egh_conjectural", std::to_string(report.egh_conjectural));
      print_row(out, "best_bound", std::to_string(report.best_bound));
      print_row(out, "threshold", std::to_string(report.threshold));
      print_row(out, "selected_tag", std::string(to_string(report.selected_tag)));
      for (const auto& w : report.warnings) out << "warning: " << w << "\n";
      break;
  }
  return kExitOk;
}

// ---- lpp -----------------------------------------------------------------

struct LppArgs {
  std::string degrees;
  int D = 0;
  int num_vars = 0;
  int up_to = -1;
  OutputFlags output;
};

int cmd_lpp(const LppArgs& args, std::ostream& out, std::ostream& err) {
  const DegreeSequence d = read_degrees(args.degrees, err);
  if (args.D < 1) throw InvalidArgument("D must be >= 1");
  const Monomial u = lpp_monomial(d, args.D);
  const std::size_t n = args.num_vars > 0 ? static_cast<std::size_t>(args.num_vars) : u.num_vars();
  const MonomialIdeal ideal = lpp_ideal(d, args.D, n);
  const int up_to = args.up_to >= 0 ? args.up_to : d.sigma();
  const HilbertTable hf = hilbert_function(ideal, up_to);
  const Int mult = lpp_multiplicity(d, args.D);
  const bool has_c = args.D <= d.sigma();
  const std::vector<int> c = has_c ? c_sequence(d, args.D) : std::vector<int>{};

  switch (args.output.mode()) {
    case OutputMode::json: {
      Json j;
      j["degrees"] = std::vector<int>(d.values().begin(), d.values().end());
      j["D"] = args.D;
      j["n"] = n;
      j["sigma"] = d.sigma();
      j["U"] = to_string(u);
      j["c"] = has_c ? Json(c) : Json(nullptr);
      Json gens = Json::array();
      for (const auto& g : ideal.generators()) gens.push_back(to_string(g));
      j["generators"] = std::move(gens);
      j["hilbert"] = to_json(hf);
      j["multiplicity"] = mult;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputMode::csv:
      out << "degree,value\n";
      for (int m = 0; m <= up_to; ++m) out << m << "," << hf.at(m) << "\n";
      break;
    case OutputMode::table:
      print_row(out, "degrees", join_ints(d.values()));
      print_row(out, "D", std::to_string(args.D));
      print_row(out, "sigma", std::to_string(d.sigma()));
      print_row(out, "U", to_string(u));
      print_row(out, "c", has_c ? "(" + join_ints(c) + ")" : "n/a (D > sigma)");
      print_row(out, "generators", to_string(ideal));
      print_row(out, "HF(0.." + std::to_string(up_to) + ")", join(hf.values));
      print_row(out, "multiplicity", std::to_string(mult));
      break;
  }
  return kExitOk;
}

// ---- hilbert -------------------------------------------------------------

struct HilbertArgs {
  std::string ideal;
  int num_vars = 0;
  int up_to = 10;
  OutputFlags output;
};

int cmd_hilbert(const HilbertArgs& args, std::ostream& out, std::ostream&) {
  if (args.num_vars < 1) throw InvalidArgument("-n must be >= 1");
  if (args.up_to < 0) throw InvalidArgument("--up-to must be >= 0");
  const MonomialIdeal ideal = parse_ideal(args.ideal, static_cast<std::size_t>(args.num_vars));
  const HilbertTable hf = hilbert_function(ideal, args.up_to);
  switch (args.output.mode()) {
    case OutputMode::json: {
      Json j = to_json(hf);
      j["ideal"] = to_string(ideal);
      j["n"] = args.num_vars;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputMode::csv:
      out << "degree,value\n";
      for (int m = 0; m <= args.up_to; ++m) out << m << "," << hf.at(m) << "\n";
      break;
    case OutputMode::table:
      print_row(out, "ideal", ideal.is_zero() ? "(0)" : to_string(ideal));
      print_row(out, "HF(0.." + std::to_string(args.up_to) + ")", join(hf.values));
      print_row(out, "artinian", hf.artinian_certified ? "certified" : "not certified within bound");
      break;
  }
  return kExitOk;
}

// ---- verify --------------------------------------------------------------

struct VerifyArgs {
  std::string mode;
  std::string degrees;
  int D = 0;
  int num_vars = 0;
  long long p = 101;
  long long trials = 100;
  unsigned long long seed = 0;
  unsigned threads = 0;
  std::string checks;
  OutputFlags output;
};

int verify_exhaustive(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const DegreeSequence d = read_degrees(args.degrees, err);
  const ExhaustiveResult result = exhaustive_monomial_max(d, args.D);
  long linkage_failures = 0;
  for (const auto& u : standard_monomials(power_ideal(d.values(), d.size()), args.D)) {
    if (!check_linkage_symmetry(d, args.D, u).passed()) ++linkage_failures;
  }
  const bool ok = result.passed() && linkage_failures == 0;
  switch (args.output.mode()) {
    case OutputMode::json: {
      Json j = to_json(result);
      j["degrees"] = std::vector<int>(d.values().begin(), d.values().end());
      j["D"] = args.D;
      j["linkage_checked"] = result.candidates;
      j["linkage_failures"] = linkage_failures;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputMode::csv:
      out << "max_multiplicity,lpp_prediction,candidates,linkage_failures,status\n"
          << result.max_multiplicity << "," << result.lpp_prediction << "," << result.candidates << ","
          << linkage_failures << "," << (ok ? "OK" : "FAIL") << "\n";
      break;
    case OutputMode::table: {
      std::string maximizers;
      for (const auto& m : result.maximizers) maximizers += (maximizers.empty() ? "" : ", ") + to_string(m);
      print_row(out, "degrees", join_ints(d.values()));
      print_row(out, "D", std::to_string(args.D));
      print_row(out, "candidates", std::to_string(result.candidates));
      print_row(out, "max_multiplicity", std::to_string(result.max_multiplicity));
      print_row(out, "maximizers", maximizers);
      print_row(out, "lpp_prediction", std::to_string(result.lpp_prediction));
      print_row(out, "U_D maximizer", result.lpp_is_maximizer ? "yes" : "no");
      print_row(out, "linkage_failures", std::to_string(linkage_failures));
      print_row(out, "status", ok ? "OK" : "FAIL");
      break;
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int verify_random(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.trials < 0) throw InvalidArgument("--trials must be >= 0");
  if (args.p < 2 || args.p >= (1LL << 31)) throw InvalidArgument("-p must be a prime below 2^31");
  CampaignConfig config{read_degrees(args.degrees, err), args.D, 0};
  config.num_vars = args.num_vars > 0 ? static_cast<std::size_t>(args.num_vars) : config.degrees.size();
  config.p = static_cast<std::uint32_t>(args.p);
  config.trials = static_cast<long>(args.trials);
  config.seed = args.seed;
  config.threads = args.threads;
  if (!args.checks.empty()) {
    config.checks.clear();
    std::stringstream ss(args.checks);
    for (std::string item; std::getline(ss, item, ',');) config.checks.push_back(parse_check(item));
  }
  const CampaignReport report = run_campaign(config);
  switch (args.output.mode()) {
    case OutputMode::json:
      out << to_json(report).dump(2) << "\n";
      break;
    case OutputMode::csv:
      out << "check,passed,failed,skipped\n";
      for (const auto& [name, c] : report.per_check) out << name << "," << c.passed << "," << c.failed << "," << c.skipped << "\n";
      break;
    case OutputMode::table:
      print_row(out, "degrees", join_ints(config.degrees.values()));
      print_row(out, "D", std::to_string(config.D));
      print_row(out, "n", std::to_string(config.num_vars));
      print_row(out, "p", std::to_string(config.p));
      print_row(out, "seed", std::to_string(report.seed));
      print_row(out, "attempted", std::to_string(report.attempted));
      print_row(out, "certified", std::to_string(report.certified));
      print_row(out, "passed", std::to_string(report.passed));
      print_row(out, "failed", std::to_string(report.failed));
      for (const auto& [name, c] : report.per_check) {
        out << "  " << std::left << std::setw(16) << (name + ":") << "passed " << c.passed << ", failed " << c.failed
            << ", skipped " << c.skipped << "\n";
      }
      for (const auto& f : report.failures) out << "failure: " << to_json(f).dump() << "\n";
      break;
  }
  return report.failed == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  if (args.mode == "exhaustive") return verify_exhaustive(args, out, err);
  return verify_random(args, out, err);
}

// ---- reproduce -----------------------------------------------------------

int cmd_reproduce(const OutputFlags& output, std::ostream& out) {
  const auto rows = run_reproduction();
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const ManifestRow& r) { return r.ok(); });
  switch (output.mode()) {
    case OutputMode::json: {
      Json arr = Json::array();
      for (const auto& r : rows) {
        arr.push_back({{"name", r.name}, {"expected", r.expected}, {"computed", r.computed}, {"ok", r.ok()}});
      }
      out << Json{{"rows", arr}, {"all_ok", ok}}.dump(2) << "\n";
      break;
    }
    case OutputMode::csv:
      out << "name,expected,computed,status\n";
      for (const auto& r : rows) {
        out << '"' << r.name << "\",\"" << r.expected << "\",\"" << r.computed << "\"," << (r.ok() ? "OK" : "MISMATCH")
            << "\n";
      }
      break;
    case OutputMode::table:
      for (const auto& r : rows) {
        out << (r.ok() ? "OK        " : "MISMATCH  ") << std::left << std::setw(52) << r.name << " expected "
            << r.expected << ", computed " << r.computed << "\n";
      }
      out << (ok ? "all rows OK" : "some rows do not match") << "\n";
      break;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    item.erase(std::remove_if(item.begin(), item.end(), [](char c) { return c == ' '; }), item.end());
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + item + "'");
    }
    if (pos != item.size()) throw ParseError("not an integer: '" + item + "'");
    out.push_back(value);
  }
  if (out.empty()) throw ParseError("expected a comma-separated list of integers");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley-Bacharach thresholds for complete intersections, with exact Hilbert-function checks", "cbound"};
  app.require_subcommand(1);

  ThresholdArgs threshold;
  auto* threshold_cmd = app.add_subcommand("threshold", "Point threshold and every applicable multiplicity bound");
  threshold_cmd->add_option("-d,--degrees", threshold.degrees, "degrees d1,...,dh")->required();
  threshold_cmd->add_option("-D", threshold.D, "degree of the hypersurface")->required();
  add_output_flags(threshold_cmd, threshold.output);

  LppArgs lpp;
  auto* lpp_cmd = app.add_subcommand("lpp", "U_D, c-sequence, generators and Hilbert function of L(d;D)");
  lpp_cmd->add_option("-d,--degrees", lpp.degrees, "degrees d1,...,dh")->required();
  lpp_cmd->add_option("-D", lpp.D, "degree of the extra generator")->required();
  lpp_cmd->add_option("-n", lpp.num_vars, "number of variables (default: variables of U_D)");
  lpp_cmd->add_option("--up-to", lpp.up_to, "last degree of the Hilbert table (default: sigma)");
  add_output_flags(lpp_cmd, lpp.output);

  HilbertArgs hilbert;
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of a monomial quotient");
  hilbert_cmd->add_option("--ideal", hilbert.ideal, "comma-separated monomials, e.g. \"x1^2,x1*x2\"")->required();
  hilbert_cmd->add_option("-n", hilbert.num_vars, "number of variables")->required();
  hilbert_cmd->add_option("--up-to", hilbert.up_to, "last degree (default 10)");
  add_output_flags(hilbert_cmd, hilbert.output);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Random finite-field campaigns or exhaustive monomial search");
  verify_cmd->add_option("--mode", verify.mode, "random or exhaustive")
      ->required()
      ->check(CLI::IsMember({"random", "exhaustive"}));
  verify_cmd->add_option("-d,--degrees", verify.degrees, "degrees d1,...,dh")->required();
  verify_cmd->add_option("-D", verify.D, "degree of the extra generator")->required();
  verify_cmd->add_option("-n", verify.num_vars, "number of variables (default h)");
  verify_cmd->add_option("-p", verify.p, "field characteristic (default 101)");
  verify_cmd->add_option("--trials", verify.trials, "number of random trials (default 100)");
  verify_cmd->add_option("--seed", verify.seed, "campaign seed (default 0)");
  verify_cmd->add_option("--threads", verify.threads, "worker threads (default: all cores)");
  verify_cmd->add_option("--checks", verify.checks, "comma-separated subset of aci_definition,hf_dominance,multiplicity");
  add_output_flags(verify_cmd, verify.output);

  OutputFlags reproduce_output;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Recompute every published value and compare");
  add_output_flags(reproduce_cmd, reproduce_output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*threshold_cmd) return cmd_threshold(threshold, out, err);
    if (*lpp_cmd) return cmd_lpp(lpp, out, err);
    if (*hilbert_cmd) return cmd_hilbert(hilbert, out, err);
    if (*verify_cmd) return cmd_verify(verify, out, err);
    if (*reproduce_cmd) return cmd_reproduce(reproduce_output, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace cbound::cli

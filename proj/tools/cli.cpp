#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cquiver/alpha.hpp"
#include "cquiver/binomial.hpp"
#include "cquiver/equivariant.hpp"
#include "cquiver/ext.hpp"
#include "cquiver/io.hpp"

namespace cquiver::cli {

namespace {

// Input the user got wrong; exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Outcome {
  int code = 0;
  Json results = Json::object();
};

std::int64_t parse_end(const std::string& token) {
  if (token == "ninf") return DiscreteInterval::kNegInf;
  if (token == "pinf") return DiscreteInterval::kPosInf;
  std::int64_t v = 0;
  const auto* first = token.data();
  const auto* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || token.empty()) {
    throw UsageError("bad interval end '" + token + "'");
  }
  return v;
}

DiscreteInterval parse_interval(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected LO,HI but got '" + text + "'");
  const auto lo = parse_end(text.substr(0, comma));
  const auto hi = parse_end(text.substr(comma + 1));
  if (lo == DiscreteInterval::kPosInf || hi == DiscreteInterval::kNegInf) {
    throw UsageError("infinite end on the wrong side in '" + text + "'");
  }
  try {
    return DiscreteInterval(lo, hi);
  } catch (const std::invalid_argument&) {
    throw UsageError("empty interval '" + text + "'");
  }
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

Outcome do_count(int period, int jobs, std::ostream& out) {
  const BigInt enumerated = enumerate_maximal_rigid(period, jobs).size();
  const BigInt formula = equivariant_count_formula(period);
  const bool ok = enumerated == formula;
  out << "enumerated=" << enumerated << " formula=" << formula << ' ' << pass_fail(ok) << '\n';
  return {ok ? 0 : 1,
          {{"period", period},
           {"enumerated", enumerated.str()},
           {"formula", formula.str()},
           {"pass", ok}}};
}

Outcome do_enumerate(int period, const std::string& format, int jobs, std::ostream& out) {
  const auto sets = enumerate_maximal_rigid(period, jobs);
  if (format == "tsv") {
    out << to_tsv(sets);
  } else {
    for (const auto& s : sets) out << to_json(s).dump() << '\n';
  }
  return {0, {{"period", period}, {"count", sets.size()}}};
}

Outcome do_enumerate_alpha(int n, const std::string& format, int jobs, std::ostream& out) {
  const auto reps = enumerate_alpha(n, jobs);
  if (format == "tsv") {
    out << to_tsv(reps);
  } else {
    for (const auto& r : reps) out << to_json(r).dump() << '\n';
  }
  return {0, {{"n", n}, {"count", reps.size()}}};
}

Outcome do_ext(const std::string& i_text, const std::string& j_text,
               const std::optional<std::string>& window_text, std::ostream& out) {
  const auto i = parse_interval(i_text);
  const auto j = parse_interval(j_text);
  if (!window_text) {
    const int e = interval_ext(i, j);
    out << "ext=" << e << '\n';
    return {0, {{"ext", e}}};
  }
  const auto w = parse_interval(*window_text);
  if (!w.finite()) throw UsageError("window must be finite");
  const auto q = QuiverSpec::linear(w.lo, w.hi);
  const auto he = hom_ext_dims(interval_to_rep(q, i), interval_to_rep(q, j));
  out << "hom=" << he.hom << " ext=" << he.ext << '\n';
  return {0, {{"hom", he.hom}, {"ext", he.ext}}};
}

Outcome do_check(const std::string& path, std::ostream& out) {
  AlphaRep rep;
  try {
    rep = alpha_rep_from_json(read_json_file(path));
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  const auto v = validate_type_alpha(rep);
  if (!v.ok) {
    out << "invalid: " << v.violation;
    if (v.gap) out << " (gap " << *v.gap << ')';
    out << '\n';
    Json results = {{"valid", false}, {"violation", v.violation}};
    if (v.gap) results["gap"] = *v.gap;
    return {2, results};
  }
  const bool rigid = alpha_is_rigid(rep);
  out << (rigid ? "valid rigid" : "valid nonrigid") << '\n';
  return {rigid ? 0 : 1, {{"valid", true}, {"rigid", rigid}}};
}

Outcome do_verify(int n_min, int n_max, int jobs, std::ostream& out) {
  if (n_max < n_min) throw UsageError("--n-max must be at least --n-min");
  Outcome o{0, Json::array()};
  out << "n  formula  enumerated  status\n";
  for (int n = n_min; n <= n_max; ++n) {
    const BigInt formula = count_alpha(n, CountMode::Formula);
    const BigInt enumerated = count_alpha(n, CountMode::Enumerate, jobs);
    const bool ok = formula == enumerated;
    out << n << "  " << formula << "  " << enumerated << "  " << pass_fail(ok) << '\n';
    o.results.push_back(
        {{"n", n}, {"formula", formula.str()}, {"enumerated", enumerated.str()}, {"pass", ok}});
    if (!ok) o.code = 1;
  }
  return o;
}

void write_report(const std::string& path, const std::vector<std::string>& args,
                  const Outcome& o, double seconds, std::ostream& err) {
  const Json report = {{"command", args},
                       {"results", o.results},
                       {"pass", o.code == 0},
                       {"exit_code", o.code},
                       {"duration_s", seconds}};
  std::ofstream file(path);
  if (!file) {
    err << "cannot write report to " << path << '\n';
    return;
  }
  file << report.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigid interval representations: counts, enumeration and checks", "cquiver"};
  app.require_subcommand(1);
  app.fallthrough();

  int jobs = 1;
  std::string report_path;
  app.add_option("--jobs", jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--report", report_path, "Write a JSON run report to this path");

  int period = 0;
  int n = 0;
  int n_min = 0;
  int n_max = 0;
  std::string format = "json";
  std::string i_text;
  std::string j_text;
  std::string window_text;
  std::string path;

  auto* count = app.add_subcommand("count", "Count maximal rigid orbit sets against the formula");
  count->add_option("--period", period)->required()->check(CLI::PositiveNumber);

  auto* enumerate = app.add_subcommand("enumerate", "List maximal rigid orbit sets");
  enumerate->add_option("--period", period)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

  auto* enumerate_a = app.add_subcommand("enumerate-alpha", "List maximal rigid type-alpha reps");
  enumerate_a->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  enumerate_a->add_option("--format", format)->check(CLI::IsMember({"json", "tsv"}));

  auto* ext = app.add_subcommand("ext", "Ext^1 between two lattice intervals");
  ext->add_option("--i", i_text)->required();
  ext->add_option("--j", j_text)->required();
  auto* window_opt = ext->add_option("--window", window_text);

  auto* check = app.add_subcommand("check", "Validate a type-alpha rep and test rigidity");
  check->add_option("--file", path)->required();

  auto* verify = app.add_subcommand("verify", "Compare enumerated and formula type-alpha counts");
  verify->add_option("--n-min", n_min)->required()->check(CLI::PositiveNumber);
  verify->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (*count) {
      outcome = do_count(period, jobs, out);
    } else if (*enumerate) {
      outcome = do_enumerate(period, format, jobs, out);
    } else if (*enumerate_a) {
      outcome = do_enumerate_alpha(n, format, jobs, out);
    } else if (*ext) {
      const std::optional<std::string> window =
          *window_opt ? std::optional<std::string>(window_text) : std::nullopt;
      outcome = do_ext(i_text, j_text, window, out);
    } else if (*check) {
      outcome = do_check(path, out);
    } else if (*verify) {
      outcome = do_verify(n_min, n_max, jobs, out);
    }
  } catch (const FiberAnomaly& e) {
    err << e.what() << '\n';
    outcome = {1, {{"error", e.what()}}};
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    outcome = {2, {{"error", e.what()}}};
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    outcome = {2, {{"error", e.what()}}};
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    outcome = {1, {{"error", e.what()}}};
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  if (!report_path.empty()) write_report(report_path, args, outcome, elapsed.count(), err);
  return outcome.code;
}

}  // namespace cquiver::cli

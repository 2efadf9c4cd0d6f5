#include "cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>

#include "cli/output.hpp"
#include "cli/plot.hpp"
#include "molecule/addresses.hpp"
#include "molecule/counting.hpp"
#include "molecule/errors.hpp"
#include "molecule/sweep.hpp"
#include "molecule/verify.hpp"

namespace molecule::cli {

namespace {

struct Options {
  std::uint64_t n = 0;
  std::string method = "recursive";
  std::string table_method = "direct";
  std::uint64_t max_n = 24;
  std::string format = "json";
  std::string table_format = "csv";
  std::uint64_t budget = EnumerationBudget{}.max_tuples;
  PathFollowConfig path;
  bool sweep = true;
  unsigned workers = 1;
  PlotSpec plot;
  std::string window = "-2,0.75,-1.15,1.15";
  std::string out_path;
};

int cmd_count(const Options& o, std::ostream& out) {
  out << count_with_method(o.n, parse_method(o.method), {o.budget}) << "\n";
  return kExitOk;
}

int cmd_table(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.table_format != "csv" && o.table_format != "json") throw DomainError("table format must be csv or json");
  std::vector<std::uint64_t> fallbacks;
  const auto rows = build_table(o.max_n, parse_method(o.table_method), {o.budget}, &fallbacks);
  for (std::uint64_t n : fallbacks) {
    err << "note: enumeration budget exceeded at n=" << n << ", used the recursive method\n";
  }
  out << (o.table_format == "csv" ? table_csv(rows) : table_json(rows));
  return kExitOk;
}

int cmd_bell(const Options& o, std::ostream& out) {
  out << ordered_bell(static_cast<unsigned>(o.n)) << "\n";
  return kExitOk;
}

int cmd_addresses(const Options& o, std::ostream& out) {
  if (o.format != "json") throw DomainError("addresses only support --format json");
  if (o.n == 0) throw DomainError("n must be positive");
  const auto addresses = enumerate_addresses(o.n, {o.budget});
  out << addresses_json(addresses);
  return kExitOk;
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.path = o.path;
  v.sweep = o.sweep;
  v.budget = {o.budget};
  v.workers = o.workers;
  v.sweep_config.workers = o.workers;
  return v;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.n == 0) throw DomainError("n must be positive");
  const VerificationReport report = verify_molecule_count(static_cast<unsigned>(o.n), verify_options(o));
  out << report_json(report);
  return report.verdict ? kExitOk : kExitVerdictFailed;
}

int cmd_centers(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.n == 0) throw DomainError("n must be positive");
  SweepConfig cfg;
  cfg.workers = o.workers;
  const SweepResult sweep = all_centers_sweep(static_cast<unsigned>(o.n), cfg);
  out << centers_json(sweep.centers);
  for (const auto& failure : sweep.failures) err << "sweep: " << failure << "\n";
  return sweep.ok() ? kExitOk : kExitVerdictFailed;
}

int cmd_plot(Options o, std::ostream& out, std::ostream& err) {
  o.plot.window = parse_window(o.window);
  o.plot.n = static_cast<unsigned>(o.n);
  o.plot.validate();
  if (o.out_path.empty()) throw DomainError("plot needs --out");

  VerifyOptions v = verify_options(o);
  v.sweep = false;
  const VerificationReport report = verify_molecule_count(o.plot.n, v);
  if (!report.verdict) {
    for (const auto& failure : report.failures) err << "verify: " << failure << "\n";
    err << "error: verifier failed for period " << o.plot.n << "\n";
    return kExitUsage;
  }
  const Image image = render_plot(o.plot, report.centers);
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write " << o.out_path << "\n";
    return kExitUsage;
  }
  const std::string bytes = image.to_ppm();
  file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!file) {
    err << "error: write to " << o.out_path << " failed\n";
    return kExitUsage;
  }
  out << "wrote " << o.out_path << " (" << report.centers.size() << " centers)\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Main-molecule hyperbolic component counts for z^2 + c", "molecule"};
  app.require_subcommand(1);
  Options o;

  auto* count = app.add_subcommand("count", "Print M(n)");
  count->add_option("n", o.n, "period")->required()->check(CLI::PositiveNumber);
  count->add_option("--method", o.method, "direct | recursive | closed")->capture_default_str();
  count->add_option("--budget", o.budget, "ordered-factorization budget for --method direct")->capture_default_str();

  auto* table = app.add_subcommand("table", "Print n, M(n), nu(n), M(n)/nu(n) for n = 1..max");
  table->add_option("--max", o.max_n, "largest n")->capture_default_str()->check(CLI::PositiveNumber);
  table->add_option("--format", o.table_format, "csv | json")->capture_default_str();
  table->add_option("--method", o.table_method, "direct | recursive")->capture_default_str();
  table->add_option("--budget", o.budget, "ordered-factorization budget")->capture_default_str();

  auto* bell = app.add_subcommand("bell", "Print the ordered Bell number N(m)");
  bell->add_option("m", o.n, "size of the set")->required()->check(CLI::NonNegativeNumber);

  auto* addresses = app.add_subcommand("addresses", "List satellite addresses of period n");
  addresses->add_option("n", o.n, "period")->required()->check(CLI::PositiveNumber);
  addresses->add_option("--format", o.format, "json")->capture_default_str();
  addresses->add_option("--budget", o.budget, "address budget")->capture_default_str();

  auto add_path_flags = [&](CLI::App* cmd) {
    cmd->add_option("--tol", o.path.newton_tol, "Newton tolerance")->capture_default_str();
    cmd->add_option("--match-tol", o.path.match_tol, "sweep match tolerance")->capture_default_str();
    cmd->add_option("--distinct-tol", o.path.distinct_tol, "pairwise separation bound")->capture_default_str();
    cmd->add_option("--steps", o.path.multiplier_steps, "multiplier continuation steps")->capture_default_str();
    cmd->add_option("--entry-offset", o.path.entry_offset, "satellite entry overshoot")->capture_default_str();
    cmd->add_option("--workers", o.workers, "worker threads")->capture_default_str();
  };

  auto* verify = app.add_subcommand("verify", "Locate every molecule center of period n and check the count");
  verify->add_option("n", o.n, "period")->required()->check(CLI::PositiveNumber);
  verify->add_flag("--sweep,!--no-sweep", o.sweep, "cross-check against all roots of Q_n (default on)");
  add_path_flags(verify);

  auto* centers = app.add_subcommand("centers", "Dump every exact-period-n center found by the sweep");
  centers->add_option("n", o.n, "period")->required()->check(CLI::PositiveNumber);
  centers->add_option("--format", o.format, "json")->capture_default_str();
  centers->add_option("--workers", o.workers, "worker threads")->capture_default_str();

  auto* plot = app.add_subcommand("plot", "Write a PPM escape-time image with molecule centers marked");
  plot->add_option("n", o.n, "period")->required()->check(CLI::PositiveNumber);
  plot->add_option("--width", o.plot.width, "pixels")->capture_default_str();
  plot->add_option("--height", o.plot.height, "pixels")->capture_default_str();
  plot->add_option("--window", o.window, "re_min,re_max,im_min,im_max")->capture_default_str();
  plot->add_option("--max-iter", o.plot.max_iter, "escape-time iterations")->capture_default_str();
  plot->add_option("--escape-radius", o.plot.escape_radius, "bailout radius")->capture_default_str();
  plot->add_option("--out", o.out_path, "output .ppm path")->required();
  add_path_flags(plot);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(o, out);
    if (table->parsed()) return cmd_table(o, out, err);
    if (bell->parsed()) return cmd_bell(o, out);
    if (addresses->parsed()) return cmd_addresses(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (centers->parsed()) return cmd_centers(o, out, err);
    if (plot->parsed()) return cmd_plot(o, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace molecule::cli

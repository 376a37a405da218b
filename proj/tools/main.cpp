// ustar: bases and invariants of the unitary and symmetric unit groups of
// a modular group algebra F_p[G] under an involutory automorphism.
//
// Exit status: 0 success (and, for `verify`, all checks passed),
//              1 some verification check failed,
//              2 usage or input errors.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ustar/config.hpp"
#include "ustar/errors.hpp"
#include "ustar/render.hpp"
#include "ustar/suite.hpp"

namespace {

struct Cli {
  ustar::JobConfig cfg;
  std::string orders_text;
  std::string format_text = "text";
};

void add_common_options(CLI::App* sub, Cli& cli) {
  sub->add_option("--p", cli.cfg.p, "odd prime p")->required();
  sub->add_option("--orders", cli.orders_text,
                  "generator orders, comma separated powers of p (e.g. 9 or 3,3)")
      ->required();
  sub->add_option("--involution", cli.cfg.involution,
                  "canonical | identity | swap(i,j) | a1->...;a2->...")
      ->capture_default_str();
  sub->add_option("--format", cli.format_text, "text | json")->capture_default_str();
  sub->add_option("--cap", cli.cfg.enumeration_cap,
                  "largest unit group enumerated by brute force")
      ->capture_default_str();
  sub->add_option("--independence-cap", cli.cfg.combinatorial_cap,
                  "largest product count for the independence certificates")
      ->capture_default_str();
  sub->add_option("--max-i", cli.cfg.max_i,
                  "pad invariant vectors up to f_i and check power identities up to i")
      ->capture_default_str();
  sub->add_option("--size-guard", cli.cfg.size_guard, "largest admissible |G|")
      ->capture_default_str();
  sub->add_option("--out", cli.cfg.out_path, "write the report to a file instead of stdout");
}

void emit(const ustar::JobConfig& cfg, const std::string& body) {
  if (cfg.out_path.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + cfg.out_path);
  f << body;
  if (!body.empty() && body.back() != '\n') f << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "bases and invariants of the unitary and symmetric unit groups of F_p[G]"};
  app.require_subcommand(1);

  Cli cli;
  CLI::App* invariants = app.add_subcommand(
      "invariants", "orders, p-ranks and invariant vectors of S_*(FG) and V_*(FG)");
  CLI::App* basis = app.add_subcommand(
      "basis", "explicit bases of S_*(FG) and V_*(FG) with orders and classes");
  CLI::App* verify = app.add_subcommand(
      "verify", "run every brute-force and certificate check for the configuration");
  CLI::App* diagonal = app.add_subcommand(
      "diagonalize", "generator decomposition adapted to the involution");
  for (CLI::App* sub : {invariants, basis, verify, diagonal}) add_common_options(sub, cli);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cli.cfg.orders = ustar::parse_order_list(cli.orders_text);
    cli.cfg.format = ustar::parse_format(cli.format_text);
    const bool json = cli.cfg.format == ustar::JobConfig::Format::Json;

    const ustar::GroupSpec group = ustar::make_group(cli.cfg);
    const ustar::InvolutionSpec eta = ustar::parse_involution(group, cli.cfg.involution);
    const ustar::DiagonalForm d = ustar::diagonalize(eta);

    if (invariants->parsed() || basis->parsed()) {
      const ustar::StructureReport report = ustar::structure_report(d);
      const bool with_bases = basis->parsed();
      emit(cli.cfg, json ? ustar::report_to_json(report, with_bases, cli.cfg.max_i).dump(2)
                         : ustar::report_to_text(report, with_bases, cli.cfg.max_i));
      return 0;
    }
    if (diagonal->parsed()) {
      emit(cli.cfg, json ? ustar::diagonal_form_to_json(d).dump(2)
                         : ustar::diagonal_form_to_text(d));
      return 0;
    }
    // verify
    ustar::SuiteOptions options;
    options.enumeration_cap = cli.cfg.enumeration_cap;
    options.combinatorial_cap = cli.cfg.combinatorial_cap;
    if (cli.cfg.max_i > 0) options.max_power_index = cli.cfg.max_i;
    const std::vector<ustar::CheckResult> checks = ustar::verification_suite(d, options);
    emit(cli.cfg, json ? ustar::checks_to_json(d, checks).dump(2)
                       : ustar::checks_to_text(checks));
    return ustar::all_passed(checks) ? 0 : 1;
  } catch (const ustar::ConsistencyFailure& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "gmap/commands.hpp"

int main(int argc, char** argv) {
  using namespace gmap;

  CLI::App app{"Exact ranks of Gaussian maps on cyclic covers of the line"};
  app.require_subcommand(1);
  app.fallthrough();

  CommandOptions opt;
  std::size_t prec = 0;
  std::string escalate;
  std::string branch_points;
  std::string cache;
  std::size_t class_number = 1;
  bool serial = false;

  auto* prec_opt = app.add_option("--prec", prec, "Truncation precision");
  auto* esc_opt = app.add_option("--escalate", escalate, "Escalating precision start:factor:max");
  auto* bp_opt = app.add_option("--branch-points", branch_points, "Comma-separated rational branch points");
  app.add_option("--gprime", opt.gprime, "Genus of the quotient curve")->check(CLI::PositiveNumber);
  app.add_option("--class", class_number, "Which class of the enumeration to use (1-based)")
      ->check(CLI::PositiveNumber);
  std::map<std::string, OutputFormat> formats{
      {"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}};
  app.add_option("--format", opt.format, "Output format")->transform(CLI::CheckedTransformer(formats));
  auto* cache_opt = app.add_option("--cache", cache, "Results cache file (default: $GMAP_CACHE)");
  app.add_option("--max-genus", opt.limits.max_genus, "Genus cap");
  app.add_option("--max-prec", opt.limits.max_precision, "Precision cap");
  app.add_flag("--serial", serial, "Use the single-threaded kernels");
  prec_opt->excludes(esc_opt);

  std::string monodromy;
  std::string range;
  int g = 0;
  int gp = 0;

  auto* rank = app.add_subcommand("rank", "Rank of the second Gaussian map for one datum");
  rank->add_option("monodromy", monodromy, "Datum, e.g. \"m=4;a=1^2,3^2,2^2\" or \"[1^4:2^2]\"")->required();
  auto* table = app.add_subcommand("table", "Ranks for the standard class over a genus range");
  table->add_option("range", range, "Genus range, e.g. 5..8")->required();
  auto* enumerate = app.add_subcommand("enumerate", "Galois bi(hyper)elliptic classes");
  enumerate->add_option("g", g, "Genus")->required();
  enumerate->add_option("gprime", gp, "Quotient genus")->required();
  auto* witness = app.add_subcommand("witness", "Invariant quadric with nonzero second Gaussian map");
  witness->add_option("g", g, "Genus")->required();
  witness->add_option("gprime", gp, "Quotient genus")->required();
  auto* validate = app.add_subcommand("validate", "Check a monodromy datum");
  validate->add_option("monodromy", monodromy, "Datum")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_code::usage;
  }

  if (prec_opt->count() > 0) opt.precision = prec;
  if (esc_opt->count() > 0) opt.escalate = escalate;
  if (bp_opt->count() > 0) opt.branch_points = branch_points;
  if (cache_opt->count() > 0) opt.cache = cache;
  opt.class_index = class_number - 1;
  if (serial) opt.execution = kernels::Execution::serial;

  CommandResult result;
  if (rank->parsed()) {
    result = cmd_rank(monodromy, opt);
  } else if (table->parsed()) {
    result = cmd_table(range, opt);
  } else if (enumerate->parsed()) {
    result = cmd_enumerate(g, gp, opt);
  } else if (witness->parsed()) {
    result = cmd_witness(g, gp, opt);
  } else {
    result = cmd_validate(monodromy, opt);
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}

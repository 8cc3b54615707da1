#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "confexcess/commands.hpp"

int main(int argc, char** argv) {
  using namespace confexcess::commands;

  CLI::App app{"Conference matrices with maximum excess from two-intersection sets"};
  app.require_subcommand(1);

  ConstructArgs construct;
  std::string out_path;
  auto* cmd_construct = app.add_subcommand("construct", "build and certify the matrix for one q");
  cmd_construct->add_option("--q", construct.q, "q = p^r = 4m^2 + 1 with p = 1 (mod 4)")
      ->required();
  cmd_construct->add_option("--out", out_path, "output path (stdout when omitted)");
  const std::map<std::string, OutputFormat> formats{
      {"matrix", OutputFormat::Matrix}, {"report", OutputFormat::Report}, {"both", OutputFormat::Both}};
  cmd_construct->add_option("--format", construct.format, "matrix | report | both")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  cmd_construct->add_flag("--enumerate-pairs", construct.enumerate_pairs,
                          "list every admissible (h, ell) in the report");
  cmd_construct->add_flag("--timings", construct.timings, "add per-stage wall-clock timings");
  cmd_construct->add_option("--budget", construct.budget, "oracle enumeration cap");

  std::string matrix_path;
  auto* cmd_verify = app.add_subcommand("verify", "check a matrix file");
  cmd_verify->add_option("matrix", matrix_path, "matrix file")->required();

  std::uint64_t max_m = 3;
  std::uint64_t table_budget = 0;
  auto* cmd_table = app.add_subcommand("table", "tabulate every admissible q = 4m^2 + 1");
  cmd_table->add_option("--max-m", max_m, "largest m to try");
  cmd_table->add_option("--budget", table_budget, "oracle enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kBadParameter;
  }

  if (*cmd_construct) {
    if (!out_path.empty()) construct.out = out_path;
    return run_construct(construct, std::cout, std::cerr);
  }
  if (*cmd_verify) return run_verify(matrix_path, std::cout, std::cerr);
  return run_table(max_m, table_budget, std::cout, std::cerr);
}

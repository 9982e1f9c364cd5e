#include <CLI11.hpp>

#include <iostream>

#include "binom/cli.hpp"

int main(int argc, char** argv) {
  using namespace binom::cli;

  std::string budget_error;
  auto budget = budget_from_env(budget_error);
  if (!budget) {
    std::cerr << budget_error << "\n";
    return kExitUsage;
  }

  CLI::App app{"Primality tests built on binomial coefficient residues"};
  app.require_subcommand(1);

  CheckOptions check;
  check.budget = *budget;
  auto* check_cmd =
      app.add_subcommand("check", "Run a test on n and report the verdict");
  check_cmd->add_option("n", check.n_text, "number to test")->required();
  check_cmd->add_option("--test", check.test,
                        "t21|t22|classic-full|classic-primes|pascal|all, or "
                        "a comma list");
  check_cmd->add_option("--mode", check.mode, "reference|reduced");
  check_cmd->add_flag("--short-circuit", check.short_circuit,
                      "stop at the first nonzero residue");
  check_cmd->add_flag("--json", check.json, "print the full report as JSON");

  WitnessesOptions wit;
  wit.budget = *budget;
  auto* wit_cmd = app.add_subcommand(
      "witnesses", "List prime factors of n up to √n and the cofactor");
  wit_cmd->add_option("n", wit.n_text, "number to factor (must be > 3)")
      ->required();
  wit_cmd->add_flag("--json", wit.json, "JSON output");

  BenchOptions bench;
  bench.budget = *budget;
  auto* bench_cmd = app.add_subcommand(
      "bench", "CSV of term counts, multiplications and wall time per test");
  bench_cmd->add_option("lo", bench.lo_text, "range start")->required();
  bench_cmd->add_option("hi", bench.hi_text, "range end, inclusive")
      ->required();
  bench_cmd->add_option("--tests", bench.tests, "test selector (default all)");
  bench_cmd->add_option("--mode", bench.mode, "reference|reduced");
  bench_cmd->add_option("--out", bench.out_path, "write CSV here instead of stdout");

  SelftestOptions self;
  self.budget = *budget;
  auto* self_cmd = app.add_subcommand(
      "selftest", "Sweep the library invariants against independent oracles");
  self_cmd->add_option("limit", self.limit_text, "upper end of the sweeps")
      ->required();
  self_cmd->add_option("--tests", self.tests, "test selector (default all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*check_cmd) return cmd_check(check, std::cout, std::cerr);
    if (*wit_cmd) return cmd_witnesses(wit, std::cout, std::cerr);
    if (*bench_cmd) return cmd_bench(bench, std::cout, std::cerr);
    if (*self_cmd) return cmd_selftest(self, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

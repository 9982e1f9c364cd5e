#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "binom/work.hpp"

namespace binom::cli {

inline constexpr int kExitPrime = 0;
inline constexpr int kExitComposite = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitSelftestFail = 4;

/// Reads BINOM_WORK_BUDGET. Unset → default budget. Set but not a positive
/// integer → nullopt with a message in *error (usage error at the surface).
std::optional<std::uint64_t> budget_from_env(std::string& error);

/// `check <n> [--test ...] [--mode ...] [--short-circuit] [--json]`
/// Test selector "all" runs every kind; kinds that blow the budget are
/// skipped with a note, and disagreement between the kinds that finished is
/// reported as a selftest failure.
struct CheckOptions {
  std::string n_text;
  std::string test = "t22";
  std::optional<std::string> mode;  // unset: reduced where supported
  bool short_circuit = false;
  bool json = false;
  std::uint64_t budget = WorkMeter::kDefaultBudget;
};
int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err);

/// `witnesses <n> [--json]` — prime factors ≤ √n and the cofactor left
/// after dividing them out to full multiplicity.
struct WitnessesOptions {
  std::string n_text;
  bool json = false;
  std::uint64_t budget = WorkMeter::kDefaultBudget;
};
int cmd_witnesses(const WitnessesOptions& opt, std::ostream& out,
                  std::ostream& err);

/// `bench <lo> <hi> [--tests ...] [--mode ...] [--out path]` — CSV, one row
/// per (n, kind). Budget overruns become verdict BUDGET and the run goes on.
struct BenchOptions {
  std::string lo_text;
  std::string hi_text;
  std::string tests = "all";
  std::optional<std::string> mode;
  std::optional<std::string> out_path;
  std::uint64_t budget = WorkMeter::kDefaultBudget;
};
int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err);

/// `selftest <limit> [--tests ...]` — verdict sweeps against trial division,
/// mode equivalence, and witness correctness up to limit. Exit 0 on all
/// pass; on failure prints the minimal counterexample and exits 4.
struct SelftestOptions {
  std::string limit_text;
  std::string tests = "all";
  std::uint64_t budget = WorkMeter::kDefaultBudget;
};
int cmd_selftest(const SelftestOptions& opt, std::ostream& out,
                 std::ostream& err);

}  // namespace binom::cli

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binom/nat.hpp"
#include "binom/work.hpp"

namespace binom {

/// The five residue-sum tests. Each one sums binomial residues over a fixed
/// index set; n is prime exactly when the sum is zero.
///
///   T21            Σ C(n−1, p−1) mod p      over primes p with p² ≤ n
///   T22            Σ C(n+p−1, n−1) mod n    over primes p with p² ≤ n
///   ClassicFull    Σ C(n, k) mod n          over k = 1 .. n−1
///   ClassicPrimes  Σ C(n, p) mod n          over primes p with p² ≤ n
///   Pascal         Σ C(n+i, i+1) mod n      over i = 0 .. ⌊n/2 − 1⌋
enum class TestKind { T21, T22, ClassicFull, ClassicPrimes, Pascal };

/// Reference mode evaluates each binomial coefficient exactly and reduces.
/// Reduced mode replaces the term with its closed form, available for the
/// three prime-indexed kinds only:
///   T21:                     1 if p | n, else 0
///   T22 and ClassicPrimes:   n/p if p | n, else 0
enum class EvalMode { Reference, Reduced };

enum class Verdict { Prime, Composite };

std::string_view to_string(TestKind kind);
std::string_view to_string(EvalMode mode);
std::string_view to_string(Verdict verdict);
std::optional<TestKind> parse_test_kind(std::string_view text);
std::optional<EvalMode> parse_eval_mode(std::string_view text);
std::optional<Verdict> parse_verdict(std::string_view text);

/// Whether a kind has a reduced evaluation. Asking run_test for Reduced on
/// any other kind throws UnsupportedMode.
bool supports_reduced(TestKind kind);

/// One evaluated term. `index` is the 1-based position in the sum;
/// `prime_or_k` is the summation variable itself (the prime p, the k of the
/// full sum, or the i of the Pascal sum, which starts at 0).
struct TermRecord {
  std::uint64_t index = 0;
  Nat prime_or_k;
  Nat modulus;
  Nat residue;
  EvalMode mode = EvalMode::Reference;

  bool operator==(const TermRecord&) const = default;
};

/// Complete result of one test run.
///
/// For n ≤ 3 the index set of every kind is empty, so the verdict is fixed
/// by convention (0 and 1 composite, 2 and 3 prime) and `by_convention` is
/// set. Witnesses are collected for the prime-indexed kinds only: the primes
/// whose term residue is nonzero, which are exactly the prime divisors
/// p ≤ √n. When `short_circuited` is set, evaluation stopped at the first
/// nonzero residue; terms then hold only the evaluated prefix and sum is the
/// partial sum, but the verdict is the same as a full run's.
struct TestReport {
  Nat n;
  TestKind kind = TestKind::T22;
  EvalMode mode = EvalMode::Reference;
  std::vector<TermRecord> terms;
  Nat sum;
  Verdict verdict = Verdict::Composite;
  std::vector<Nat> witnesses;
  bool short_circuited = false;
  bool by_convention = false;
  WorkCounters work;

  bool operator==(const TestReport&) const = default;
};

/// What a budget-interrupted run had produced so far.
struct PartialRun {
  std::vector<TermRecord> terms;
  Nat sum;
  WorkCounters work;
};

/// Thrown by run_test when the work budget runs out mid-run. Carries the
/// terms already evaluated, never a verdict.
class TestBudgetExceeded : public WorkBudgetExceeded {
 public:
  TestBudgetExceeded(std::uint64_t budget, PartialRun partial)
      : WorkBudgetExceeded(budget, partial.work), partial_(std::move(partial)) {}

  const PartialRun& partial() const { return partial_; }

 private:
  PartialRun partial_;
};

/// Single-term evaluators. Preconditions are contracts: n ≥ 4 and p ≥ 2 for
/// the prime-indexed kinds (reduced mode additionally requires p prime,
/// which these trust the caller on), 1 ≤ k ≤ n−1 for the full sum,
/// i ≤ ⌊n/2 − 1⌋ for the Pascal sum.
Nat term_t21(const Nat& n, const Nat& p, EvalMode mode, WorkMeter& meter);
Nat term_t22(const Nat& n, const Nat& p, EvalMode mode, WorkMeter& meter);
Nat term_classic_primes(const Nat& n, const Nat& p, EvalMode mode,
                        WorkMeter& meter);
Nat term_classic_full(const Nat& n, const Nat& k, WorkMeter& meter);
Nat term_pascal(const Nat& n, const Nat& i, WorkMeter& meter);

Nat term_t21(const Nat& n, const Nat& p, EvalMode mode);
Nat term_t22(const Nat& n, const Nat& p, EvalMode mode);
Nat term_classic_primes(const Nat& n, const Nat& p, EvalMode mode);
Nat term_classic_full(const Nat& n, const Nat& k);
Nat term_pascal(const Nat& n, const Nat& i);

/// Runs one test over its whole index set (or, with short_circuit, up to the
/// first nonzero residue). Throws UnsupportedMode for Reduced on kinds
/// without a closed form, TestBudgetExceeded when the multiplication budget
/// runs out.
TestReport run_test(const Nat& n, TestKind kind, EvalMode mode,
                    bool short_circuit = false,
                    std::uint64_t budget = WorkMeter::kDefaultBudget);

/// The prime factors p of n with p² ≤ n, ascending: the witnesses of the
/// reduced T22 run. Requires n ≥ 4 (below that the candidate set is empty).
std::vector<Nat> small_prime_factors(
    const Nat& n, std::uint64_t budget = WorkMeter::kDefaultBudget);

}  // namespace binom

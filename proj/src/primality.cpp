#include "binom/primality.hpp"

#include <utility>

#include "binom/primes.hpp"

namespace binom {

std::string_view to_string(TestKind kind) {
  switch (kind) {
    case TestKind::T21: return "t21";
    case TestKind::T22: return "t22";
    case TestKind::ClassicFull: return "classic-full";
    case TestKind::ClassicPrimes: return "classic-primes";
    case TestKind::Pascal: return "pascal";
  }
  contract_failure("unknown TestKind", __FILE__, __LINE__);
}

std::string_view to_string(EvalMode mode) {
  switch (mode) {
    case EvalMode::Reference: return "reference";
    case EvalMode::Reduced: return "reduced";
  }
  contract_failure("unknown EvalMode", __FILE__, __LINE__);
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Prime: return "PRIME";
    case Verdict::Composite: return "COMPOSITE";
  }
  contract_failure("unknown Verdict", __FILE__, __LINE__);
}

std::optional<TestKind> parse_test_kind(std::string_view text) {
  if (text == "t21") return TestKind::T21;
  if (text == "t22") return TestKind::T22;
  if (text == "classic-full") return TestKind::ClassicFull;
  if (text == "classic-primes") return TestKind::ClassicPrimes;
  if (text == "pascal") return TestKind::Pascal;
  return std::nullopt;
}

std::optional<EvalMode> parse_eval_mode(std::string_view text) {
  if (text == "reference") return EvalMode::Reference;
  if (text == "reduced") return EvalMode::Reduced;
  return std::nullopt;
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  if (text == "PRIME") return Verdict::Prime;
  if (text == "COMPOSITE") return Verdict::Composite;
  return std::nullopt;
}

bool supports_reduced(TestKind kind) {
  return kind == TestKind::T21 || kind == TestKind::T22 ||
         kind == TestKind::ClassicPrimes;
}

namespace {

void require_prime_indexed_pre(const Nat& n, const Nat& p) {
  BINOM_REQUIRE(n > 3);
  BINOM_REQUIRE(p >= 2);
  BINOM_REQUIRE(p * p <= n);
}

// Shared reduced form of the mod-n kinds: n/p when p divides n, else 0.
Nat reduced_quotient_term(const Nat& n, const Nat& p) {
  return n.divisible_by(p) ? n / p : Nat(0);
}

}  // namespace

Nat term_t21(const Nat& n, const Nat& p, EvalMode mode, WorkMeter& meter) {
  require_prime_indexed_pre(n, p);
  if (mode == EvalMode::Reduced) return n.divisible_by(p) ? 1 : 0;
  return binomial_mod_exact(n - 1, p - 1, p, meter);
}

Nat term_t22(const Nat& n, const Nat& p, EvalMode mode, WorkMeter& meter) {
  require_prime_indexed_pre(n, p);
  if (mode == EvalMode::Reduced) return reduced_quotient_term(n, p);
  // Symmetric form C(n+p-1, p): p numerator factors instead of n-1.
  return binomial_exact(n + p - 1, p, meter) % n;
}

Nat term_classic_primes(const Nat& n, const Nat& p, EvalMode mode,
                        WorkMeter& meter) {
  require_prime_indexed_pre(n, p);
  if (mode == EvalMode::Reduced) return reduced_quotient_term(n, p);
  return binomial_mod_exact(n, p, n, meter);
}

Nat term_classic_full(const Nat& n, const Nat& k, WorkMeter& meter) {
  BINOM_REQUIRE(n >= 2);
  BINOM_REQUIRE(k >= 1 && k <= n - 1);
  return binomial_mod_exact(n, k, n, meter);
}

Nat term_pascal(const Nat& n, const Nat& i, WorkMeter& meter) {
  BINOM_REQUIRE(n > 1);
  BINOM_REQUIRE(i <= (n - 2) / 2);  // ⌊n/2 − 1⌋ for n ≥ 2
  return binomial_mod_exact(n + i, i + 1, n, meter);
}

Nat term_t21(const Nat& n, const Nat& p, EvalMode mode) {
  WorkMeter meter;
  return term_t21(n, p, mode, meter);
}
Nat term_t22(const Nat& n, const Nat& p, EvalMode mode) {
  WorkMeter meter;
  return term_t22(n, p, mode, meter);
}
Nat term_classic_primes(const Nat& n, const Nat& p, EvalMode mode) {
  WorkMeter meter;
  return term_classic_primes(n, p, mode, meter);
}
Nat term_classic_full(const Nat& n, const Nat& k) {
  WorkMeter meter;
  return term_classic_full(n, k, meter);
}
Nat term_pascal(const Nat& n, const Nat& i) {
  WorkMeter meter;
  return term_pascal(n, i, meter);
}

namespace {

struct RunState {
  TestReport report;
  WorkMeter meter;
  bool stop = false;

  RunState(std::uint64_t budget) : meter(budget) {}

  // Appends one term; sets `stop` when a nonzero residue meets short_circuit.
  void record(std::uint64_t ordinal, Nat variable, Nat modulus, Nat residue,
              bool short_circuit, bool collect_witness) {
    meter.charge_term();
    bool hit = !residue.is_zero();
    if (hit && collect_witness) report.witnesses.push_back(variable);
    report.sum += residue;
    report.terms.push_back(TermRecord{ordinal, std::move(variable),
                                      std::move(modulus), std::move(residue),
                                      report.mode});
    if (hit && short_circuit) {
      report.short_circuited = true;
      stop = true;
    }
  }
};

}  // namespace

TestReport run_test(const Nat& n, TestKind kind, EvalMode mode,
                    bool short_circuit, std::uint64_t budget) {
  if (mode == EvalMode::Reduced && !supports_reduced(kind))
    throw UnsupportedMode("run_test: no reduced form for " +
                          std::string(to_string(kind)));

  RunState st(budget);
  st.report.n = n;
  st.report.kind = kind;
  st.report.mode = mode;
  st.report.by_convention = n <= 3;
  if (n <= 1) {
    st.report.verdict = Verdict::Composite;
    return std::move(st.report);
  }
  if (n <= 3) {
    st.report.verdict = Verdict::Prime;
    return std::move(st.report);
  }

  try {
    switch (kind) {
      case TestKind::T21:
      case TestKind::T22:
      case TestKind::ClassicPrimes: {
        std::uint64_t ordinal = 0;
        for (std::uint64_t pv : primes_up_to_sqrt(n)) {
          Nat p = pv;
          Nat residue = kind == TestKind::T21
                            ? term_t21(n, p, mode, st.meter)
                        : kind == TestKind::T22
                            ? term_t22(n, p, mode, st.meter)
                            : term_classic_primes(n, p, mode, st.meter);
          Nat modulus = kind == TestKind::T21 ? p : n;
          st.record(++ordinal, std::move(p), std::move(modulus),
                    std::move(residue), short_circuit, true);
          if (st.stop) break;
        }
        break;
      }
      case TestKind::ClassicFull: {
        // C(n,k) by the one-step recurrence C(n,k) = C(n,k-1)·(n-k+1)/k,
        // one multiplication per term instead of k of them.
        Nat c = n;  // C(n, 1)
        Nat last = n - 1;
        std::uint64_t ordinal = 0;
        for (Nat k = 1; k <= last; k += 1) {
          if (k > 1) {
            st.meter.charge_mul();
            mpz_class num(c.mpz() * (n.mpz() - k.mpz() + 1));
            mpz_divexact(num.get_mpz_t(), num.get_mpz_t(),
                         k.mpz().get_mpz_t());
            c = Nat(std::move(num));
          }
          st.record(++ordinal, k, n, c % n, short_circuit, false);
          if (st.stop) break;
        }
        break;
      }
      case TestKind::Pascal: {
        // C(n+i, i+1) by C(n+i, i+1) = C(n+i-1, i)·(n+i)/(i+1).
        Nat t = n;  // i = 0: C(n, 1)
        Nat bound = (n - 2) / 2;
        std::uint64_t ordinal = 0;
        for (Nat i = 0; i <= bound; i += 1) {
          if (i >= 1) {
            st.meter.charge_mul();
            mpz_class num(t.mpz() * (n.mpz() + i.mpz()));
            mpz_class den(i.mpz() + 1);
            mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            t = Nat(std::move(num));
          }
          st.record(++ordinal, i, n, t % n, short_circuit, false);
          if (st.stop) break;
        }
        break;
      }
    }
  } catch (const WorkBudgetExceeded&) {
    st.report.work = st.meter.used();
    throw TestBudgetExceeded(
        budget, PartialRun{std::move(st.report.terms), std::move(st.report.sum),
                           st.report.work});
  }

  st.report.verdict = st.report.sum.is_zero() ? Verdict::Prime : Verdict::Composite;
  st.report.work = st.meter.used();
  return std::move(st.report);
}

std::vector<Nat> small_prime_factors(const Nat& n, std::uint64_t budget) {
  BINOM_REQUIRE(n > 3);
  return run_test(n, TestKind::T22, EvalMode::Reduced, false, budget).witnesses;
}

}  // namespace binom

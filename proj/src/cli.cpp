#include "binom/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "binom/oracle.hpp"
#include "binom/primality.hpp"
#include "binom/primes.hpp"
#include "binom/report_io.hpp"

namespace binom::cli {

namespace {

constexpr TestKind kAllKinds[] = {TestKind::T21, TestKind::T22,
                                  TestKind::ClassicFull,
                                  TestKind::ClassicPrimes, TestKind::Pascal};

std::optional<Nat> parse_n(const std::string& text) { return Nat::parse(text); }

// Selector grammar: "all" or a comma-separated list of kind names.
// Duplicates collapse; order is the canonical kind order.
std::optional<std::vector<TestKind>> expand_selector(const std::string& text) {
  if (text == "all")
    return std::vector<TestKind>(std::begin(kAllKinds), std::end(kAllKinds));
  bool want[5] = {};
  std::stringstream ss(text);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    auto kind = parse_test_kind(item);
    if (!kind) return std::nullopt;
    want[static_cast<int>(*kind)] = true;
    any = true;
  }
  if (!any) return std::nullopt;
  std::vector<TestKind> out;
  for (TestKind k : kAllKinds)
    if (want[static_cast<int>(k)]) out.push_back(k);
  return out;
}

EvalMode default_mode(TestKind kind) {
  return supports_reduced(kind) ? EvalMode::Reduced : EvalMode::Reference;
}

// Explicit --mode must suit every selected kind; unset picks per kind.
struct ModeChoice {
  std::optional<EvalMode> forced;

  EvalMode for_kind(TestKind kind) const {
    return forced ? *forced : default_mode(kind);
  }
};

std::optional<ModeChoice> resolve_mode(const std::optional<std::string>& text,
                                       const std::vector<TestKind>& kinds,
                                       std::ostream& err) {
  if (!text) return ModeChoice{};
  auto mode = parse_eval_mode(*text);
  if (!mode) {
    err << "unknown mode: " << *text << "\n";
    return std::nullopt;
  }
  if (*mode == EvalMode::Reduced)
    for (TestKind k : kinds)
      if (!supports_reduced(k)) {
        err << "no reduced form for " << to_string(k) << "\n";
        return std::nullopt;
      }
  return ModeChoice{mode};
}

std::string lower_verdict(Verdict v) {
  return v == Verdict::Prime ? "prime" : "composite";
}

}  // namespace

std::optional<std::uint64_t> budget_from_env(std::string& error) {
  const char* raw = std::getenv("BINOM_WORK_BUDGET");
  if (!raw) return WorkMeter::kDefaultBudget;
  auto n = Nat::parse(raw);
  if (!n || n->is_zero() || !n->fits_u64()) {
    error = "BINOM_WORK_BUDGET must be a positive 64-bit integer, got: " +
            std::string(raw);
    return std::nullopt;
  }
  return n->to_u64();
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  auto n = parse_n(opt.n_text);
  if (!n) {
    err << "not a nonnegative integer: " << opt.n_text << "\n";
    return kExitUsage;
  }
  auto kinds = expand_selector(opt.test);
  if (!kinds) {
    err << "unknown test selector: " << opt.test << "\n";
    return kExitUsage;
  }
  auto mode = resolve_mode(opt.mode, *kinds, err);
  if (!mode) return kExitUsage;

  std::vector<TestReport> reports;
  std::vector<TestKind> skipped;
  for (TestKind kind : *kinds) {
    try {
      reports.push_back(
          run_test(*n, kind, mode->for_kind(kind), opt.short_circuit, opt.budget));
    } catch (const WorkBudgetExceeded& e) {
      if (kinds->size() == 1) {
        err << e.what() << "\n";
        return kExitBudget;
      }
      err << "note: " << to_string(kind) << " skipped, " << e.what() << "\n";
      skipped.push_back(kind);
    } catch (const LimitTooLarge& e) {
      err << e.what() << "\n";
      return kExitBudget;
    } catch (const Error& e) {
      err << e.what() << "\n";
      return kExitUsage;
    }
  }
  if (reports.empty()) {
    err << "every selected test exceeded the work budget\n";
    return kExitBudget;
  }

  bool agree = true;
  for (const TestReport& r : reports)
    if (r.verdict != reports.front().verdict) agree = false;

  if (opt.json) {
    if (reports.size() == 1 && skipped.empty()) {
      out << report_to_json(reports.front()).dump(2) << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const TestReport& r : reports) arr.push_back(report_to_json(r));
      out << arr.dump(2) << "\n";
    }
  } else if (reports.size() == 1 && skipped.empty()) {
    out << lower_verdict(reports.front().verdict) << "\n";
  } else {
    for (const TestReport& r : reports)
      out << to_string(r.kind) << ": " << lower_verdict(r.verdict) << "\n";
    if (agree) out << lower_verdict(reports.front().verdict) << "\n";
  }

  if (!agree) {
    err << "tests disagree on " << n->str()
        << " (implementation fault, not a property of n):";
    for (const TestReport& r : reports)
      err << " " << to_string(r.kind) << "=" << lower_verdict(r.verdict);
    err << "\n";
    return kExitSelftestFail;
  }
  return reports.front().verdict == Verdict::Prime ? kExitPrime : kExitComposite;
}

int cmd_witnesses(const WitnessesOptions& opt, std::ostream& out,
                  std::ostream& err) {
  auto n = parse_n(opt.n_text);
  if (!n) {
    err << "not a nonnegative integer: " << opt.n_text << "\n";
    return kExitUsage;
  }
  if (*n <= 3) {
    err << "witnesses requires n > 3\n";
    return kExitUsage;
  }
  std::vector<Nat> witnesses;
  try {
    witnesses = small_prime_factors(*n, opt.budget);
  } catch (const WorkBudgetExceeded& e) {
    err << e.what() << "\n";
    return kExitBudget;
  } catch (const LimitTooLarge& e) {
    err << e.what() << "\n";
    return kExitBudget;
  }

  Nat cofactor = *n;
  for (const Nat& p : witnesses)
    while (cofactor.divisible_by(p)) cofactor = cofactor / p;

  // Empty witness list is itself a verdict: no prime ≤ √n divides n, so n is
  // prime and the cofactor (= n) needs no caveat. Otherwise anything left
  // after dividing witnesses out lies beyond √n, where this method is blind.
  std::string status = cofactor == 1      ? "unit"
                       : witnesses.empty() ? "prime"
                                           : "untested";
  if (opt.json) {
    nlohmann::json jw = nlohmann::json::array();
    for (const Nat& p : witnesses) jw.push_back(p.str());
    nlohmann::json j = {{"n", n->str()},
                        {"witnesses", std::move(jw)},
                        {"cofactor", cofactor.str()},
                        {"cofactor_status", status}};
    out << j.dump(2) << "\n";
  } else {
    out << "witnesses:";
    if (witnesses.empty()) out << " none";
    for (const Nat& p : witnesses) out << " " << p.str();
    out << "\n";
    out << "cofactor: " << cofactor.str();
    if (status == "prime") out << " (prime)";
    if (status == "untested") out << " (primality untested by this method)";
    out << "\n";
  }
  return 0;
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  auto lo = parse_n(opt.lo_text);
  auto hi = parse_n(opt.hi_text);
  if (!lo || !hi) {
    err << "range bounds must be nonnegative integers\n";
    return kExitUsage;
  }
  if (*lo > *hi) {
    err << "empty range: " << lo->str() << " > " << hi->str() << "\n";
    return kExitUsage;
  }
  auto kinds = expand_selector(opt.tests);
  if (!kinds) {
    err << "unknown test selector: " << opt.tests << "\n";
    return kExitUsage;
  }
  auto mode = resolve_mode(opt.mode, *kinds, err);
  if (!mode) return kExitUsage;

  std::ofstream file;
  if (opt.out_path) {
    file.open(*opt.out_path, std::ios::binary);  // binary keeps LF on any host
    if (!file) {
      err << "cannot open " << *opt.out_path << "\n";
      return kExitUsage;
    }
  }
  std::ostream& csv = opt.out_path ? file : out;

  csv << "n,kind,mode,terms,mults,wall_ns,verdict\n";
  for (Nat n = *lo; n <= *hi; n += 1) {
    for (TestKind kind : *kinds) {
      EvalMode m = mode->for_kind(kind);
      WorkCounters work;
      std::string verdict;
      auto t0 = std::chrono::steady_clock::now();
      try {
        TestReport r = run_test(n, kind, m, false, opt.budget);
        work = r.work;
        verdict = to_string(r.verdict);
      } catch (const TestBudgetExceeded& e) {
        work = e.partial().work;
        verdict = "BUDGET";
      } catch (const WorkBudgetExceeded& e) {
        work = e.used();
        verdict = "BUDGET";
      } catch (const LimitTooLarge&) {
        verdict = "BUDGET";  // resource ceiling, same row semantics
      }
      auto wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
      csv << n.str() << "," << to_string(kind) << "," << to_string(m) << ","
          << work.terms << "," << work.mults << "," << wall_ns << ","
          << verdict << "\n";
    }
  }
  return 0;
}

namespace {

struct SelftestFailure {
  std::string message;
};

// Runs one ascending-n sweep; the first violation is the minimal
// counterexample by construction.
template <typename Check>
std::optional<SelftestFailure> sweep(std::uint64_t from, std::uint64_t to,
                                     Check&& check) {
  for (std::uint64_t n = from; n <= to; ++n)
    if (auto fail = check(n)) return fail;
  return std::nullopt;
}

}  // namespace

int cmd_selftest(const SelftestOptions& opt, std::ostream& out,
                 std::ostream& err) {
  auto limit_nat = parse_n(opt.limit_text);
  if (!limit_nat || !limit_nat->fits_u64()) {
    err << "limit must be a 64-bit nonnegative integer\n";
    return kExitUsage;
  }
  std::uint64_t limit = limit_nat->to_u64();
  if (limit < 4) {
    err << "selftest requires limit >= 4\n";
    return kExitUsage;
  }
  auto kinds = expand_selector(opt.tests);
  if (!kinds) {
    err << "unknown test selector: " << opt.tests << "\n";
    return kExitUsage;
  }

  auto report_failure = [&](const SelftestFailure& fail) {
    err << "FAIL: " << fail.message << "\n";
    return kExitSelftestFail;
  };

  try {
    for (TestKind kind : *kinds) {
      std::vector<EvalMode> modes{EvalMode::Reference};
      if (supports_reduced(kind)) modes.push_back(EvalMode::Reduced);
      for (EvalMode mode : modes) {
        // Exact reference evaluation is the expensive path; cap it where the
        // term count makes full sweeps quadratic.
        std::uint64_t cap = limit;
        if (mode == EvalMode::Reference) {
          bool heavy =
              kind == TestKind::ClassicFull || kind == TestKind::Pascal;
          cap = std::min<std::uint64_t>(limit, heavy ? 3000 : 10000);
        }
        auto fail = sweep(2, cap, [&](std::uint64_t nv) -> std::optional<SelftestFailure> {
          Nat n = nv;
          TestReport r = run_test(n, kind, mode, false, opt.budget);
          bool expect = is_prime_trial(n);
          if ((r.verdict == Verdict::Prime) != expect)
            return SelftestFailure{
                "verdict sweep " + std::string(to_string(kind)) + "/" +
                std::string(to_string(mode)) + " at n=" + n.str() +
                ": verdict " + std::string(to_string(r.verdict)) +
                ", trial division says " + (expect ? "PRIME" : "COMPOSITE")};
          return std::nullopt;
        });
        if (fail) return report_failure(*fail);
        out << "verdict sweep " << to_string(kind) << "/" << to_string(mode)
            << " up to " << cap << ": ok\n";
      }
    }

    bool any_reducible = false;
    for (TestKind kind : *kinds) any_reducible |= supports_reduced(kind);
    if (any_reducible) {
      std::uint64_t cap = std::min<std::uint64_t>(limit, 10000);
      auto fail = sweep(4, cap, [&](std::uint64_t nv) -> std::optional<SelftestFailure> {
        Nat n = nv;
        for (std::uint64_t pv : primes_up_to_sqrt(n)) {
          Nat p = pv;
          for (TestKind kind : *kinds) {
            if (!supports_reduced(kind)) continue;
            WorkMeter ref_meter(opt.budget), red_meter(opt.budget);
            Nat ref, red;
            switch (kind) {
              case TestKind::T21:
                ref = term_t21(n, p, EvalMode::Reference, ref_meter);
                red = term_t21(n, p, EvalMode::Reduced, red_meter);
                break;
              case TestKind::T22:
                ref = term_t22(n, p, EvalMode::Reference, ref_meter);
                red = term_t22(n, p, EvalMode::Reduced, red_meter);
                break;
              default:
                ref = term_classic_primes(n, p, EvalMode::Reference, ref_meter);
                red = term_classic_primes(n, p, EvalMode::Reduced, red_meter);
                break;
            }
            if (ref != red)
              return SelftestFailure{
                  "mode equivalence " + std::string(to_string(kind)) +
                  " at n=" + n.str() + ", p=" + p.str() + ": reference " +
                  ref.str() + " vs reduced " + red.str()};
          }
        }
        return std::nullopt;
      });
      if (fail) return report_failure(*fail);
      out << "mode equivalence up to " << cap << ": ok\n";
    }

    bool has_t22 = false;
    for (TestKind kind : *kinds) has_t22 |= kind == TestKind::T22;
    if (has_t22) {
      auto fail = sweep(4, limit, [&](std::uint64_t nv) -> std::optional<SelftestFailure> {
        Nat n = nv;
        std::vector<Nat> got = small_prime_factors(n, opt.budget);
        std::vector<Nat> expect;
        for (const auto& [p, e] : factorize_trial(n).factors)
          if (p * p <= n) expect.push_back(p);
        if (got != expect) {
          std::string g, x;
          for (const Nat& p : got) g += " " + p.str();
          for (const Nat& p : expect) x += " " + p.str();
          return SelftestFailure{"witnesses at n=" + n.str() + ": got" + g +
                                 ", factorization oracle says" + x};
        }
        return std::nullopt;
      });
      if (fail) return report_failure(*fail);
      out << "witness correctness up to " << limit << ": ok\n";
    }
  } catch (const WorkBudgetExceeded& e) {
    err << e.what() << "\n";
    return kExitBudget;
  }

  out << "selftest: all invariants hold up to " << limit << "\n";
  return 0;
}

}  // namespace binom::cli

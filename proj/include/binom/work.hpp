#pragma once

#include <cstdint>
#include <string>

#include "binom/errors.hpp"

namespace binom {

/// Operation counters for one evaluation: terms evaluated and big-integer
/// multiplications performed (oracle routines charge their row additions
/// against the same counter).
struct WorkCounters {
  std::uint64_t terms = 0;
  std::uint64_t mults = 0;

  bool operator==(const WorkCounters&) const = default;
};

/// Raised when an evaluation would exceed its operation budget. Carries the
/// counters accumulated up to the failing operation.
class WorkBudgetExceeded : public Error {
 public:
  WorkBudgetExceeded(std::uint64_t budget, WorkCounters used)
      : Error("work budget exceeded: " + std::to_string(budget) +
              " operations"),
        budget_(budget),
        used_(used) {}

  std::uint64_t budget() const { return budget_; }
  const WorkCounters& used() const { return used_; }

 private:
  std::uint64_t budget_;
  WorkCounters used_;
};

/// Caps the number of multiplications an exact evaluation may perform,
/// converting infeasible computations into explicit errors instead of
/// unbounded runtime. One meter per logical evaluation; not shared across
/// threads.
class WorkMeter {
 public:
  static constexpr std::uint64_t kDefaultBudget = 10'000'000;

  explicit WorkMeter(std::uint64_t budget = kDefaultBudget)
      : budget_(budget) {}

  /// Charge one multiplication; throws WorkBudgetExceeded once the budget
  /// is exhausted.
  void charge_mul() {
    if (used_.mults >= budget_) throw WorkBudgetExceeded(budget_, used_);
    ++used_.mults;
  }

  void charge_term() { ++used_.terms; }

  std::uint64_t budget() const { return budget_; }
  const WorkCounters& used() const { return used_; }

 private:
  std::uint64_t budget_;
  WorkCounters used_;
};

}  // namespace binom

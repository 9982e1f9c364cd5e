#include "binom/oracle.hpp"

#include <vector>

#include "binom/errors.hpp"

namespace binom {

bool is_prime_trial(const Nat& n) {
  if (n < 2) return false;
  if (n.fits_u64()) {
    std::uint64_t v = n.to_u64();
    for (std::uint64_t d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  }
  for (Nat d = 2; d * d <= n; d += 1)
    if (n.divisible_by(d)) return false;
  return true;
}

Factorization factorize_trial(const Nat& n, WorkMeter& meter) {
  BINOM_REQUIRE(n >= 1);
  Factorization out;
  out.n = n;
  Nat rest = n;
  for (Nat d = 2; ; d += 1) {
    meter.charge_mul();  // one unit per candidate, so the budget caps the scan
    if (d * d > rest) break;
    if (!rest.divisible_by(d)) continue;
    std::uint64_t exp = 0;
    do {
      rest = rest / d;
      ++exp;
    } while (rest.divisible_by(d));
    out.factors.emplace_back(d, exp);
  }
  if (rest > 1) out.factors.emplace_back(rest, 1);
  return out;
}

Factorization factorize_trial(const Nat& n) {
  WorkMeter meter;
  return factorize_trial(n, meter);
}

Nat binomial_pascal(const Nat& r, const Nat& s, const std::optional<Nat>& m,
                    WorkMeter& meter) {
  if (m && m->is_zero()) throw ZeroModulus("binomial_pascal: modulus is zero");
  if (s > r) return 0;
  if (s.is_zero() || s == r) return m ? Nat(1) % *m : Nat(1);
  // Row DP over C(row, ·): row sizes are bounded by s+1, since entries past
  // column s never feed a wanted cell. A row count beyond 64 bits means at
  // least 2^64 additions, past any expressible budget.
  if (!r.fits_u64())
    throw WorkBudgetExceeded(meter.budget(), meter.used());
  std::uint64_t sv = s.to_u64();
  std::uint64_t rv = r.to_u64();
  std::vector<Nat> row(sv + 1, Nat(0));
  row[0] = m ? Nat(1) % *m : Nat(1);
  for (std::uint64_t i = 1; i <= rv; ++i) {
    std::uint64_t hi = std::min(i, sv);
    for (std::uint64_t c = hi; c >= 1; --c) {
      meter.charge_mul();  // one unit per addition
      row[c] += row[c - 1];
      if (m) row[c] = row[c] % *m;
    }
  }
  return row[sv];
}

Nat binomial_pascal(const Nat& r, const Nat& s, const std::optional<Nat>& m) {
  WorkMeter meter;
  return binomial_pascal(r, s, m, meter);
}

}  // namespace binom

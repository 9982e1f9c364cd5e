#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "binom/nat.hpp"
#include "binom/work.hpp"

namespace binom {

/// Prime factorization: ascending (prime, exponent) pairs whose product
/// reconstitutes n. Empty for n ≤ 1.
struct Factorization {
  Nat n;
  std::vector<std::pair<Nat, std::uint64_t>> factors;

  bool operator==(const Factorization&) const = default;
};

/// Trial division primality check, independent of the residue-sum machinery.
/// Deliberately avoids the library isqrt: the loop condition is d·d ≤ n.
bool is_prime_trial(const Nat& n);

/// Trial division factorization. Charges one multiplication per candidate
/// divisor tested, so huge semiprimes hit the budget instead of spinning.
Factorization factorize_trial(const Nat& n, WorkMeter& meter);
Factorization factorize_trial(const Nat& n);

/// Binomial coefficient via the additive Pascal recurrence, a deliberately
/// different algorithm from the multiplicative one: row-by-row DP, reducing
/// mod m at every cell when a modulus is given. Charges one unit per
/// addition. Zero when s > r; throws ZeroModulus on m = 0.
Nat binomial_pascal(const Nat& r, const Nat& s, const std::optional<Nat>& m,
                    WorkMeter& meter);
Nat binomial_pascal(const Nat& r, const Nat& s,
                    const std::optional<Nat>& m = std::nullopt);

}  // namespace binom

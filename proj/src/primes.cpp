#include "binom/primes.hpp"

#include <algorithm>
#include <vector>

#include "binom/errors.hpp"

namespace binom {

namespace {
constexpr std::uint64_t kSieveLimitMax = 1ull << 32;
}

PrimeTable sieve(std::uint64_t limit) {
  if (limit > kSieveLimitMax)
    throw LimitTooLarge("sieve: limit " + std::to_string(limit) +
                        " exceeds 2^32");
  PrimeTable table;
  table.limit = limit;
  if (limit < 2) return table;
  std::vector<std::uint8_t> composite(limit + 1, 0);
  for (std::uint64_t d = 2; d * d <= limit; ++d) {
    if (composite[d]) continue;
    for (std::uint64_t m = d * d; m <= limit; m += d) composite[m] = 1;
  }
  for (std::uint64_t v = 2; v <= limit; ++v)
    if (!composite[v]) table.primes.push_back(v);
  return table;
}

PrimeTable sieve(const Nat& limit) {
  if (Nat big(kSieveLimitMax); limit > big)
    throw LimitTooLarge("sieve: limit " + limit.str() + " exceeds 2^32");
  return sieve(limit.to_u64());
}

std::uint64_t pi(const PrimeTable& table, std::uint64_t x) {
  if (x > table.limit)
    throw OutOfRange("pi: " + std::to_string(x) + " beyond sieve limit " +
                     std::to_string(table.limit));
  auto it = std::upper_bound(table.primes.begin(), table.primes.end(), x);
  return static_cast<std::uint64_t>(it - table.primes.begin());
}

std::vector<std::uint64_t> primes_up_to_sqrt(const Nat& n) {
  Nat root = isqrt(n);
  return sieve(root).primes;
}

}  // namespace binom

#pragma once

#include <cstdint>
#include <vector>

#include "binom/nat.hpp"

namespace binom {

/// Primes up to and including `limit`, in ascending order.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;
};

/// Sieve of Eratosthenes over [0, limit]. Throws LimitTooLarge when the
/// limit exceeds 2^32 (the single-segment byte sieve stops being sensible
/// well before address space runs out).
PrimeTable sieve(std::uint64_t limit);
PrimeTable sieve(const Nat& limit);

/// π(x) for x ≤ table.limit: how many primes are ≤ x. Throws OutOfRange
/// beyond the table.
std::uint64_t pi(const PrimeTable& table, std::uint64_t x);

/// All primes p with p² ≤ n, ascending. The candidate bound is the exact
/// integer square root, so perfect squares include their root when prime.
std::vector<std::uint64_t> primes_up_to_sqrt(const Nat& n);

}  // namespace binom

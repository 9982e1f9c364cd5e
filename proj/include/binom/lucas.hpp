#pragma once

#include <cstdint>
#include <vector>

#include "binom/nat.hpp"

namespace binom {

/// Full trace of a digitwise binomial residue computation: the base-p digit
/// expansions of both arguments, the per-digit binomial factors C(r_i, s_i)
/// (exact values, one per digit position up to the longer expansion, the
/// shorter one padded with zeros), and the final residue, the product of
/// those factors mod p. The residue is 0 exactly when some s digit exceeds
/// the matching r digit.
struct LucasFactorization {
  Nat p;
  DigitsBaseP r_digits;
  DigitsBaseP s_digits;
  std::vector<Nat> factors;
  Nat residue;
};

/// C(r, s) mod p via the digitwise product over base-p expansions. Requires
/// p prime: with `validate_prime` set, p ≤ 10⁶ is checked by trial division
/// (composite throws NotPrime) and larger p is trusted. Digit factors use
/// machine words while they fit and fall back to exact big integers on
/// overflow.
LucasFactorization lucas_binom_mod(const Nat& r, const Nat& s, const Nat& p,
                                   bool validate_prime = true);

/// Same computation with caller-supplied digit expansions, for sweeps that
/// reuse one expansion across many pairings. Both expansions must be in
/// base p.
LucasFactorization lucas_binom_mod(const DigitsBaseP& r_digits,
                                   const DigitsBaseP& s_digits,
                                   bool validate_prime = true);

/// Just the residue, skipping trace assembly. Same contract as the
/// expansion-taking lucas_binom_mod.
Nat lucas_residue(const DigitsBaseP& r_digits, const DigitsBaseP& s_digits,
                  bool validate_prime = true);

/// Whether p^j divides n, decided from the base-p digits of n−1 alone:
/// p^j | n exactly when the j lowest digits of n−1 all equal p−1. O(j) once
/// the expansion exists, no factor products. Requires n ≥ 1, j ≥ 1 and p
/// prime (validated like lucas_binom_mod).
bool divides_prime_power(const Nat& n, const Nat& p, std::uint64_t j,
                         bool validate_prime = true);

}  // namespace binom

#include "binom/lucas.hpp"

#include <algorithm>
#include <cstdint>

#include "binom/errors.hpp"

namespace binom {

namespace {

constexpr std::uint64_t kValidateBound = 1'000'000;

// Local, not the oracle module's checker: production code and ground-truth
// oracles must not share a code path.
bool small_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

void validate_base(const Nat& p, bool validate_prime) {
  if (p < 2) throw BadBase("lucas: base must be at least 2");
  if (!validate_prime) return;
  if (p.fits_u64() && p.to_u64() <= kValidateBound && !small_prime(p.to_u64()))
    throw NotPrime("lucas: base " + p.str() + " is not prime");
}

// C(a, b) for base-p digits, exact. Machine words while the running value
// fits; restarts in big integers on overflow.
Nat digit_binomial(const Nat& a, const Nat& b) {
  if (b > a) return 0;
  if (a.fits_u64()) {
    std::uint64_t av = a.to_u64();
    std::uint64_t bv = b.to_u64();
    bv = std::min(bv, av - bv);
    std::uint64_t acc = 1;
    bool fits = true;
    for (std::uint64_t i = 1; i <= bv; ++i) {
      unsigned __int128 wide = static_cast<unsigned __int128>(acc) * (av - bv + i);
      wide /= i;  // exact: wide holds C(av-bv+i, i) at this point
      if (wide > UINT64_MAX) {
        fits = false;
        break;
      }
      acc = static_cast<std::uint64_t>(wide);
    }
    if (fits) return acc;
  }
  return binomial_exact(a, b);
}

}  // namespace

LucasFactorization lucas_binom_mod(const DigitsBaseP& r_digits,
                                   const DigitsBaseP& s_digits,
                                   bool validate_prime) {
  BINOM_REQUIRE(r_digits.base == s_digits.base);
  const Nat& p = r_digits.base;
  validate_base(p, validate_prime);

  LucasFactorization out;
  out.p = p;
  out.r_digits = r_digits;
  out.s_digits = s_digits;

  const Nat zero = 0;
  std::size_t len = std::max(r_digits.digits.size(), s_digits.digits.size());
  bool u64_mod = p.fits_u64();
  std::uint64_t pv = u64_mod ? p.to_u64() : 0;
  std::uint64_t res64 = 1;
  Nat res_big = 1;
  for (std::size_t i = 0; i < len; ++i) {
    const Nat& ri = i < r_digits.digits.size() ? r_digits.digits[i] : zero;
    const Nat& si = i < s_digits.digits.size() ? s_digits.digits[i] : zero;
    Nat f = digit_binomial(ri, si);
    if (u64_mod) {
      std::uint64_t fv = f.fits_u64() ? f.to_u64() % pv : (f % p).to_u64();
      res64 = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(res64) * fv % pv);
    } else {
      res_big = res_big * f % p;
    }
    out.factors.push_back(std::move(f));
  }
  out.residue = u64_mod ? Nat(res64) : res_big;
  return out;
}

LucasFactorization lucas_binom_mod(const Nat& r, const Nat& s, const Nat& p,
                                   bool validate_prime) {
  validate_base(p, validate_prime);
  return lucas_binom_mod(digits_base_p(r, p), digits_base_p(s, p), false);
}

Nat lucas_residue(const DigitsBaseP& r_digits, const DigitsBaseP& s_digits,
                  bool validate_prime) {
  BINOM_REQUIRE(r_digits.base == s_digits.base);
  const Nat& p = r_digits.base;
  validate_base(p, validate_prime);

  const Nat zero = 0;
  std::size_t len = std::max(r_digits.digits.size(), s_digits.digits.size());
  if (p.fits_u64()) {
    std::uint64_t pv = p.to_u64();
    std::uint64_t res = 1;
    for (std::size_t i = 0; i < len && res != 0; ++i) {
      const Nat& ri = i < r_digits.digits.size() ? r_digits.digits[i] : zero;
      const Nat& si = i < s_digits.digits.size() ? s_digits.digits[i] : zero;
      Nat f = digit_binomial(ri, si);
      std::uint64_t fv = f.fits_u64() ? f.to_u64() % pv : (f % p).to_u64();
      res = static_cast<std::uint64_t>(
          static_cast<unsigned __int128>(res) * fv % pv);
    }
    return res;
  }
  Nat res = 1;
  for (std::size_t i = 0; i < len && !res.is_zero(); ++i) {
    const Nat& ri = i < r_digits.digits.size() ? r_digits.digits[i] : zero;
    const Nat& si = i < s_digits.digits.size() ? s_digits.digits[i] : zero;
    res = res * digit_binomial(ri, si) % p;
  }
  return res;
}

bool divides_prime_power(const Nat& n, const Nat& p, std::uint64_t j,
                         bool validate_prime) {
  BINOM_REQUIRE(n >= 1);
  BINOM_REQUIRE(j >= 1);
  validate_base(p, validate_prime);
  DigitsBaseP d = digits_base_p(n - 1, p);
  Nat top = p - 1;
  for (std::uint64_t i = 0; i < j; ++i) {
    if (i >= d.digits.size()) return false;  // missing digits are zero
    if (d.digits[i] != top) return false;
  }
  return true;
}

}  // namespace binom

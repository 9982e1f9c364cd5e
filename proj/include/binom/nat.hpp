#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "binom/errors.hpp"
#include "binom/work.hpp"

namespace binom {

/// Arbitrary-precision nonnegative integer. A thin value wrapper over a GMP
/// magnitude; every operation is exact. Subtracting below zero or dividing
/// by zero is a contract violation, not a runtime error.
class Nat {
 public:
  Nat() : v_(0) {}

  template <std::integral T>
  Nat(T v) {  // NOLINT: implicit by design, literals must convert
    if constexpr (std::is_signed_v<T>) BINOM_REQUIRE(v >= 0);
    v_ = static_cast<unsigned long>(v);
  }

  explicit Nat(mpz_class v) : v_(std::move(v)) { BINOM_REQUIRE(v_ >= 0); }

  /// Parses a decimal or 0x-prefixed hex string. Rejects signs, whitespace
  /// and empty input.
  static std::optional<Nat> parse(std::string_view text);

  /// Decimal rendering.
  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return mpz_sgn(v_.get_mpz_t()) == 0; }
  bool fits_u64() const { return mpz_fits_ulong_p(v_.get_mpz_t()); }
  std::uint64_t to_u64() const {
    BINOM_REQUIRE(fits_u64());
    return mpz_get_ui(v_.get_mpz_t());
  }

  std::size_t bit_length() const {
    return is_zero() ? 0 : mpz_sizeinbase(v_.get_mpz_t(), 2);
  }

  const mpz_class& mpz() const { return v_; }

  friend Nat operator+(const Nat& a, const Nat& b) {
    return Nat(mpz_class(a.v_ + b.v_));
  }
  friend Nat operator-(const Nat& a, const Nat& b) {
    BINOM_REQUIRE(a.v_ >= b.v_);
    return Nat(mpz_class(a.v_ - b.v_));
  }
  friend Nat operator*(const Nat& a, const Nat& b) {
    return Nat(mpz_class(a.v_ * b.v_));
  }
  /// Floor quotient.
  friend Nat operator/(const Nat& a, const Nat& b) {
    BINOM_REQUIRE(!b.is_zero());
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Nat(std::move(q));
  }
  friend Nat operator%(const Nat& a, const Nat& b) {
    BINOM_REQUIRE(!b.is_zero());
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return Nat(std::move(r));
  }

  Nat& operator+=(const Nat& b) { v_ += b.v_; return *this; }
  Nat& operator-=(const Nat& b) {
    BINOM_REQUIRE(v_ >= b.v_);
    v_ -= b.v_;
    return *this;
  }
  Nat& operator*=(const Nat& b) { v_ *= b.v_; return *this; }

  bool divisible_by(const Nat& d) const {
    BINOM_REQUIRE(!d.is_zero());
    return mpz_divisible_p(v_.get_mpz_t(), d.v_.get_mpz_t()) != 0;
  }

  friend bool operator==(const Nat& a, const Nat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
    int c = mpz_cmp(a.v_.get_mpz_t(), b.v_.get_mpz_t());
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Nat& n) {
    return os << n.v_;
  }

 private:
  mpz_class v_;
};

/// Little-endian base-p expansion. Every digit is below the base; the most
/// significant digit is nonzero unless the value itself is zero (then the
/// expansion is the single digit [0]).
struct DigitsBaseP {
  Nat base;
  std::vector<Nat> digits;

  /// Reconstructs the expanded value, Σ digits[i]·base^i.
  Nat value() const;

  bool operator==(const DigitsBaseP&) const = default;
};

/// Integer square root: the unique k with k² ≤ n < (k+1)². Newton iteration
/// on integers with a final correction step.
Nat isqrt(const Nat& n);

/// Exact binomial coefficient C(r, s); zero when s > r. Multiplicative
/// formula with running exact division, one multiplication charged per step.
Nat binomial_exact(const Nat& r, const Nat& s, WorkMeter& meter);
Nat binomial_exact(const Nat& r, const Nat& s);

/// C(r, s) mod m, computed exactly and then reduced. Throws ZeroModulus when
/// m = 0.
Nat binomial_mod_exact(const Nat& r, const Nat& s, const Nat& m,
                       WorkMeter& meter);
Nat binomial_mod_exact(const Nat& r, const Nat& s, const Nat& m);

/// Base-p digit expansion of n. Throws BadBase when p < 2.
DigitsBaseP digits_base_p(const Nat& n, const Nat& p);

}  // namespace binom

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <binom/nat.hpp>
#include <binom/oracle.hpp>

#include <cstdint>
#include <vector>

using binom::Nat;

TEST_CASE("parse accepts decimal and 0x hex") {
  CHECK(Nat::parse("0")->is_zero());
  CHECK(*Nat::parse("12345") == Nat(12345));
  CHECK(*Nat::parse("0xff") == Nat(255));
  CHECK(*Nat::parse("0XFF") == Nat(255));
  CHECK(*Nat::parse("0x0") == Nat(0));
  auto big = Nat::parse("123456789012345678901234567890");
  REQUIRE(big.has_value());
  CHECK(big->str() == "123456789012345678901234567890");
  CHECK_FALSE(big->fits_u64());
}

TEST_CASE("parse rejects signs, whitespace and garbage") {
  CHECK_FALSE(Nat::parse("").has_value());
  CHECK_FALSE(Nat::parse("-5").has_value());
  CHECK_FALSE(Nat::parse("+5").has_value());
  CHECK_FALSE(Nat::parse(" 5").has_value());
  CHECK_FALSE(Nat::parse("5 ").has_value());
  CHECK_FALSE(Nat::parse("1.5").has_value());
  CHECK_FALSE(Nat::parse("0x").has_value());
  CHECK_FALSE(Nat::parse("0xg1").has_value());
  CHECK_FALSE(Nat::parse("12a").has_value());
}

TEST_CASE("basic arithmetic is exact") {
  CHECK(Nat(2) + Nat(3) == Nat(5));
  CHECK(Nat(7) - Nat(4) == Nat(3));
  CHECK(Nat(6) * Nat(7) == Nat(42));
  CHECK(Nat(17) / Nat(5) == Nat(3));
  CHECK(Nat(17) % Nat(5) == Nat(2));
  CHECK(Nat(5) < Nat(6));
  CHECK(Nat(6) >= Nat(6));
  CHECK(Nat(0).is_zero());
  CHECK(Nat(UINT64_MAX).fits_u64());
  CHECK(Nat(UINT64_MAX).to_u64() == UINT64_MAX);
  CHECK_FALSE((Nat(UINT64_MAX) + 1).fits_u64());
  CHECK(Nat(10).divisible_by(2));
  CHECK_FALSE(Nat(10).divisible_by(3));
}

TEST_CASE("isqrt pinned values") {
  CHECK(binom::isqrt(0) == Nat(0));
  CHECK(binom::isqrt(1) == Nat(1));
  CHECK(binom::isqrt(2) == Nat(1));
  CHECK(binom::isqrt(3) == Nat(1));
  CHECK(binom::isqrt(4) == Nat(2));
  CHECK(binom::isqrt(16) == Nat(4));
  CHECK(binom::isqrt(10007) == Nat(100));
  // 10^40 is a perfect square of 10^20
  CHECK(binom::isqrt(*Nat::parse("10000000000000000000000000000000000000000")) ==
        *Nat::parse("100000000000000000000"));
  CHECK(binom::isqrt(*Nat::parse("10000000000000000000000000000000000000001")) ==
        *Nat::parse("100000000000000000000"));
  CHECK(binom::isqrt(*Nat::parse("9999999999999999999999999999999999999999")) ==
        *Nat::parse("99999999999999999999"));
}

TEST_CASE("isqrt postcondition over the first million") {
  for (std::uint64_t n = 0; n <= 1000000; ++n) {
    Nat root = binom::isqrt(n);
    std::uint64_t r = root.to_u64();
    REQUIRE(r * r <= n);
    REQUIRE((r + 1) * (r + 1) > n);
  }
}

TEST_CASE("binomial_exact pinned values") {
  CHECK(binom::binomial_exact(0, 0) == Nat(1));
  CHECK(binom::binomial_exact(7, 0) == Nat(1));
  CHECK(binom::binomial_exact(5, 3) == Nat(10));
  CHECK(binom::binomial_exact(2, 5) == Nat(0));
  CHECK(binom::binomial_exact(5, 5) == Nat(1));
  CHECK(binom::binomial_exact(10, 3) == Nat(120));
  CHECK(binom::binomial_exact(52, 26).str() == "495918532948104");
}

TEST_CASE("binomial_exact satisfies Pascal's rule and symmetry up to 300") {
  std::vector<Nat> prev{Nat(1)};  // row 0
  for (std::uint64_t r = 1; r <= 300; ++r) {
    std::vector<Nat> row(r + 1);
    for (std::uint64_t s = 0; s <= r; ++s)
      row[s] = binom::binomial_exact(r, s);
    for (std::uint64_t s = 0; s <= r; ++s) {
      Nat above = s <= r - 1 ? prev[s] : Nat(0);
      Nat left = s >= 1 ? prev[s - 1] : Nat(0);
      REQUIRE(row[s] == above + left);
      REQUIRE(row[s] == row[r - s]);
    }
    prev = std::move(row);
  }
}

TEST_CASE("binomial_exact agrees with the Pascal-triangle oracle") {
  for (std::uint64_t r = 0; r <= 64; ++r)
    for (std::uint64_t s = 0; s <= r; ++s)
      REQUIRE(binom::binomial_exact(r, s) ==
              binom::binomial_pascal(r, s, std::nullopt));
}

TEST_CASE("binomial_mod_exact pinned values") {
  // C(11,9) = 55
  CHECK(binom::binomial_mod_exact(11, 9, 4) == Nat(3));
  // C(5,3) = 10: the composite-detection value 10 mod 4 = 4/2
  CHECK(binom::binomial_mod_exact(5, 3, 4) == Nat(2));
  // C(10,2) = 45
  CHECK(binom::binomial_mod_exact(10, 2, 3) == Nat(0));
  CHECK(binom::binomial_mod_exact(9, 0, 7) == Nat(1));
  CHECK(binom::binomial_mod_exact(9, 0, 1) == Nat(0));
}

TEST_CASE("binomial_mod_exact throws on zero modulus") {
  CHECK_THROWS_AS(binom::binomial_mod_exact(5, 2, 0), binom::ZeroModulus);
}

TEST_CASE("binomial_mod_exact equals exact binomial reduced") {
  const std::uint64_t moduli[] = {1, 2, 3, 4, 7, 10, 97, 100, 9973, 10000};
  for (std::uint64_t r = 0; r <= 300; r += 7)
    for (std::uint64_t s = 0; s <= r; ++s) {
      Nat exact = binom::binomial_exact(r, s);
      for (std::uint64_t m : moduli)
        REQUIRE(binom::binomial_mod_exact(r, s, m) == exact % Nat(m));
    }
  // dense modulus sweep at a fixed pair
  Nat exact = binom::binomial_exact(300, 137);
  for (std::uint64_t m = 1; m <= 10000; ++m)
    REQUIRE(binom::binomial_mod_exact(300, 137, m) == exact % Nat(m));
}

TEST_CASE("digits_base_p pinned expansions") {
  auto d = binom::digits_base_p(10, 3);
  CHECK(d.digits == std::vector<Nat>{1, 0, 1});
  CHECK(d.base == Nat(3));
  CHECK(binom::digits_base_p(0, 5).digits == std::vector<Nat>{0});
  CHECK(binom::digits_base_p(7, 2).digits == std::vector<Nat>{1, 1, 1});
  CHECK_THROWS_AS(binom::digits_base_p(10, 1), binom::BadBase);
  CHECK_THROWS_AS(binom::digits_base_p(10, 0), binom::BadBase);
}

TEST_CASE("digit expansions reconstruct their input") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t n = 0; n <= 100000; ++n) {
      auto d = binom::digits_base_p(n, p);
      REQUIRE(d.value() == Nat(n));
      for (const Nat& digit : d.digits) REQUIRE(digit < Nat(p));
      if (n > 0) REQUIRE_FALSE(d.digits.back().is_zero());
    }
  }
}

TEST_CASE("work budget converts runaway computations into errors") {
  binom::WorkMeter meter(10);
  CHECK_THROWS_AS(binom::binomial_exact(1000, 500, meter),
                  binom::WorkBudgetExceeded);
  try {
    binom::WorkMeter m2(10);
    binom::binomial_exact(1000, 500, m2);
    FAIL("expected WorkBudgetExceeded");
  } catch (const binom::WorkBudgetExceeded& e) {
    CHECK(e.budget() == 10);
    CHECK(e.used().mults == 10);
  }
  // within budget: the meter records the step count
  binom::WorkMeter m3(100);
  CHECK(binom::binomial_exact(10, 3, m3) == Nat(120));
  CHECK(m3.used().mults == 3);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <binom/lucas.hpp>
#include <binom/nat.hpp>

#include <cstdint>
#include <vector>

using binom::Nat;

TEST_CASE("digitwise residue, pinned traces") {
  auto f = binom::lucas_binom_mod(10, 2, 3);
  CHECK(f.p == Nat(3));
  CHECK(f.r_digits.digits == std::vector<Nat>{1, 0, 1});
  CHECK(f.s_digits.digits == std::vector<Nat>{2});
  CHECK(f.factors == std::vector<Nat>{0, 1, 1});  // C(1,2), C(0,0), C(1,0)
  CHECK(f.residue == Nat(0));  // C(10,2) = 45 ≡ 0 (mod 3)

  auto g = binom::lucas_binom_mod(11, 9, 2);
  CHECK(g.r_digits.digits == std::vector<Nat>{1, 1, 0, 1});
  CHECK(g.s_digits.digits == std::vector<Nat>{1, 0, 0, 1});
  CHECK(g.factors == std::vector<Nat>{1, 1, 1, 1});
  CHECK(g.residue == Nat(1));  // C(11,9) = 55, odd
}

TEST_CASE("choosing zero leaves residue one") {
  for (std::uint64_t p : {2, 3, 7, 13})
    for (std::uint64_t r : {0, 1, 5, 100, 99999})
      CHECK(binom::lucas_binom_mod(r, 0, p).residue == Nat(1));
}

TEST_CASE("s above r zeroes the residue through a high digit") {
  CHECK(binom::lucas_binom_mod(2, 5, 3).residue == Nat(0));
  CHECK(binom::lucas_binom_mod(10, 100, 7).residue == Nat(0));
  auto f = binom::lucas_binom_mod(2, 5, 3);  // 2=[2], 5=[2,1]: pad r
  CHECK(f.factors.size() == 2);
  CHECK(f.factors == std::vector<Nat>{1, 0});  // C(2,2), C(0,1)
}

TEST_CASE("residue is the factor product mod p, and zero iff a digit pair fails") {
  for (std::uint64_t p : {2, 5, 11}) {
    for (std::uint64_t r = 0; r <= 60; ++r) {
      for (std::uint64_t s = 0; s <= 70; ++s) {
        auto f = binom::lucas_binom_mod(r, s, p);
        Nat prod = 1;
        bool any_excess = false;
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
          prod = prod * f.factors[i] % Nat(p);
          Nat ri = i < f.r_digits.digits.size() ? f.r_digits.digits[i] : Nat(0);
          Nat si = i < f.s_digits.digits.size() ? f.s_digits.digits[i] : Nat(0);
          if (si > ri) any_excess = true;
        }
        REQUIRE(f.residue == prod);
        REQUIRE((f.residue == Nat(0)) == any_excess);
        REQUIRE(f.residue < Nat(p));
      }
    }
  }
}

TEST_CASE("residues match exact binomials for small sweeps") {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
    for (std::uint64_t r = 0; r <= 200; ++r)
      for (std::uint64_t s = 0; s <= 200; ++s)
        REQUIRE(binom::lucas_binom_mod(r, s, p).residue ==
                binom::binomial_mod_exact(r, s, p));
}

TEST_CASE("lucas_residue matches the full trace") {
  for (std::uint64_t p : {3, 7})
    for (std::uint64_t r = 0; r <= 120; ++r)
      for (std::uint64_t s = 0; s <= 120; ++s) {
        auto rd = binom::digits_base_p(r, p);
        auto sd = binom::digits_base_p(s, p);
        REQUIRE(binom::lucas_residue(rd, sd) ==
                binom::lucas_binom_mod(r, s, p).residue);
      }
}

TEST_CASE("expansion-reusing overload agrees with the value form") {
  auto rd = binom::digits_base_p(1999, 13);
  auto sd = binom::digits_base_p(777, 13);
  CHECK(binom::lucas_binom_mod(rd, sd).residue ==
        binom::lucas_binom_mod(1999, 777, 13).residue);
}

TEST_CASE("composite base is rejected while validation is on") {
  CHECK_THROWS_AS(binom::lucas_binom_mod(10, 2, 4), binom::NotPrime);
  CHECK_THROWS_AS(binom::lucas_binom_mod(10, 2, 100), binom::NotPrime);
  CHECK_THROWS_AS(binom::lucas_binom_mod(10, 2, 561), binom::NotPrime);
  CHECK_THROWS_AS(binom::lucas_binom_mod(10, 2, 1), binom::BadBase);
  CHECK_THROWS_AS(binom::lucas_binom_mod(10, 2, 0), binom::BadBase);
  CHECK_NOTHROW(binom::lucas_binom_mod(10, 2, 4, false));
  CHECK_THROWS_AS(binom::divides_prime_power(10, 9, 1), binom::NotPrime);
}

TEST_CASE("prime power divisibility, pinned") {
  CHECK(binom::divides_prime_power(12, 2, 2));        // 4 | 12
  CHECK_FALSE(binom::divides_prime_power(12, 2, 3));  // 8 ∤ 12
  for (std::uint64_t p : {2, 3, 5, 13})
    CHECK(binom::divides_prime_power(p, p, 1));
  CHECK_FALSE(binom::divides_prime_power(1, 2, 1));
  CHECK(binom::divides_prime_power(16, 2, 4));
  CHECK_FALSE(binom::divides_prime_power(16, 2, 5));
  CHECK(binom::divides_prime_power(250, 5, 3));  // 125 | 250
}

TEST_CASE("digit criterion equals direct divisibility up to 5000") {
  for (std::uint64_t p : {2, 3, 5}) {
    std::uint64_t pj = 1;
    for (std::uint64_t j = 1; j <= 4; ++j) {
      pj *= p;
      for (std::uint64_t n = 1; n <= 5000; ++n)
        REQUIRE(binom::divides_prime_power(n, p, j) == (n % pj == 0));
    }
  }
}

TEST_CASE("digit criterion matches the exact binomial dichotomy") {
  for (std::uint64_t p : {2, 3, 5}) {
    std::uint64_t pj = 1;
    for (std::uint64_t j = 1; j <= 4; ++j) {
      pj *= p;
      for (std::uint64_t n = 1; n <= 1200; ++n) {
        Nat residue = binom::binomial_mod_exact(n - 1, pj - 1, p);
        REQUIRE((residue == Nat(0) || residue == Nat(1)));
        REQUIRE((residue == Nat(1)) == binom::divides_prime_power(n, p, j));
      }
    }
  }
}

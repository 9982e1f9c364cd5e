#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <binom/primality.hpp>
#include <binom/report_io.hpp>

#include <cstdint>

using binom::EvalMode;
using binom::Nat;
using binom::TestKind;

TEST_CASE("every field survives a JSON round trip") {
  const std::uint64_t ns[] = {0, 1, 2, 3, 4, 10, 25, 100, 101, 561, 10007};
  for (std::uint64_t n : ns) {
    for (TestKind kind : {TestKind::T21, TestKind::T22, TestKind::ClassicFull,
                          TestKind::ClassicPrimes, TestKind::Pascal}) {
      for (bool sc : {false, true}) {
        auto ref = binom::run_test(n, kind, EvalMode::Reference, sc);
        REQUIRE(binom::report_from_json(binom::report_to_json(ref)) == ref);
        if (binom::supports_reduced(kind)) {
          auto red = binom::run_test(n, kind, EvalMode::Reduced, sc);
          REQUIRE(binom::report_from_json(binom::report_to_json(red)) == red);
        }
      }
    }
  }
}

TEST_CASE("the JSON layout is pinned: strings for numbers, fixed field names") {
  auto j = binom::report_to_json(
      binom::run_test(10, TestKind::T21, EvalMode::Reduced));
  CHECK(j["n"] == "10");
  CHECK(j["kind"] == "t21");
  CHECK(j["mode"] == "reduced");
  CHECK(j["verdict"] == "COMPOSITE");
  CHECK(j["sum"] == "1");
  CHECK(j["short_circuited"].is_boolean());
  CHECK(j["short_circuited"] == false);
  REQUIRE(j["terms"].is_array());
  REQUIRE(j["terms"].size() == 2);
  CHECK(j["terms"][0]["index"] == "1");
  CHECK(j["terms"][0]["prime_or_k"] == "2");
  CHECK(j["terms"][0]["modulus"] == "2");
  CHECK(j["terms"][0]["residue"] == "1");
  CHECK(j["terms"][1]["residue"] == "0");
  CHECK(j["witnesses"] == nlohmann::json::array({"2"}));
  CHECK(j["work"]["terms"] == "2");
  CHECK(j["work"]["mults"] == "0");
  CHECK(j["n"].is_string());
  CHECK(j["work"]["mults"].is_string());
}

TEST_CASE("numbers wider than any machine word survive") {
  auto wide = *Nat::parse("340282366920938463463374607431768211457");
  binom::TestReport r;
  r.n = wide;
  r.kind = TestKind::T22;
  r.mode = EvalMode::Reduced;
  r.terms.push_back(binom::TermRecord{1, Nat(3), wide, wide - 1,
                                      EvalMode::Reduced});
  r.sum = wide - 1;
  r.verdict = binom::Verdict::Composite;
  r.witnesses.push_back(3);
  r.work = binom::WorkCounters{1, 0};
  auto back = binom::report_from_json(binom::report_to_json(r));
  CHECK(back.n == wide);
  CHECK(back == r);
}

TEST_CASE("parsing recomputes the convention flag from n") {
  auto j = binom::report_to_json(
      binom::run_test(2, TestKind::T22, EvalMode::Reference));
  CHECK(binom::report_from_json(j).by_convention);
  j["n"] = "5";
  CHECK_FALSE(binom::report_from_json(j).by_convention);
}

TEST_CASE("malformed reports are rejected") {
  auto good = binom::report_to_json(
      binom::run_test(10, TestKind::T22, EvalMode::Reduced));

  auto missing = good;
  missing.erase("n");
  CHECK_THROWS_AS(binom::report_from_json(missing), nlohmann::json::exception);

  auto bad_number = good;
  bad_number["sum"] = "12x";
  CHECK_THROWS_AS(binom::report_from_json(bad_number), binom::Error);

  auto negative = good;
  negative["n"] = "-4";
  CHECK_THROWS_AS(binom::report_from_json(negative), binom::Error);

  auto bad_kind = good;
  bad_kind["kind"] = "t23";
  CHECK_THROWS_AS(binom::report_from_json(bad_kind), binom::Error);

  auto bad_verdict = good;
  bad_verdict["verdict"] = "prime";
  CHECK_THROWS_AS(binom::report_from_json(bad_verdict), binom::Error);

  auto bad_type = good;
  bad_type["short_circuited"] = "false";
  CHECK_THROWS_AS(binom::report_from_json(bad_type), nlohmann::json::exception);
}

#include "binom/report_io.hpp"

#include <string>

#include "binom/errors.hpp"

namespace binom {

namespace {

std::string u64_str(std::uint64_t v) { return std::to_string(v); }

Nat parse_nat_field(const nlohmann::json& j, const char* field) {
  auto text = j.at(field).get<std::string>();
  auto n = Nat::parse(text);
  if (!n) throw Error(std::string("report: bad number in ") + field + ": " + text);
  return *n;
}

std::uint64_t parse_u64_field(const nlohmann::json& j, const char* field) {
  Nat n = parse_nat_field(j, field);
  if (!n.fits_u64())
    throw Error(std::string("report: ") + field + " out of counter range");
  return n.to_u64();
}

}  // namespace

nlohmann::json report_to_json(const TestReport& report) {
  nlohmann::json terms = nlohmann::json::array();
  for (const TermRecord& t : report.terms) {
    terms.push_back({{"index", u64_str(t.index)},
                     {"prime_or_k", t.prime_or_k.str()},
                     {"modulus", t.modulus.str()},
                     {"residue", t.residue.str()}});
  }
  nlohmann::json witnesses = nlohmann::json::array();
  for (const Nat& w : report.witnesses) witnesses.push_back(w.str());
  return {{"n", report.n.str()},
          {"kind", std::string(to_string(report.kind))},
          {"mode", std::string(to_string(report.mode))},
          {"verdict", std::string(to_string(report.verdict))},
          {"sum", report.sum.str()},
          {"short_circuited", report.short_circuited},
          {"terms", std::move(terms)},
          {"witnesses", std::move(witnesses)},
          {"work",
           {{"terms", u64_str(report.work.terms)},
            {"mults", u64_str(report.work.mults)}}}};
}

TestReport report_from_json(const nlohmann::json& j) {
  TestReport report;
  report.n = parse_nat_field(j, "n");

  auto kind = parse_test_kind(j.at("kind").get<std::string>());
  if (!kind) throw Error("report: unknown kind " + j.at("kind").dump());
  report.kind = *kind;

  auto mode = parse_eval_mode(j.at("mode").get<std::string>());
  if (!mode) throw Error("report: unknown mode " + j.at("mode").dump());
  report.mode = *mode;

  auto verdict = parse_verdict(j.at("verdict").get<std::string>());
  if (!verdict) throw Error("report: unknown verdict " + j.at("verdict").dump());
  report.verdict = *verdict;

  report.sum = parse_nat_field(j, "sum");
  report.short_circuited = j.at("short_circuited").get<bool>();

  for (const auto& jt : j.at("terms")) {
    TermRecord t;
    t.index = parse_u64_field(jt, "index");
    t.prime_or_k = parse_nat_field(jt, "prime_or_k");
    t.modulus = parse_nat_field(jt, "modulus");
    t.residue = parse_nat_field(jt, "residue");
    t.mode = report.mode;
    report.terms.push_back(std::move(t));
  }
  for (const auto& jw : j.at("witnesses")) {
    auto w = Nat::parse(jw.get<std::string>());
    if (!w) throw Error("report: bad witness " + jw.dump());
    report.witnesses.push_back(std::move(*w));
  }
  const auto& work = j.at("work");
  report.work.terms = parse_u64_field(work, "terms");
  report.work.mults = parse_u64_field(work, "mults");
  report.by_convention = report.n <= 3;
  return report;
}

}  // namespace binom

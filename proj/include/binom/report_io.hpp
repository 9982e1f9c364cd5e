#pragma once

#include <json.hpp>

#include "binom/primality.hpp"

namespace binom {

/// JSON form of a report. Every number is a decimal string (n can exceed
/// anything JSON numbers hold losslessly); booleans stay booleans. Layout:
///
/// {
///   "n": "...", "kind": "t22", "mode": "reduced", "verdict": "COMPOSITE",
///   "sum": "...", "short_circuited": false,
///   "terms": [{"index": "1", "prime_or_k": "2", "modulus": "...",
///              "residue": "..."}, ...],
///   "witnesses": ["2", "5"],
///   "work": {"terms": "...", "mults": "..."}
/// }
nlohmann::json report_to_json(const TestReport& report);

/// Inverse of report_to_json. Fields the JSON does not carry are recomputed:
/// by_convention from n, each term's mode from the report mode. Throws
/// nlohmann::json::exception on missing or ill-typed fields, Error on
/// unparseable enum or number strings.
TestReport report_from_json(const nlohmann::json& j);

}  // namespace binom

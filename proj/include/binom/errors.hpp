#pragma once

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace binom {

/// Base class for every recoverable error this library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Modulus of zero passed where a residue is requested.
class ZeroModulus : public Error {
 public:
  using Error::Error;
};

/// Digit expansion requested in a base below 2.
class BadBase : public Error {
 public:
  using Error::Error;
};

/// A modulus that must be prime failed trial-division validation.
class NotPrime : public Error {
 public:
  using Error::Error;
};

/// Sieve limit beyond the machine-word sieving range.
class LimitTooLarge : public Error {
 public:
  using Error::Error;
};

/// Query outside the range a table was built for.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Evaluation mode not defined for the requested test kind.
class UnsupportedMode : public Error {
 public:
  using Error::Error;
};

// Programming-contract violations (negative Nat, subtraction below zero,
// precondition breaches) abort rather than throw. Kept active in release
// builds: a silently negative "nonnegative" integer corrupts every result
// downstream.
[[noreturn]] inline void contract_failure(const char* cond, const char* file,
                                          int line) {
  std::fprintf(stderr, "contract violation: %s (%s:%d)\n", cond, file, line);
  std::abort();
}

#define BINOM_REQUIRE(cond)                                     \
  do {                                                          \
    if (!(cond)) ::binom::contract_failure(#cond, __FILE__, __LINE__); \
  } while (0)

}  // namespace binom

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hallbound {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size limit (enumeration cap, quotient degree cap, search budget) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Caller violated an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Internal consistency guard tripped; indicates an engine bug.
class EngineError : public Error {
 public:
  using Error::Error;
};

struct Limits {
  // Operations that list every element of a group refuse groups above this.
  std::uint64_t enumeration_cap = 1'000'000;
  // Largest coset action built by quotient_by.
  std::uint64_t quotient_degree_cap = 20'000;
  // Largest group handed to the exhaustive Hall search.
  std::uint64_t exhaustive_hall_cap = 20'000;
  // Seed for every randomized routine.
  std::uint64_t seed = 0;
  // Random samples drawn when certifying structure above the enumeration cap.
  unsigned structure_samples = 200;
};

/// Process-wide limits. Set them before starting concurrent work.
Limits& limits();

/// Reads HALLBOUND_CAP and HALLBOUND_SEED from the environment into limits().
/// Throws PreconditionError on unparseable values.
void load_limits_from_env();

void require_enumerable(std::uint64_t order, const char* what);

}  // namespace hallbound

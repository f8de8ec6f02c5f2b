#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hallbound {

bool is_prime(std::uint64_t n);

/// Distinct prime divisors of n in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Sorted set of distinct primes; the π of Hall π-subgroups.
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Throws PreconditionError if an entry is not prime. Duplicates are merged.
  PrimeSet(std::initializer_list<std::uint64_t> primes);
  explicit PrimeSet(std::vector<std::uint64_t> primes);

  /// Parses "2,3,5".
  static PrimeSet parse(const std::string& text);

  bool contains(std::uint64_t p) const;
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }

  /// Largest divisor of n built only from primes in the set.
  std::uint64_t part_of(std::uint64_t n) const;
  /// True if every prime divisor of n lies in the set.
  bool is_pi_number(std::uint64_t n) const;
  /// True if no prime divisor of n lies in the set.
  bool is_pi_prime_number(std::uint64_t n) const;

  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
  friend auto operator<=>(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

}  // namespace hallbound

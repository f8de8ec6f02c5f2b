#include "hallbound/primes.hpp"

#include <algorithm>
#include <sstream>

#include "hallbound/config.hpp"

namespace hallbound {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

PrimeSet::PrimeSet(std::initializer_list<std::uint64_t> primes)
    : PrimeSet(std::vector<std::uint64_t>(primes)) {}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (auto p : primes_)
    if (!is_prime(p))
      throw PreconditionError(std::to_string(p) + " is not prime");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PrimeSet PrimeSet::parse(const std::string& text) {
  std::vector<std::uint64_t> ps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty())
      continue;
    if (!std::all_of(item.begin(), item.end(), ::isdigit) || item.size() > 18)
      throw PreconditionError("bad prime list: " + text);
    ps.push_back(std::stoull(item));
  }
  if (ps.empty())
    throw PreconditionError("empty prime list");
  return PrimeSet(std::move(ps));
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::uint64_t PrimeSet::part_of(std::uint64_t n) const {
  std::uint64_t part = 1;
  for (auto p : primes_)
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  return part;
}

bool PrimeSet::is_pi_number(std::uint64_t n) const { return part_of(n) == n; }

bool PrimeSet::is_pi_prime_number(std::uint64_t n) const { return part_of(n) == 1; }

std::string PrimeSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(primes_[i]);
  }
  return out + "}";
}

}  // namespace hallbound

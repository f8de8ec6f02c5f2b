#include "hallbound/config.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace hallbound {

Limits& limits() {
  static Limits instance;
  return instance;
}

namespace {

std::uint64_t parse_env_u64(const char* name, const char* text) {
  std::uint64_t value = 0;
  const char* end = text + std::strlen(text);
  auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc{} || ptr != end)
    throw PreconditionError(std::string("cannot parse ") + name + "=" + text);
  return value;
}

}  // namespace

void load_limits_from_env() {
  if (const char* cap = std::getenv("HALLBOUND_CAP"))
    limits().enumeration_cap = parse_env_u64("HALLBOUND_CAP", cap);
  if (const char* seed = std::getenv("HALLBOUND_SEED"))
    limits().seed = parse_env_u64("HALLBOUND_SEED", seed);
}

void require_enumerable(std::uint64_t order, const char* what) {
  if (order > limits().enumeration_cap)
    throw CapExceeded(std::string(what) + ": group order " + std::to_string(order) +
                      " exceeds enumeration cap " + std::to_string(limits().enumeration_cap));
}

}  // namespace hallbound

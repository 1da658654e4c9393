#include "wittgrass/workbound.hpp"

#include <cstdlib>
#include <limits>

#include "wittgrass/errors.hpp"

namespace wittgrass {

std::uint64_t work_bound() {
  if (const char* env = std::getenv("WITTGRASS_WORKBOUND")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultWorkBound;
}

void check_work(std::uint64_t amount, const std::string& what) {
  const auto bound = work_bound();
  if (amount > bound) {
    throw WorkBoundExceeded(what + ": " + std::to_string(amount) + " candidates exceed the work bound " + std::to_string(bound) +
                            " (set WITTGRASS_WORKBOUND to raise it)");
  }
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

std::uint64_t sat_pow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r = sat_mul(r, base);
  return r;
}

}  // namespace wittgrass

#include "gjts/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gjts {

int thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  int fallback = hw == 0 ? 1 : static_cast<int>(hw > 8 ? 8 : hw);
  const char* env = std::getenv("PEIRCE_THREADS");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1) return fallback;
  return static_cast<int>(v > 256 ? 256 : v);
}

}  // namespace gjts

#include "cpe/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cpe {

unsigned thread_count() {
  unsigned n = 0;
  if (const char* env = std::getenv("CPE_THREADS")) {
    try {
      n = static_cast<unsigned>(std::stoul(env));
    } catch (...) {
      n = 0;
    }
  }
  if (n == 0) n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

}  // namespace cpe

#include "sliceball/parallel.hpp"

#include <cstdlib>
#include <string>

namespace sliceball {

std::size_t worker_count() {
  static const std::size_t cached = [] {
    std::size_t n = std::thread::hardware_concurrency();
    if (n == 0) {
      n = 1;
    }
    if (const char* env = std::getenv("SLICEBALL_THREADS")) {
      try {
        const long v = std::stol(env);
        if (v >= 1) {
          n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
        }
      } catch (...) {
        // Malformed value: keep the hardware default.
      }
    }
    return n;
  }();
  return cached;
}

}  // namespace sliceball

#include "schubert/parallel.hpp"

#include <atomic>

namespace schubert {

namespace {
std::atomic<unsigned> g_max_threads{1};
}

unsigned max_threads() noexcept { return g_max_threads.load(std::memory_order_relaxed); }

void set_max_threads(unsigned n) noexcept {
  g_max_threads.store(n == 0 ? 1 : n, std::memory_order_relaxed);
}

}  // namespace schubert

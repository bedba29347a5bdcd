#include "ett/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace ett {

namespace {

int default_workers() {
  if (const char* env = std::getenv("ETT_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0) return w;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::atomic<int> g_workers{0};  // 0 = not yet resolved

}  // namespace

int worker_count() {
  int w = g_workers.load(std::memory_order_relaxed);
  if (w == 0) {
    w = default_workers();
    g_workers.store(w, std::memory_order_relaxed);
  }
  return w;
}

void set_worker_count(int workers) {
  g_workers.store(workers > 0 ? workers : default_workers(),
                  std::memory_order_relaxed);
}

}  // namespace ett

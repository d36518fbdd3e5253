#include "spectraux/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace spectraux {

int env_thread_cap() {
  const int hw = std::max(1u, std::thread::hardware_concurrency());
  const char* raw = std::getenv("SPECTRAUX_THREADS");
  if (raw == nullptr) return hw;
  try {
    const int requested = std::stoi(raw);
    return requested <= 0 ? hw : requested;
  } catch (...) {
    return hw;
  }
}

void parallel_for(int count, int workers, const std::function<void(int)>& body) {
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }

  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace spectraux

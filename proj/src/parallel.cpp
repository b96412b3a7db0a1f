#include "teamai/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace teamai {

int worker_thread_count() {
  int requested = 0;
  if (const char* env = std::getenv("TEAMAI_THREADS")) {
    requested = std::atoi(env);
  }
  if (requested <= 0) {
    requested = static_cast<int>(std::thread::hardware_concurrency());
  }
  return requested > 0 ? requested : 1;
}

void parallel_chunks(std::int64_t count, std::int64_t chunk_size,
                     const std::function<void(std::int64_t, std::int64_t,
                                              std::int64_t)>& body) {
  if (count <= 0) return;
  if (chunk_size <= 0) chunk_size = count;
  const std::int64_t chunks = (count + chunk_size - 1) / chunk_size;
  const int threads =
      static_cast<int>(std::min<std::int64_t>(worker_thread_count(), chunks));
  if (threads <= 1) {
    for (std::int64_t ci = 0; ci < chunks; ++ci) {
      const std::int64_t begin = ci * chunk_size;
      body(ci, begin, std::min(begin + chunk_size, count));
    }
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::int64_t ci = next.fetch_add(1);
        if (ci >= chunks) return;
        const std::int64_t begin = ci * chunk_size;
        body(ci, begin, std::min(begin + chunk_size, count));
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace teamai

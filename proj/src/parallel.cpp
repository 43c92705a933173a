#include "sfab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace sfab {

unsigned worker_count() {
  if (const char* env = std::getenv("SFAB_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_chunks(size_t n, size_t chunk, const std::function<void(size_t, size_t)>& f) {
  if (n == 0) return;
  chunk = std::max<size_t>(chunk, 1);
  const size_t pieces = (n + chunk - 1) / chunk;
  const unsigned workers = static_cast<unsigned>(std::min<size_t>(worker_count(), pieces));
  if (workers <= 1) {
    f(0, n);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    for (;;) {
      size_t p = next.fetch_add(1);
      if (p >= pieces) return;
      try {
        f(p * chunk, std::min(n, (p + 1) * chunk));
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next = pieces;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(body);
  body();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace sfab

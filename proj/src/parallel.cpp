#include "sensnet/parallel.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

namespace sensnet {

int resolve_threads(int requested) {
  if (requested < 0) throw std::invalid_argument("resolve_threads: negative thread count");
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_chunks(long long n, int threads,
                     const std::function<void(long long, long long)>& body) {
  if (n <= 0) return;
  const int workers = std::min<long long>(resolve_threads(threads), n);
  if (workers == 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const long long per = (n + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    const long long lo = static_cast<long long>(t) * per;
    const long long hi = std::min(n, lo + per);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace sensnet

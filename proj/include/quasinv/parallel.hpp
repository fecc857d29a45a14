#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace quasinv {

// Worker cap: hardware concurrency unless QUASINV_THREADS says less.
inline int worker_count() {
  int n = static_cast<int>(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  if (const char* env = std::getenv("QUASINV_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
}

// Deterministic parallel reduction: work is split into fixed blocks keyed by
// block index, each block folds locally, and block results merge in block
// order. The result is independent of the number of workers.
template <typename State>
State parallel_blocks(long n_items, long block_size,
                      const std::function<void(long item, State&)>& fold,
                      const std::function<void(State&, const State&)>& merge) {
  const long n_blocks = (n_items + block_size - 1) / block_size;
  std::vector<State> block_states(static_cast<std::size_t>(n_blocks));
  const int workers = std::min<long>(worker_count(), n_blocks) > 0
                          ? static_cast<int>(std::min<long>(worker_count(), n_blocks))
                          : 1;

  auto run_block = [&](long b) {
    State& st = block_states[static_cast<std::size_t>(b)];
    const long lo = b * block_size;
    const long hi = std::min(n_items, lo + block_size);
    for (long i = lo; i < hi; ++i) fold(i, st);
  };

  if (workers <= 1) {
    for (long b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (long b = w; b < n_blocks; b += workers) run_block(b);
      });
    }
    for (auto& t : pool) t.join();
  }

  State out;
  for (long b = 0; b < n_blocks; ++b) merge(out, block_states[static_cast<std::size_t>(b)]);
  return out;
}

}  // namespace quasinv

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace dichro {

/// Worker count used by the parallel loops; 0 restores the default (all cores).
void set_thread_count(unsigned threads);
unsigned thread_count();

/// Splits [0, count) into a fixed number of chunks (independent of the worker
/// count), evaluates `chunk(begin, end)` for each, and folds the partial results
/// in chunk order. Output is identical for any thread count.
template <typename T, typename ChunkFn, typename Reduce>
T parallel_reduce(std::uint64_t count, T init, ChunkFn chunk, Reduce reduce) {
  constexpr std::uint64_t kChunks = 64;
  const std::uint64_t chunks = count < kChunks ? (count ? count : 1) : kChunks;
  std::vector<T> partial(chunks, init);
  auto run = [&](std::uint64_t c) {
    const std::uint64_t begin = count * c / chunks;
    const std::uint64_t end = count * (c + 1) / chunks;
    partial[c] = chunk(begin, end);
  };
  const unsigned workers = std::min<std::uint64_t>(thread_count(), chunks);
  if (workers <= 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) run(c);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::uint64_t c = w; c < chunks; c += workers) run(c);
      });
    for (auto& th : pool) th.join();
  }
  T acc = init;
  for (auto& p : partial) acc = reduce(std::move(acc), std::move(p));
  return acc;
}

}  // namespace dichro

#include "dichro/parallel.hpp"

namespace dichro {

namespace {

unsigned g_threads = 0;

}  // namespace

void set_thread_count(unsigned threads) { g_threads = threads; }

unsigned thread_count() {
  if (g_threads) return g_threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace dichro

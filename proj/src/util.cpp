#include "nilband/util.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <thread>

namespace nilband {

namespace {

int resolve_default_threads() {
  if (const char* env = std::getenv("NILBAND_THREADS")) {
    int parsed = std::atoi(env);
    if (parsed >= 1) return parsed;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::atomic<int> g_threads{0};

}  // namespace

int thread_count() {
  int current = g_threads.load(std::memory_order_relaxed);
  if (current == 0) {
    current = resolve_default_threads();
    g_threads.store(current, std::memory_order_relaxed);
  }
  return current;
}

void set_thread_count(int count) {
  g_threads.store(count >= 1 ? count : 1, std::memory_order_relaxed);
}

void parallel_for(std::uint64_t count, const std::function<void(std::uint64_t)>& fn) {
  const int workers = thread_count();
  if (workers <= 1 || count < 2048) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  const std::uint64_t chunk = std::max<std::uint64_t>(256, count / (8 * workers));
  auto worker = [&] {
    while (true) {
      std::uint64_t begin = next.fetch_add(chunk);
      if (begin >= count) return;
      std::uint64_t end = std::min(count, begin + chunk);
      for (std::uint64_t i = begin; i < end; ++i) fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() == 1) return values[0];
  if (values.size() <= 8) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  std::size_t half = values.size() / 2;
  return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace nilband

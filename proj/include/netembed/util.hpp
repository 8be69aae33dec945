#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace netembed {

// Wall-clock seconds on a monotonic clock.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_).count();
  }
  void reset() { start_ = std::chrono::steady_clock::now(); }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Runs f(begin, end) over static contiguous chunks on `threads` workers.
// threads <= 1 runs inline.
inline void parallel_chunks(std::size_t count, int threads,
                            const std::function<void(std::size_t, std::size_t)>& f) {
  if (threads <= 1 || count <= 1) {
    f(0, count);
    return;
  }
  const std::size_t nthreads =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  const std::size_t chunk = (count + nthreads - 1) / nthreads;
  for (std::size_t t = 0; t < nthreads; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(f, lo, hi);
  }
  for (auto& th : pool) th.join();
}

// Shortest round-trip decimal representation used in all text output
// (17 significant digits keeps doubles bit-exact through a round trip).
std::string format_double(double x);

// Writes content to a temporary sibling file and renames it into place, so
// readers never observe partial output.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace netembed

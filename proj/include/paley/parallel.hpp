#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace paley {

// Static block partition of [0, n) over `threads` workers.  Worker w receives
// the half-open range [n*w/t, n*(w+1)/t); ranges are disjoint and in index
// order, so writers that key results by index merge independently of the
// thread count.
inline void parallel_for(int threads, std::size_t n,
                         const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  std::size_t t = threads < 1 ? 1 : static_cast<std::size_t>(threads);
  if (t > n) t = n;
  if (t == 1) {
    body(0, 0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (std::size_t w = 0; w < t; ++w) {
    std::size_t lo = n * w / t;
    std::size_t hi = n * (w + 1) / t;
    pool.emplace_back([w, lo, hi, &body] { body(w, lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace paley

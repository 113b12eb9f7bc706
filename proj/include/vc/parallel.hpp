#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace vc {

/// Worker count from VC_THREADS if set, else the hardware concurrency.
inline unsigned default_workers() {
  if (const char* env = std::getenv("VC_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into at most `workers` contiguous slices and runs
/// fn(slice_index, begin, end) on each, one thread per slice. Returns the
/// slice count; slice i always covers the same range for given n and workers,
/// so per-slice results merged in slice order are deterministic.
/// The first exception thrown by any slice is rethrown after all threads join.
template <typename Fn>
std::size_t parallel_slices(std::size_t n, unsigned workers, Fn&& fn) {
  const std::size_t slices = std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
  auto bounds = [&](std::size_t s) { return std::pair{n * s / slices, n * (s + 1) / slices}; };
  if (slices == 1) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return 1;
  }
  std::vector<std::exception_ptr> errors(slices);
  {
    std::vector<std::jthread> threads;
    threads.reserve(slices);
    for (std::size_t s = 0; s < slices; ++s) {
      threads.emplace_back([&, s] {
        try {
          auto [b, e] = bounds(s);
          fn(s, b, e);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return slices;
}

}  // namespace vc

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace arealab {

/// Process-wide worker count used when an operation is not given one.
/// Zero resets to std::thread::hardware_concurrency().
void set_default_threads(unsigned threads);
unsigned default_threads();

/// Runs body(i) for i in [0, count) on up to `threads` workers. Work items
/// are claimed dynamically, so callers that need reproducible output must
/// write into slot i and reduce in index order afterwards.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

/// Maps body over [0, count) and returns results in index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, unsigned threads, Fn&& body) {
  std::vector<T> out(count);
  parallel_for(count, threads, [&](std::size_t i) { out[i] = body(i); });
  return out;
}

}  // namespace arealab

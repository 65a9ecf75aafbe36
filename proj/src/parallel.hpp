#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace pathsat::detail {

// Runs task(i) for i in [0, count) on up to `jobs` threads, handing out
// indices in ascending order. jobs <= 1 runs inline.
inline void run_indexed(int jobs, int count, const std::function<void(int)>& task) {
  jobs = std::clamp(jobs, 1, std::max(1, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int t = 0; t < jobs; ++t) {
    threads.emplace_back([&] {
      for (int i = next++; i < count; i = next++) task(i);
    });
  }
  for (auto& th : threads) th.join();
}

}  // namespace pathsat::detail

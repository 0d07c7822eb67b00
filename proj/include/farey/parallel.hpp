#pragma once

#include <thread>
#include <vector>

namespace farey {

// Runs fn(i) for i in [0, count) over contiguous chunks. Callers write
// results into preassigned slots, so output is independent of scheduling.
template <typename Fn>
void parallel_for(long count, int jobs, Fn&& fn) {
  if (jobs <= 1 || count < 2) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  int workers = jobs < count ? jobs : static_cast<int>(count);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  long chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    long begin = w * chunk;
    long end = begin + chunk < count ? begin + chunk : count;
    if (begin >= end) break;
    pool.emplace_back([begin, end, &fn] {
      for (long i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace farey

#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace symharm {

inline int default_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : int(n);
}

// Runs f(i) for i in [0, count) across `jobs` threads. Results land in a
// vector indexed by i, so reductions over the vector are deterministic
// regardless of scheduling.
template <class Result>
std::vector<Result> parallel_map(size_t count, int jobs,
                                 const std::function<Result(size_t)>& f) {
  std::vector<Result> results(count);
  if (count == 0) return results;
  if (jobs < 1) jobs = 1;
  jobs = int(std::min<size_t>(size_t(jobs), count));
  if (jobs == 1) {
    for (size_t i = 0; i < count; ++i) results[i] = f(i);
    return results;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          results[i] = f(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
  return results;
}

}  // namespace symharm

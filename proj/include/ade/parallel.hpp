#pragma once

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace ade {

// Worker count used when a caller passes 0: ADE_WORKERS if set, else 1.
inline int default_workers()
{
  if (const char* env = std::getenv("ADE_WORKERS")) {
    int w = std::atoi(env);
    if (w > 0)
      return w;
  }
  return 1;
}

inline int resolve_workers(int workers)
{
  return workers > 0 ? workers : default_workers();
}

// Split [0, n) into fixed-size chunks (independent of the worker count),
// evaluate fn(lo, hi) for each chunk on a small thread pool and return the
// results in chunk order. Callers merge the results sequentially, so the
// outcome never depends on scheduling.
template <class F>
auto parallel_chunks(std::size_t n, int workers, std::size_t chunk, F&& fn)
{
  using T = decltype(fn(std::size_t{0}, std::size_t{0}));
  if (chunk == 0)
    chunk = 1;
  std::size_t nchunks = (n + chunk - 1) / chunk;
  std::vector<T> out(nchunks);
  workers = std::max(1, std::min<int>(resolve_workers(workers), static_cast<int>(std::max<std::size_t>(nchunks, 1))));

  auto run = [&](std::size_t c) { out[c] = fn(c * chunk, std::min(n, (c + 1) * chunk)); };
  if (workers == 1) {
    for (std::size_t c = 0; c < nchunks; ++c)
      run(c);
    return out;
  }

  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t c = w; c < nchunks; c += workers)
          run(c);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool)
    t.join();
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
  return out;
}

} // namespace ade

#include "ptfopt/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace ptfopt {

int thread_count() {
  if (const char* env = std::getenv("PTFOPT_THREADS")) {
    try {
      int n = std::stoi(env);
      return std::clamp(n, 1, 256);
    } catch (...) {
      return 1;
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t, int)>& fn) {
  if (n == 0) {
    return;
  }
  int workers = thread_count();
  std::size_t chunks = std::min<std::size_t>(workers, n);
  if (chunks <= 1) {
    fn(0, n, 0);
    return;
  }
  std::size_t per = n / chunks;
  std::size_t extra = n % chunks;
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  std::size_t begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t len = per + (c < extra ? 1 : 0);
    std::size_t end = begin + len;
    pool.emplace_back([&fn, begin, end, c] { fn(begin, end, static_cast<int>(c)); });
    begin = end;
  }
  for (auto& t : pool) {
    t.join();
  }
}

}  // namespace ptfopt

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <thread>
#include <vector>

namespace thue {

// out[0] = init, out[i+1] = out[i] + in[i]; `out` has in.size() + 1 slots.
//
// Blocked three-pass scan: per-block totals in parallel, a serial scan over the
// block totals, then a parallel fill. Addition on the exact scalar types used
// here is associative, so the result does not depend on `workers`.
template <class T>
void exclusive_scan(std::span<const T> in, const T& init, std::span<T> out,
                    unsigned workers = 1) {
  const std::size_t n = in.size();
  out[0] = init;
  if (workers <= 1 || n < 4096) {
    for (std::size_t i = 0; i < n; ++i) out[i + 1] = out[i] + in[i];
    return;
  }
  const std::size_t blocks = std::min<std::size_t>(workers, n);
  const std::size_t width = (n + blocks - 1) / blocks;
  auto block_begin = [&](std::size_t b) { return std::min(n, b * width); };

  std::vector<T> totals(blocks);
  {
    std::vector<std::jthread> pool;
    for (std::size_t b = 0; b < blocks; ++b) {
      pool.emplace_back([&, b] {
        T s{};
        for (std::size_t i = block_begin(b); i < block_begin(b + 1); ++i) s += in[i];
        totals[b] = std::move(s);
      });
    }
  }
  std::vector<T> offsets(blocks);
  offsets[0] = init;
  for (std::size_t b = 1; b < blocks; ++b) offsets[b] = offsets[b - 1] + totals[b - 1];
  {
    std::vector<std::jthread> pool;
    for (std::size_t b = 0; b < blocks; ++b) {
      pool.emplace_back([&, b] {
        T acc = offsets[b];
        for (std::size_t i = block_begin(b); i < block_begin(b + 1); ++i) {
          acc += in[i];
          out[i + 1] = acc;
        }
      });
    }
  }
}

}  // namespace thue

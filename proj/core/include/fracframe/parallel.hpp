#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace fracframe {

/// Process-wide worker count (CLI --workers). 0 means hardware concurrency.
void set_worker_count(int n);
int worker_count();

/// Runs fn(i) for i in [0, n). Items are distributed in contiguous blocks;
/// each item must write only to its own output slot so results are
/// independent of the worker count.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

/// Block variant: fn(lo, hi) over disjoint ranges. Cheaper when the body is
/// tiny and per-item std::function overhead would dominate.
void parallel_blocks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace fracframe

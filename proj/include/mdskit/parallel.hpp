#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace mdskit {

/// Worker count: MDSKIT_THREADS if set and positive, else hardware concurrency.
inline unsigned worker_count() {
    unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("MDSKIT_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return std::min<unsigned>(static_cast<unsigned>(v), hw);
        } catch (const std::exception&) {
        }
    }
    return hw;
}

/// Smallest index in [0, n) for which `ok(i)` is false, scanning disjoint
/// contiguous ranges in parallel. `ok` must be safe to call concurrently.
/// Ranges past an already-found failure stop early.
template <typename Pred>
std::optional<std::uint64_t> parallel_first_failure(std::uint64_t n, Pred ok, unsigned workers = 0) {
    if (workers == 0) workers = worker_count();
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(n, 1)));
    constexpr std::uint64_t kNone = ~std::uint64_t{0};
    std::atomic<std::uint64_t> best{kNone};

    auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (i >= best.load(std::memory_order_relaxed)) return;
            if (!ok(i)) {
                std::uint64_t cur = best.load();
                while (i < cur && !best.compare_exchange_weak(cur, i)) {
                }
                return;
            }
        }
    };

    if (workers <= 1) {
        scan(0, n);
    } else {
        std::vector<std::jthread> pool;
        const std::uint64_t chunk = (n + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back(scan, lo, hi);
        }
    }
    const std::uint64_t found = best.load();
    if (found == kNone) return std::nullopt;
    return found;
}

/// Runs `body(lo, hi, slot)` over `slots` contiguous ranges of [0, n) on the
/// worker pool; results are meant to be written to per-slot storage.
template <typename Body>
void parallel_ranges(std::uint64_t n, std::size_t slots, Body body, unsigned workers = 0) {
    if (workers == 0) workers = worker_count();
    const std::uint64_t chunk = slots == 0 ? n : (n + slots - 1) / slots;
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (std::size_t s = next++; s < slots; s = next++) {
            const std::uint64_t lo = s * chunk;
            const std::uint64_t hi = std::min(n, lo + chunk);
            if (lo < hi) body(lo, hi, s);
        }
    };
    if (workers <= 1) {
        run();
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
}

}  // namespace mdskit

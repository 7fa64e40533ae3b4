#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace rkbs {

// Deterministic random source used everywhere seeded draws are needed.
//
// The generator is std::mt19937_64, which is fully specified by the C++
// standard, so identical seeds produce identical streams on every platform.
// Floating-point draws avoid std::uniform_real_distribution (whose output is
// implementation-defined) and instead map the top 53 bits of each 64-bit
// word to [0,1).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0,1): (x >> 11) * 2^-53.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Uniform integer in [0, n). Modulo reduction; the (negligible) bias is
    // acceptable since only determinism is contractual here.
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    // k distinct indices from {0,...,n-1} via partial Fisher-Yates,
    // returned sorted ascending. k == n yields 0..n-1.
    std::vector<int> sample_without_replacement(int n, int k) {
        std::vector<int> idx(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (int i = 0; i < k; ++i) {
            const auto j = i + static_cast<int>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
        }
        idx.resize(static_cast<std::size_t>(k));
        std::sort(idx.begin(), idx.end());
        return idx;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace rkbs

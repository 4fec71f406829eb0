#pragma once

#include <cstdint>
#include <vector>

namespace textcnn {

/// Deterministic xoshiro256** generator, seeded through splitmix64.
/// The exact algorithm is documented in docs/determinism.md; the same
/// seed produces the same stream on every platform. Single-owner: not
/// meant to be shared across threads.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n);

    /// Fisher-Yates shuffle with a fixed traversal order.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            const std::size_t j = static_cast<std::size_t>(below(i + 1));
            using std::swap;
            swap(v[i], v[j]);
        }
    }

private:
    std::uint64_t state_[4];
};

}  // namespace textcnn

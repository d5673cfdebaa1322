#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace tmotif {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of the i-th independent stream derived from a base seed:
/// mix64(seed ^ mix64(i + 1)).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// mt19937_64 with bounded-integer and real draws implemented here, so that
/// results are identical across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, n). Requires n > 0.
    std::uint64_t below(std::uint64_t n);
    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi);
    /// Uniform real in [0, 1).
    double unit();

    template <typename T>
    void shuffle(std::span<T> values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[below(i)]);
        }
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace tmotif

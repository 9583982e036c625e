// portable_random.hpp
//
// Seeded draws built directly on the mt19937_64 output stream. The engine is
// bit-exact across standard libraries; std::shuffle and the standard
// distributions are not, and seed-reproducible results are part of this
// tool's contract.

#ifndef COMDET_PORTABLE_RANDOM_HPP
#define COMDET_PORTABLE_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace comdet::detail {

// Uniform integer in [0, bound) by rejection sampling.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

// Uniform double in [0, 1) with 53 bits of precision.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates with uniform_below.
template <typename T>
void shuffle(std::vector<T>& values, std::mt19937_64& rng) {
    for (std::size_t i = values.size(); i > 1; --i)
        std::swap(values[i - 1], values[uniform_below(rng, i)]);
}

}  // namespace comdet::detail

#endif  // COMDET_PORTABLE_RANDOM_HPP

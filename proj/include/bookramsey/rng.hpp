#pragma once

#include <cstdint>

// Counter-based random streams: the value drawn for (seed, counter) depends on
// nothing else, so edge colors do not depend on iteration order or on how the
// work is split between threads.
namespace bookramsey::rng {

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t stream(std::uint64_t seed, std::uint64_t counter) noexcept
{
    return splitmix64(splitmix64(seed) ^ splitmix64(counter ^ 0x6a09e667f3bcc909ULL));
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit(std::uint64_t bits) noexcept
{
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

constexpr double uniform(std::uint64_t seed, std::uint64_t counter) noexcept
{
    return to_unit(stream(seed, counter));
}

// Seed for the index-th independent sub-run (Monte Carlo trial, restart).
constexpr std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) noexcept
{
    return stream(base_seed ^ 0x510e527fade682d1ULL, index);
}

// Row-major index of the pair u < v among all pairs of an n-vertex graph.
constexpr std::uint64_t pair_index(std::uint64_t n, std::uint64_t u, std::uint64_t v) noexcept
{
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

} // namespace bookramsey::rng

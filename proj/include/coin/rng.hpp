#pragma once

#include <cstdint>

namespace coin {

// SplitMix64 finalizer. Used to derive independent child seeds from a base
// seed so that trials, agents and environment randomness get decorrelated
// streams without any shared state.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(splitmix64(base) ^ splitmix64(stream + 0x6a09e667f3bcc909ull));
}

// Uniform double in [0,1) from a 64-bit word; bit-stable across platforms.
inline double canonical_double(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace coin

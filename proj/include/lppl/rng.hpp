#pragma once

#include <cstdint>

namespace lppl {

// splitmix64 step; used to derive independent child seeds from one master
// seed so results do not depend on evaluation order.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ull * (stream + 1));
    return splitmix64(s);
}

// i-th element (1-based radical inverse of i+1) of the Halton sequence in the
// given prime base; values lie in (0, 1).
inline double halton(int index, int base) {
    double f = 1.0, r = 0.0;
    int i = index + 1;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

}  // namespace lppl

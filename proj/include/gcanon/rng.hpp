#pragma once

#include <cmath>
#include <cstdint>

namespace gcanon {

// Stateless counter-based generator: the value for (seed, stream, counter)
// is a pure function, so worker scheduling cannot change any sample.
struct CounterRng {
    uint64_t seed;

    static uint64_t mix64(uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t raw(uint64_t stream, uint64_t ctr) const {
        uint64_t h = mix64(seed ^ (stream * 0x8f462907355d2035ull));
        return mix64(h ^ (ctr * 0xd1b54a32d192ed03ull));
    }

    // uniform in the open interval (0,1)
    double uniform(uint64_t stream, uint64_t ctr) const {
        uint64_t r = raw(stream, ctr);
        return (double(r >> 11) + 0.5) * (1.0 / 9007199254740992.0);
    }

    double exponential(uint64_t stream, uint64_t ctr) const {
        return -std::log(uniform(stream, ctr));
    }
};

}  // namespace gcanon

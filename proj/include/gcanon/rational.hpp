#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace gcanon {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(num, den) does not canonicalize; this always does.
inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    mpq_canonicalize(q.get_mpq_t());
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// FNV-1a, used for content-addressed caching and hash maps on byte keys.
inline uint64_t fnv1a(const void* data, size_t n, uint64_t h = 1469598103934665603ull) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; i++) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

inline uint64_t fnv1a(const std::string& s, uint64_t h = 1469598103934665603ull) {
    return fnv1a(s.data(), s.size(), h);
}

}  // namespace gcanon

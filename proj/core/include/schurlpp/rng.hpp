#pragma once

#include <cstdint>

#include "schurlpp/errors.hpp"

namespace schurlpp {

/// SplitMix64 finisher; full-period mixer with good avalanche behaviour.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Stateless sub-stream key for cell (i, j) of replica r: every draw is a
/// pure function of (seed, r, i, j), so enlarging a window or splitting work
/// across threads never changes the numbers.
inline uint64_t cell_key(uint64_t seed, uint64_t replica, uint64_t i, uint64_t j) {
    uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ splitmix64(replica + 0x100000001b3ULL));
    h = splitmix64(h ^ splitmix64(i + 0x9e3779b97f4a7c15ULL));
    h = splitmix64(h ^ splitmix64(j + 0x2545f4914f6cdd1dULL));
    return h;
}

/// Uniform double in [0, 1) from 64 mixed bits (53-bit mantissa).
inline double uniform01(uint64_t h) {
    return static_cast<double>(h >> 11) * 0x1.0p-53;
}

/// Geometric variable on {0, 1, 2, ...} with P(k) = (1-q) q^k, drawn by CDF
/// inversion from the mixed bits. q = 0 always yields 0.
inline int sample_geometric(double q, uint64_t bits) {
    if (q < 0.0 || q >= 1.0) throw InputError("sample_geometric: need 0 <= q < 1");
    if (q == 0.0) return 0;
    double u = uniform01(bits);
    double term = 1.0 - q;
    double cum = term;
    int k = 0;
    while (u >= cum) {
        term *= q;
        cum += term;
        ++k;
        if (term <= 0.0 || k > 100'000'000)
            throw InternalError("sample_geometric: inversion failed to terminate");
    }
    return k;
}

} // namespace schurlpp

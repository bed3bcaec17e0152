#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <functional>
#include <stdexcept>

#include "taulab/rational.hpp"

namespace taulab {

// splitmix64: the documented mixing PRNG. A seed fully determines every
// sampled point; per-check streams are derived with mix_seed below.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    uint64_t below(uint64_t n) { return next() % n; }

    long int_in(long lo, long hi) { // inclusive
        return lo + (long)below((uint64_t)(hi - lo + 1));
    }

    // numerator uniform in [-50,50] \ {0}, denominator in [1,20]
    Rat rational() {
        long n = int_in(-50, 50);
        while (n == 0) n = int_in(-50, 50);
        return Rat(n, int_in(1, 20));
    }

    // nonzero rational
    Rat rational_nonzero() { return rational(); }

    // rational satisfying pred; throws after cap resamples
    Rat rational_such_that(const std::function<bool(const Rat&)>& pred, int cap = 1000) {
        for (int i = 0; i < cap; ++i) {
            Rat r = rational();
            if (pred(r)) return r;
        }
        throw std::runtime_error("Rng: resample cap exceeded");
    }

    std::vector<Rat> rationals(int n) {
        std::vector<Rat> out;
        out.reserve(n);
        for (int i = 0; i < n; ++i) out.push_back(rational());
        return out;
    }

    // real in (lo, hi) with 9 uniform decimal digits, as a double
    double real_in(double lo, double hi) {
        double u = (double)(next() >> 11) / 9007199254740992.0; // 2^53
        return lo + u * (hi - lo);
    }
};

inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// per-check seed = mix(suite seed, check name)
inline uint64_t mix_seed(uint64_t seed, const std::string& name) {
    Rng r(seed ^ fnv1a64(name));
    return r.next();
}

} // namespace taulab

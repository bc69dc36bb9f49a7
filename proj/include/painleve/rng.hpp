#ifndef PAINLEVE_RNG_HPP
#define PAINLEVE_RNG_HPP

#include <cstdint>
#include <string>

#include "painleve/rational.hpp"

namespace painleve {

// Deterministic splitmix64 stream. Per-check generators are derived as
// hash(master seed, check id), so subsetting suites never shifts the
// sample points of another check.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    static Rng derive(uint64_t master_seed, const std::string& check_id) {
        uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (unsigned char c : check_id) {
            h ^= c;
            h *= 1099511628211ull;
        }
        return Rng(master_seed ^ h);
    }

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi] inclusive
    int64_t uniform(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    // numerator uniform in [-10^6, 10^6], denominator in [1, 10^6]
    Rational rational() {
        long num = static_cast<long>(uniform(-1000000, 1000000));
        long den = static_cast<long>(uniform(1, 1000000));
        return make_rational(num, den);
    }

    Rational nonzero_rational() {
        for (;;) {
            Rational r = rational();
            if (r != 0) return r;
        }
    }

private:
    uint64_t state_;
};

}  // namespace painleve

#endif
